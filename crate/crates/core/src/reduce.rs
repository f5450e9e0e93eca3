//! Description → candidate transmission graph, for line segments and for
//! circular sectors.
//!
//! Both reductions take a valid simple [`Description`] and are pure: the
//! output is a canonical (sorted) [`LabelledDigraph`].
//!
//! Two deliberate amendments to the published edge sets, both required for
//! the forward constructions to reproduce the graph exactly:
//!
//! * segments: `B(i, o_k) → A{i, o_l}` is emitted for `l <= k` (not `l < k`),
//!   matching the placement of `p(B(i, o_k))` between the `k`-th and
//!   `(k+1)`-th crossing;
//! * sectors: the global-order family also contains
//!   `SB(i,m,o_k,m') → SB(i,m,o_l,m'')` for `k > l`
//!   ([`SectorFamily::GlobalOrderB`]).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arrangement::{validate_description, Description, ValidationReport};
use crate::transmission::{LabelledDigraph, VertexLabel};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReduceError {
    #[error("description is not well formed ({} violations)", .0.violations.len())]
    InvalidDescription(ValidationReport),
    #[error("description is not simple")]
    NonSimpleDescription,
}

/// Edge families of the segment reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SegmentFamily {
    /// `C(i) → A{i,k}`.
    CoverA,
    /// `C(i) → B(i,k)` and `B(i,k) → C(i)`.
    CoupleB,
    /// `B(i,o_k) → B(i,o_l)` for `l < k`.
    OrderB,
    /// `B(i,o_k) → A{i,o_l}` for `l <= k`.
    OrderA,
}

impl SegmentFamily {
    pub const ALL: [SegmentFamily; 4] = [
        SegmentFamily::CoverA,
        SegmentFamily::CoupleB,
        SegmentFamily::OrderB,
        SegmentFamily::OrderA,
    ];
}

/// Edge families of the sector reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SectorFamily {
    /// `E_I`: intersection edges.
    Intersection,
    /// `E_C`: mutual couples with the owning `SC`.
    Couple,
    /// `E_GO` as published.
    GlobalOrder,
    /// Inter-group `SB → SB` edges added to `E_GO`.
    GlobalOrderB,
    /// `E_LOI`: local order when the crossing line has the larger index.
    LocalOrderIncreasing,
    /// `E_LOD`: local order when the crossing line has the smaller index.
    LocalOrderDecreasing,
}

impl SectorFamily {
    pub const ALL: [SectorFamily; 6] = [
        SectorFamily::Intersection,
        SectorFamily::Couple,
        SectorFamily::GlobalOrder,
        SectorFamily::GlobalOrderB,
        SectorFamily::LocalOrderIncreasing,
        SectorFamily::LocalOrderDecreasing,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SectorFamily::Intersection => "E_I",
            SectorFamily::Couple => "E_C",
            SectorFamily::GlobalOrder => "E_GO",
            SectorFamily::GlobalOrderB => "E_GO(b->b)",
            SectorFamily::LocalOrderIncreasing => "E_LOI",
            SectorFamily::LocalOrderDecreasing => "E_LOD",
        }
    }
}

/// Copy indices of the sector construction.
pub const COPIES: [usize; 3] = [1, 2, 3];

fn simple_orders(d: &Description) -> Result<Vec<Vec<usize>>, ReduceError> {
    let report = validate_description(d);
    if !report.is_valid() {
        return Err(ReduceError::InvalidDescription(report));
    }
    if !report.simple {
        return Err(ReduceError::NonSimpleDescription);
    }
    Ok((1..=d.n)
        .map(|i| d.simple_order(i).expect("validated simple description"))
        .collect())
}

fn push(g: &mut LabelledDigraph, u: VertexLabel, v: VertexLabel) {
    g.add_edge(u, v)
        .expect("reduction edges join distinct existing vertices");
}

pub fn segment_vertex_count(n: usize) -> usize {
    n + n * (n - 1) / 2 + n * (n - 1)
}

pub fn sector_vertex_count(n: usize) -> usize {
    3 * n + 18 * n * (n - 1)
}

pub fn reduce_segments(d: &Description) -> Result<LabelledDigraph, ReduceError> {
    reduce_segments_with(d, &SegmentFamily::ALL)
}

/// Segment reduction restricted to the given families.
pub fn reduce_segments_with(d: &Description, families: &[SegmentFamily]) -> Result<LabelledDigraph, ReduceError> {
    use VertexLabel::{B, C};
    let orders = simple_orders(d)?;
    let n = d.n;
    let on = |f: SegmentFamily| families.contains(&f);
    let mut g = LabelledDigraph::new();
    for i in 1..=n {
        g.add_vertex(C(i));
        for k in (1..=n).filter(|&k| k != i) {
            g.add_vertex(VertexLabel::a(i, k));
            g.add_vertex(B(i, k));
        }
    }
    for i in 1..=n {
        for k in (1..=n).filter(|&k| k != i) {
            if on(SegmentFamily::CoverA) {
                push(&mut g, C(i), VertexLabel::a(i, k));
            }
            if on(SegmentFamily::CoupleB) {
                push(&mut g, C(i), B(i, k));
                push(&mut g, B(i, k), C(i));
            }
        }
        let order = &orders[i - 1];
        for (pk, &ok) in order.iter().enumerate() {
            for (pl, &ol) in order.iter().enumerate().take(pk + 1) {
                if pl < pk && on(SegmentFamily::OrderB) {
                    push(&mut g, B(i, ok), B(i, ol));
                }
                if on(SegmentFamily::OrderA) {
                    push(&mut g, B(i, ok), VertexLabel::a(i, ol));
                }
            }
        }
    }
    Ok(g)
}

pub fn reduce_sectors(d: &Description) -> Result<LabelledDigraph, ReduceError> {
    reduce_sectors_with(d, &SectorFamily::ALL)
}

/// Sector reduction restricted to the given families.
pub fn reduce_sectors_with(d: &Description, families: &[SectorFamily]) -> Result<LabelledDigraph, ReduceError> {
    use VertexLabel::{SA, SB, SC};
    let orders = simple_orders(d)?;
    let n = d.n;
    let on = |f: SectorFamily| families.contains(&f);
    let mut g = LabelledDigraph::new();
    for i in 1..=n {
        for m in COPIES {
            g.add_vertex(SC(i, m));
            for k in (1..=n).filter(|&k| k != i) {
                for mm in COPIES {
                    g.add_vertex(SA(i, m, k, mm));
                    g.add_vertex(SB(i, m, k, mm));
                }
            }
        }
    }
    for i in 1..=n {
        for m in COPIES {
            for k in (1..=n).filter(|&k| k != i) {
                for mm in COPIES {
                    if on(SectorFamily::Intersection) {
                        push(&mut g, SC(i, m), SA(i, m, k, mm));
                        push(&mut g, SC(i, m), SA(k, mm, i, m));
                    }
                    if on(SectorFamily::Couple) {
                        push(&mut g, SA(i, m, k, mm), SC(i, m));
                        push(&mut g, SC(i, m), SB(i, m, k, mm));
                        push(&mut g, SB(i, m, k, mm), SC(i, m));
                    }
                }
            }

            let order = &orders[i - 1];
            for (pk, &ok) in order.iter().enumerate() {
                // Global order: every crossing earlier along the line.
                for &ol in &order[..pk] {
                    for m1 in COPIES {
                        for m2 in COPIES {
                            if on(SectorFamily::GlobalOrder) {
                                push(&mut g, SA(i, m, ok, m1), SA(i, m, ol, m2));
                                push(&mut g, SA(i, m, ok, m1), SA(ol, m2, i, m));
                                push(&mut g, SA(i, m, ok, m1), SB(i, m, ol, m2));
                                push(&mut g, SB(i, m, ok, m1), SA(i, m, ol, m2));
                                push(&mut g, SB(i, m, ok, m1), SA(ol, m2, i, m));
                            }
                            if on(SectorFamily::GlobalOrderB) {
                                push(&mut g, SB(i, m, ok, m1), SB(i, m, ol, m2));
                            }
                        }
                    }
                }

                // Local order inside the group of three copies of line `ok`.
                let increasing = ok > i;
                let family = if increasing {
                    SectorFamily::LocalOrderIncreasing
                } else {
                    SectorFamily::LocalOrderDecreasing
                };
                if !on(family) {
                    continue;
                }
                // `earlier(m2, m1)`: copy m2 of `ok` is crossed before copy m1.
                let earlier = |m2: usize, m1: usize| if increasing { m2 < m1 } else { m2 > m1 };
                for m1 in COPIES {
                    for m2 in COPIES {
                        if earlier(m2, m1) {
                            push(&mut g, SA(i, m, ok, m1), SA(i, m, ok, m2));
                            push(&mut g, SA(i, m, ok, m1), SA(ok, m2, i, m));
                            push(&mut g, SA(i, m, ok, m1), SB(i, m, ok, m2));
                            push(&mut g, SB(i, m, ok, m1), SB(i, m, ok, m2));
                        }
                        if earlier(m2, m1) || m2 == m1 {
                            push(&mut g, SB(i, m, ok, m1), SA(i, m, ok, m2));
                            push(&mut g, SB(i, m, ok, m1), SA(ok, m2, i, m));
                        }
                    }
                }
            }
        }
    }
    Ok(g)
}
