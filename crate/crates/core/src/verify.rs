//! Random instance generation and end-to-end round trips
//! (arrangement → description → reduction vs. arrangement → realization →
//! transmission graph).

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arrangement::{extract_description, Description, LineArrangement, Slab};
use num_traits::Zero;

use crate::geometry::{
    int, line_intersection, rat, rotate, Line, Point, Rational, RationalRotation, Sector, Turn, Vector,
};
use crate::realize::{
    check_observation1, check_ordering_gadget, is_equiangular, realize_sectors, realize_segments,
    wide_spread_violations_with, CheckError, RealizeError, SectorParameters, SegmentParameters,
};
use crate::reduce::{reduce_sectors_with, reduce_segments_with, ReduceError, SectorFamily, SegmentFamily, COPIES};
use crate::transmission::{
    containment_matrix, graph_diff, graph_from_matrix, DiffReport, Instance, LabelledDigraph, VertexLabel,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum VerifyError {
    #[error("invalid random spec: {0}")]
    InvalidSpec(String),
    #[error("no simple arrangement found after {attempts} attempts")]
    SamplingExhausted { attempts: u32 },
    #[error(transparent)]
    Realize(#[from] RealizeError),
    #[error(transparent)]
    Reduce(#[from] ReduceError),
    #[error(transparent)]
    Check(#[from] CheckError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RandomSpec {
    pub n: usize,
    pub seed: u64,
    pub coord_bound: i64,
}

/// Whole-arrangement attempts before giving up.
pub const SAMPLING_BUDGET: u32 = 1_000;
const LINE_TRIES: u32 = 1_000;

/// `n` lines `a·x + b·y = c` with integer coefficients in
/// `[-coord_bound, coord_bound]`, `b != 0`, pairwise non-parallel, no three
/// concurrent. Lines are drawn one at a time and rejected when they break
/// simplicity; the whole draw restarts if a line cannot be placed.
pub fn random_simple_arrangement(spec: RandomSpec) -> Result<LineArrangement, VerifyError> {
    if spec.n < 2 {
        return Err(VerifyError::InvalidSpec(format!("n = {} < 2", spec.n)));
    }
    if spec.coord_bound < 1 {
        return Err(VerifyError::InvalidSpec(format!(
            "coordBound = {} < 1",
            spec.coord_bound
        )));
    }
    let b = spec.coord_bound;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    'attempt: for _ in 0..SAMPLING_BUDGET {
        let mut lines: Vec<Line> = Vec::with_capacity(spec.n);
        let mut points = Vec::new();
        while lines.len() < spec.n {
            let mut placed = false;
            for _ in 0..LINE_TRIES {
                let bb = loop {
                    let v = rng.random_range(-b..=b);
                    if v != 0 {
                        break v;
                    }
                };
                let line = Line {
                    a: int(rng.random_range(-b..=b)),
                    b: int(bb),
                    c: int(rng.random_range(-b..=b)),
                };
                if lines.iter().any(|l| l.slope() == line.slope()) || points.iter().any(|p| line.contains(p)) {
                    continue;
                }
                for l in &lines {
                    points.push(line_intersection(l, &line).expect("slopes differ"));
                }
                lines.push(line);
                placed = true;
                break;
            }
            if !placed {
                continue 'attempt;
            }
        }
        return Ok(LineArrangement::new(lines).expect("non-vertical, distinct slopes"));
    }
    Err(VerifyError::SamplingExhausted {
        attempts: SAMPLING_BUDGET,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckerResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckerResult {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        CheckerResult {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "camelCase")]
pub enum RoundTripParameters {
    Segments { slab: Slab, parameters: SegmentParameters },
    Sectors { parameters: SectorParameters },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RoundTripReport {
    pub description: Description,
    pub graph_from_reduction: LabelledDigraph,
    pub graph_from_geometry: LabelledDigraph,
    pub diff: DiffReport,
    pub checker_results: Vec<CheckerResult>,
    pub parameters: RoundTripParameters,
}

impl RoundTripReport {
    pub fn passed(&self) -> bool {
        self.diff.is_empty() && self.checker_results.iter().all(|c| c.passed)
    }
}

impl fmt::Display for RoundTripReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "round trip: {} ({} vertices, {} edges from reduction; {} edges from geometry)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.graph_from_reduction.vertex_count(),
            self.graph_from_reduction.edge_count(),
            self.graph_from_geometry.edge_count(),
        )?;
        if !self.diff.is_empty() {
            write!(f, "{}", self.diff)?;
        }
        for c in &self.checker_results {
            writeln!(
                f,
                "  [{}] {}: {}",
                if c.passed { "ok" } else { "FAIL" },
                c.name,
                c.detail
            )?;
        }
        Ok(())
    }
}

pub fn round_trip_segments(l: &LineArrangement) -> Result<RoundTripReport, VerifyError> {
    round_trip_segments_with(l, &SegmentFamily::ALL)
}

/// Segment round trip against a reduction restricted to `families`.
pub fn round_trip_segments_with(
    l: &LineArrangement,
    families: &[SegmentFamily],
) -> Result<RoundTripReport, VerifyError> {
    let description = extract_description(l);
    let expected = reduce_segments_with(&description, families)?;
    let realization = realize_segments(l)?;
    let matrix = containment_matrix(&realization.instance);
    let geometry = graph_from_matrix(&realization.instance, &matrix);
    let diff = graph_diff(&geometry, &expected);

    let busy_a: Vec<String> = realization
        .instance
        .entries
        .iter()
        .zip(&matrix)
        .filter(|(e, row)| matches!(e.label, VertexLabel::A(..)) && row.iter().any(|&x| x))
        .map(|(e, _)| e.label.to_string())
        .collect();
    let checker_results = vec![CheckerResult::new(
        "a-segments-isolated",
        busy_a.is_empty(),
        if busy_a.is_empty() {
            "no A segment contains another distinguished point".to_string()
        } else {
            format!("A segments with out-edges: {}", busy_a.join(", "))
        },
    )];

    Ok(RoundTripReport {
        description,
        graph_from_reduction: expected,
        graph_from_geometry: geometry,
        diff,
        checker_results,
        parameters: RoundTripParameters::Segments {
            slab: realization.slab,
            parameters: realization.parameters,
        },
    })
}

pub fn round_trip_sectors(l: &LineArrangement) -> Result<RoundTripReport, VerifyError> {
    round_trip_sectors_with(l, &SectorFamily::ALL)
}

/// Sector round trip against a reduction restricted to `families`. The
/// realization itself is always searched against the full reduction.
pub fn round_trip_sectors_with(l: &LineArrangement, families: &[SectorFamily]) -> Result<RoundTripReport, VerifyError> {
    let description = extract_description(l);
    let expected = reduce_sectors_with(&description, families)?;
    let realization = realize_sectors(l)?;
    let diff = graph_diff(&realization.graph, &expected);
    let checker_results = sector_checks(&realization.instance, &description)?;
    Ok(RoundTripReport {
        description,
        graph_from_reduction: expected,
        graph_from_geometry: realization.graph,
        diff,
        checker_results,
        parameters: RoundTripParameters::Sectors {
            parameters: realization.parameters,
        },
    })
}

/// The coupled `SA`/`SB` children of `SC(i, m)` in description order: the
/// groups follow `O^i`, copies inside a group follow the local order, and
/// each `SA` precedes its `SB`.
pub fn gadget_order(d: &Description, i: usize, m: usize) -> Vec<VertexLabel> {
    let order = d.simple_order(i).unwrap_or_default();
    let mut out = Vec::with_capacity(6 * order.len());
    for k in order {
        let copies: Vec<usize> = if k > i {
            COPIES.to_vec()
        } else {
            COPIES.iter().rev().copied().collect()
        };
        for mm in copies {
            out.push(VertexLabel::SA(i, m, k, mm));
            out.push(VertexLabel::SB(i, m, k, mm));
        }
    }
    out
}

/// Equiangular, wide-spread, mutual-couple sweep, ordering-gadget sweep and
/// the `α ≤ π/4` regime on a sector instance labelled for description `d`.
pub fn sector_checks(inst: &Instance, d: &Description) -> Result<Vec<CheckerResult>, VerifyError> {
    let matrix = containment_matrix(inst);
    let mut out = Vec::new();

    let eq = is_equiangular(inst)?;
    out.push(CheckerResult::new(
        "equiangular",
        eq,
        if eq {
            "all sectors share one half-angle"
        } else {
            "half-angles differ"
        },
    ));

    let violations = wide_spread_violations_with(inst, &matrix)?;
    out.push(CheckerResult::new(
        "wide-spread",
        violations.is_empty(),
        match violations.first() {
            None => "no qualifying pair is closer than 2α".to_string(),
            Some(v) => format!("{} violations, first: {v}", violations.len()),
        },
    ));

    let sectors: Vec<&Sector> = inst
        .entries
        .iter()
        .map(|e| {
            e.object
                .as_sector()
                .ok_or_else(|| CheckError::NonSectorObject(e.label.clone()))
        })
        .collect::<Result<_, _>>()?;
    let mut couples = 0usize;
    let mut failures = Vec::new();
    for i in 0..sectors.len() {
        for j in i + 1..sectors.len() {
            if matrix[i][j] && matrix[j][i] {
                couples += 1;
                if check_observation1(sectors[i], sectors[j]) != Ok(true) {
                    failures.push(format!("({}, {})", inst.entries[i].label, inst.entries[j].label));
                }
            }
        }
    }
    out.push(CheckerResult::new(
        "mutual-couple-sweep",
        failures.is_empty(),
        if failures.is_empty() {
            format!("{couples} mutual couples checked")
        } else {
            format!("{} of {couples} couples fail, first {}", failures.len(), failures[0])
        },
    ));

    let index = inst.index();
    let mut gadgets = 0usize;
    let mut gadget_failures = Vec::new();
    for i in 1..=d.n {
        for m in COPIES {
            let Some(l) = index.get(&VertexLabel::SC(i, m)).and_then(|o| o.as_sector()) else {
                gadget_failures.push(format!("SC_{i}_{m} missing"));
                continue;
            };
            let children: Option<Vec<Sector>> = gadget_order(d, i, m)
                .iter()
                .map(|lab| index.get(lab).and_then(|o| o.as_sector()).cloned())
                .collect();
            let Some(children) = children else {
                gadget_failures.push(format!("children of SC_{i}_{m} missing"));
                continue;
            };
            gadgets += 1;
            let report = check_ordering_gadget(l, &children);
            if !report.strict() {
                gadget_failures.push(format!(
                    "SC_{i}_{m}: hypotheses {:?}, order {:?}, ties {:?}",
                    report.hypothesis_failures, report.order_holds, report.ties
                ));
            }
        }
    }
    out.push(CheckerResult::new(
        "ordering-gadget-sweep",
        gadget_failures.is_empty(),
        if gadget_failures.is_empty() {
            format!("{gadgets} gadgets hold with strict order")
        } else {
            format!("{} failures, first {}", gadget_failures.len(), gadget_failures[0])
        },
    ));

    let regime = sectors.iter().all(|s| s.half_angle.is_at_most_eighth_turn());
    out.push(CheckerResult::new(
        "alpha-regime",
        regime,
        if regime {
            "α ≤ π/4 for every sector"
        } else {
            "some sector has α > π/4"
        },
    ));
    Ok(out)
}

fn small_rational(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Rational {
    rat(rng.random_range(-num..=num), rng.random_range(1..=den))
}

fn nonzero_vector(rng: &mut ChaCha8Rng, bound: i64) -> Vector {
    loop {
        let v = Vector::from_ints(rng.random_range(-bound..=bound), rng.random_range(-bound..=bound));
        if !v.is_zero() {
            return v;
        }
    }
}

fn turn(rng: &mut ChaCha8Rng) -> Turn {
    if rng.random_bool(0.5) {
        Turn::Ccw
    } else {
        Turn::Cw
    }
}

/// A random pair of sectors with distinct apexes. About half of the pairs
/// are aimed at each other so that mutual couples are common.
pub fn random_sector_pair(seed: u64) -> (Sector, Sector) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let apex_x = Point::new(small_rational(&mut rng, 20, 4), small_rational(&mut rng, 20, 4));
    let dir_x = nonzero_vector(&mut rng, 5);
    let half_x = RationalRotation::from_parameter(&rat(rng.random_range(1..=12), rng.random_range(1..=6)));
    let half_y = RationalRotation::from_parameter(&rat(rng.random_range(1..=12), rng.random_range(1..=6)));

    let apex_y = if rng.random_bool(0.5) {
        let spread = RationalRotation::from_parameter(&rat(rng.random_range(0..=4), 8));
        let offset = rotate(&dir_x, &spread, turn(&mut rng)).scale(&rat(rng.random_range(1..=12), 4));
        &apex_x + &offset
    } else {
        Point::new(small_rational(&mut rng, 20, 4), small_rational(&mut rng, 20, 4))
    };
    let apex_y = if apex_y == apex_x {
        &apex_y + &Vector::from_ints(1, 0)
    } else {
        apex_y
    };
    let dir_y = if rng.random_bool(0.5) {
        let spread = RationalRotation::from_parameter(&rat(rng.random_range(0..=4), 8));
        rotate(&(&apex_x - &apex_y), &spread, turn(&mut rng))
    } else {
        nonzero_vector(&mut rng, 5)
    };
    let d2 = apex_x.dist_sq(&apex_y);
    let reach = |rng: &mut ChaCha8Rng| &d2 * rat(rng.random_range(1..=12), 6) + rat(rng.random_range(0..=3), 4);
    let rx = reach(&mut rng);
    let ry = reach(&mut rng);
    (
        Sector::new(apex_x, dir_x, half_x, rx).expect("valid sector"),
        Sector::new(apex_y, dir_y, half_y, ry).expect("valid sector"),
    )
}

/// Two sectors with perpendicular bisectors and half-angles below
/// `2·atan(1/4)`, placed at random.
pub fn perpendicular_probe(seed: u64) -> (Sector, Sector) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let u = nonzero_vector(&mut rng, 5);
    let v = rotate(&u, &RationalRotation::quarter_turn(), turn(&mut rng));
    let half = |rng: &mut ChaCha8Rng| RationalRotation::from_parameter(&rat(rng.random_range(1..=4), 16));
    let mk = |rng: &mut ChaCha8Rng, dir: Vector| {
        let apex = Point::new(small_rational(rng, 20, 4), small_rational(rng, 20, 4));
        let h = half(rng);
        let r = rat(rng.random_range(1..=4000), 4);
        Sector::new(apex, dir, h, r).expect("valid sector")
    };
    let x = mk(&mut rng, u);
    let y = mk(&mut rng, v);
    (x, y)
}

/// A sector `l` and `len` sectors `a_1, …, a_len` meeting the ordering
/// gadget hypotheses: apexes at increasing distance along the bisector of
/// `l` with small sideways shifts, each `a_j` aimed back at `l` with a
/// slight random tilt. Draws are repeated until the hypotheses hold exactly.
pub fn random_gadget(seed: u64, len: usize) -> (Sector, Vec<Sector>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let apex = Point::new(small_rational(&mut rng, 20, 4), small_rational(&mut rng, 20, 4));
        let u = nonzero_vector(&mut rng, 6);
        let t = rat(rng.random_range(1..=4), 40);
        let half = RationalRotation::from_parameter(&t);
        let mut dist = Rational::zero();
        let mut a = Vec::with_capacity(len);
        for _ in 0..len {
            dist += rat(rng.random_range(1..=8), 4);
            let side = u.perp().scale(&(&t * rat(rng.random_range(-2..=2), 32)));
            let pos = &(&apex + &u.scale(&dist)) + &side;
            let tilt = RationalRotation::from_parameter(&(&t * rat(rng.random_range(0..=3), 8)));
            let back = rotate(&(&apex - &pos), &tilt, turn(&mut rng));
            let r = pos.dist_sq(&apex) + rat(1, 16);
            let h = RationalRotation::from_parameter(&(&t * rat(rng.random_range(4..=7), 4)));
            a.push(Sector::new(pos, back, h, r).expect("valid sector"));
        }
        let reach = apex.dist_sq(a.last().map(|s| &s.apex).unwrap_or(&apex)) + int(1);
        let l = Sector::new(apex, u, half, reach).expect("valid sector");
        if check_ordering_gadget(&l, &a).hypotheses_hold() {
            return (l, a);
        }
    }
}
