//! Line arrangements and their combinatorial descriptions.
//!
//! A [`LineArrangement`] holds non-vertical, pairwise non-parallel lines in
//! ascending slope order. Its [`Description`] records, for every line, the
//! left-to-right order in which the other lines cross it. Line indices in a
//! description are 1-based.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{int, line_intersection, Line, Point, Rational};
use crate::serde_rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArrangementError {
    #[error("line {0} is vertical")]
    VerticalLine(usize),
    #[error("lines {0} and {1} have the same slope")]
    DuplicateSlope(usize, usize),
    #[error("arrangement needs at least {0} lines")]
    TooFewLines(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawArrangement")]
pub struct LineArrangement {
    lines: Vec<Line>,
}

#[derive(Deserialize)]
struct RawArrangement {
    lines: Vec<Line>,
}

impl TryFrom<RawArrangement> for LineArrangement {
    type Error = ArrangementError;

    fn try_from(raw: RawArrangement) -> Result<Self, ArrangementError> {
        slope_sorted(raw.lines)
    }
}

impl LineArrangement {
    /// Equivalent to [`slope_sorted`].
    pub fn new(lines: Vec<Line>) -> Result<Self, ArrangementError> {
        slope_sorted(lines)
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn slopes(&self) -> Vec<Rational> {
        self.lines.iter().map(Line::slope).collect()
    }

    /// Image under a uniform scaling of the plane about the origin.
    pub fn scaled(&self, f: &Rational) -> LineArrangement {
        LineArrangement {
            lines: self.lines.iter().map(|l| l.scaled(f)).collect(),
        }
    }

    pub fn translated(&self, v: &crate::geometry::Vector) -> LineArrangement {
        LineArrangement {
            lines: self.lines.iter().map(|l| l.translated(v)).collect(),
        }
    }

    /// All pairwise intersection points, keyed by 0-based `(i, j)` with `i < j`.
    pub fn intersections(&self) -> Vec<((usize, usize), Point)> {
        let n = self.lines.len();
        let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                let p = line_intersection(&self.lines[i], &self.lines[j])
                    .expect("arrangement lines are pairwise non-parallel");
                out.push(((i, j), p));
            }
        }
        out
    }
}

/// Reindexes `lines` in strictly ascending slope order.
pub fn slope_sorted(lines: Vec<Line>) -> Result<LineArrangement, ArrangementError> {
    if let Some(i) = lines.iter().position(Line::is_vertical) {
        return Err(ArrangementError::VerticalLine(i + 1));
    }
    let mut keyed: Vec<(Rational, usize, Line)> =
        lines.into_iter().enumerate().map(|(i, l)| (l.slope(), i, l)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
    for w in keyed.windows(2) {
        if w[0].0 == w[1].0 {
            return Err(ArrangementError::DuplicateSlope(w[0].1 + 1, w[1].1 + 1));
        }
    }
    Ok(LineArrangement {
        lines: keyed.into_iter().map(|(_, _, l)| l).collect(),
    })
}

/// True iff no three lines pass through a common point.
pub fn is_simple(l: &LineArrangement) -> bool {
    let lines = l.lines();
    for ((i, j), p) in l.intersections() {
        for (k, line) in lines.iter().enumerate() {
            if k != i && k != j && line.contains(&p) {
                return false;
            }
        }
    }
    true
}

/// A vertical slab `x_left < x < x_right` strictly containing every
/// intersection point of an arrangement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Slab {
    #[serde(with = "serde_rational")]
    pub x_left: Rational,
    #[serde(with = "serde_rational")]
    pub x_right: Rational,
}

impl Slab {
    pub fn width(&self) -> Rational {
        &self.x_right - &self.x_left
    }

    /// Crossing of `line` with the left boundary.
    pub fn left_point(&self, line: &Line) -> Point {
        line.point_at(&self.x_left)
    }

    pub fn right_point(&self, line: &Line) -> Point {
        line.point_at(&self.x_right)
    }
}

/// Margin kept between the extreme intersection abscissae and the slab walls.
pub const SLAB_MARGIN: i64 = 2;

/// Slab with walls [`SLAB_MARGIN`] units outside the extreme intersection
/// abscissae. Translation-equivariant.
pub fn containing_slab(l: &LineArrangement) -> Result<Slab, ArrangementError> {
    if l.len() < 2 {
        return Err(ArrangementError::TooFewLines(2));
    }
    let xs: Vec<Rational> = l.intersections().into_iter().map(|(_, p)| p.x).collect();
    let min = xs.iter().min().expect("non-empty").clone();
    let max = xs.iter().max().expect("non-empty").clone();
    Ok(Slab {
        x_left: min - int(SLAB_MARGIN),
        x_right: max + int(SLAB_MARGIN),
    })
}

/// Per-line crossing orders. `orders[i]` lists the blocks of line `i + 1`,
/// each block a set of 1-based line indices crossing at one point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Description {
    pub n: usize,
    pub orders: Vec<Vec<Vec<usize>>>,
}

impl Description {
    pub fn new(n: usize, orders: Vec<Vec<Vec<usize>>>) -> Self {
        Description { n, orders }
    }

    /// Builds a description from singleton orders.
    pub fn from_simple_orders(orders: Vec<Vec<usize>>) -> Self {
        let n = orders.len();
        Description {
            n,
            orders: orders
                .into_iter()
                .map(|o| o.into_iter().map(|k| vec![k]).collect())
                .collect(),
        }
    }

    pub fn is_simple(&self) -> bool {
        self.orders.iter().flatten().all(|b| b.len() == 1)
    }

    /// The crossing sequence of 1-based line `i` when every block is a
    /// singleton.
    pub fn simple_order(&self, i: usize) -> Option<Vec<usize>> {
        self.orders
            .get(i - 1)?
            .iter()
            .map(|b| if b.len() == 1 { Some(b[0]) } else { None })
            .collect()
    }
}

impl fmt::Display for Description {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, o) in self.orders.iter().enumerate() {
            write!(f, "O^{}:", i + 1)?;
            for b in o {
                let inner: Vec<String> = b.iter().map(|k| k.to_string()).collect();
                write!(f, " {{{}}}", inner.join(","))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Reads the crossing orders off a line arrangement.
pub fn extract_description(l: &LineArrangement) -> Description {
    let lines = l.lines();
    let n = lines.len();
    let mut orders = Vec::with_capacity(n);
    for i in 0..n {
        let mut crossings: Vec<(Point, usize)> = (0..n)
            .filter(|&j| j != i)
            .map(|j| {
                let p = line_intersection(&lines[i], &lines[j]).expect("arrangement lines are pairwise non-parallel");
                (p, j + 1)
            })
            .collect();
        crossings.sort_by(|a, b| a.0.x.cmp(&b.0.x).then(a.1.cmp(&b.1)));
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut last: Option<Point> = None;
        for (p, j) in crossings {
            match (&last, blocks.last_mut()) {
                (Some(q), Some(block)) if *q == p => block.push(j),
                _ => blocks.push(vec![j]),
            }
            last = Some(p);
        }
        orders.push(blocks);
    }
    Description { n, orders }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum Violation {
    /// `orders` does not have exactly `n` entries.
    LineCount {
        expected: usize,
        found: usize,
    },
    EmptyBlock {
        line: usize,
        block: usize,
    },
    OutOfRange {
        line: usize,
        index: usize,
    },
    SelfReference {
        line: usize,
    },
    /// `index` occurs in more than one block (or twice in one block).
    BlockOverlap {
        line: usize,
        index: usize,
    },
    Missing {
        line: usize,
        index: usize,
    },
    /// `other` occurs in the order of `line` but not vice versa.
    Asymmetric {
        line: usize,
        other: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::LineCount { expected, found } => {
                write!(f, "expected {expected} crossing orders, found {found}")
            }
            Violation::EmptyBlock { line, block } => write!(f, "line {line}: block {block} is empty"),
            Violation::OutOfRange { line, index } => {
                write!(f, "line {line}: index {index} is out of range")
            }
            Violation::SelfReference { line } => write!(f, "line {line}: order contains the line itself"),
            Violation::BlockOverlap { line, index } => {
                write!(f, "line {line}: index {index} appears more than once")
            }
            Violation::Missing { line, index } => write!(f, "line {line}: index {index} is missing"),
            Violation::Asymmetric { line, other } => {
                write!(f, "line {line} lists {other} but line {other} does not list {line}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// Every block is a singleton.
    pub simple: bool,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn validate_description(d: &Description) -> ValidationReport {
    let mut violations = Vec::new();
    let n = d.n;
    if d.orders.len() != n {
        violations.push(Violation::LineCount {
            expected: n,
            found: d.orders.len(),
        });
    }
    let mut members: Vec<BTreeSet<usize>> = Vec::with_capacity(d.orders.len());
    for (li, order) in d.orders.iter().enumerate() {
        let line = li + 1;
        let mut seen = BTreeSet::new();
        for (bi, block) in order.iter().enumerate() {
            if block.is_empty() {
                violations.push(Violation::EmptyBlock { line, block: bi + 1 });
            }
            for &k in block {
                if k == 0 || k > n {
                    violations.push(Violation::OutOfRange { line, index: k });
                    continue;
                }
                if k == line {
                    violations.push(Violation::SelfReference { line });
                    continue;
                }
                if !seen.insert(k) {
                    violations.push(Violation::BlockOverlap { line, index: k });
                }
            }
        }
        if line <= n {
            for k in (1..=n).filter(|&k| k != line && !seen.contains(&k)) {
                violations.push(Violation::Missing { line, index: k });
            }
        }
        members.push(seen);
    }
    for (li, seen) in members.iter().enumerate() {
        let line = li + 1;
        for &k in seen {
            if let Some(other) = members.get(k - 1) {
                if !other.contains(&line) {
                    violations.push(Violation::Asymmetric { line, other: k });
                }
            }
        }
    }
    ValidationReport {
        violations,
        simple: d.is_simple(),
    }
}

/// Convenience for tests and examples: lines `y = m·x + b` from integer pairs.
pub fn arrangement_from_slopes(pairs: &[(i64, i64)]) -> Result<LineArrangement, ArrangementError> {
    slope_sorted(
        pairs
            .iter()
            .map(|&(m, b)| Line::from_slope_intercept(int(m), int(b)))
            .collect(),
    )
}
