use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_traits::Signed;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{
    acute_angle_at_least, angle_at_most, project_param, GeometryError, PreparedSector, RationalRotation, Sector, Vector,
};
use crate::transmission::{containment_matrix, Instance, VertexLabel};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CheckError {
    #[error("sectors do not form a mutual couple")]
    NotAMutualCouple,
    #[error("sectors share their apex")]
    CoincidentApexes,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("object {0} is not a circular sector")]
    NonSectorObject(VertexLabel),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

pub fn is_mutual_couple(x: &Sector, y: &Sector) -> bool {
    y.contains(&x.apex) && x.contains(&y.apex)
}

/// For a mutual couple, the bisector directions are antiparallel up to the
/// sum of the two half opening angles.
///
/// Sectors with a common apex always contain each other's apex and need not
/// satisfy the bound, so they are rejected with
/// [`CheckError::CoincidentApexes`].
pub fn check_observation1(x: &Sector, y: &Sector) -> Result<bool, CheckError> {
    if !is_mutual_couple(x, y) {
        return Err(CheckError::NotAMutualCouple);
    }
    if x.apex == y.apex {
        return Err(CheckError::CoincidentApexes);
    }
    let bound = x.half_angle.compose(&y.half_angle);
    // Half-angles lie in (0, π), so the sum lies in (0, 2π); from π on the
    // bound is vacuous.
    if bound.s.is_negative() || (bound.s == num_traits::Zero::zero() && bound.c.is_negative()) {
        return Ok(true);
    }
    Ok(angle_at_most(&x.direction, &-&y.direction, &bound)?)
}

fn max_half_angle<'a>(a: &'a RationalRotation, b: &'a RationalRotation) -> &'a RationalRotation {
    if a.cmp_angle(b).is_ge() {
        a
    } else {
        b
    }
}

/// The outer rays of `x` meet the bisector of `y` at an acute angle of at
/// least `β − max(half(x), half(y))`, given that the bisectors meet at an
/// acute angle of at least `β` and `β` exceeds both half-angles.
pub fn check_observation2(x: &Sector, y: &Sector, beta: &RationalRotation) -> Result<bool, CheckError> {
    if !beta.is_unit() || beta.s.is_negative() || beta.c.is_negative() {
        return Err(CheckError::PreconditionViolated("beta must lie in [0, π/2]".into()));
    }
    if !acute_angle_at_least(&x.direction, &y.direction, beta)? {
        return Err(CheckError::PreconditionViolated(
            "bisectors meet at an acute angle below beta".into(),
        ));
    }
    let max_half = max_half_angle(&x.half_angle, &y.half_angle);
    if !beta.cmp_angle(max_half).is_gt() {
        return Err(CheckError::PreconditionViolated(
            "beta does not exceed the larger half opening angle".into(),
        ));
    }
    let bound = beta.compose(&max_half.inverse());
    let (lo, hi) = x.outer_rays();
    Ok(acute_angle_at_least(&lo, &y.direction, &bound)? && acute_angle_at_least(&hi, &y.direction, &bound)?)
}

fn sectors(inst: &Instance) -> Result<Vec<&Sector>, CheckError> {
    inst.entries
        .iter()
        .map(|e| {
            e.object
                .as_sector()
                .ok_or_else(|| CheckError::NonSectorObject(e.label.clone()))
        })
        .collect()
}

/// All sectors share one opening angle (exact equality of the rotations).
pub fn is_equiangular(inst: &Instance) -> Result<bool, CheckError> {
    let secs = sectors(inst)?;
    Ok(secs.windows(2).all(|w| w[0].half_angle == w[1].half_angle))
}

/// A pair of sectors that shares a contained apex, has no common couple
/// partner, and whose bisectors are too close in angle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WideSpreadViolation {
    pub first: VertexLabel,
    pub second: VertexLabel,
    pub shared_apex_of: VertexLabel,
}

impl fmt::Display for WideSpreadViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} and {} both contain p({}) but their bisectors are closer than 2α",
            self.first, self.second, self.shared_apex_of
        )
    }
}

pub fn is_wide_spread(inst: &Instance) -> Result<bool, CheckError> {
    Ok(wide_spread_violations(inst)?.is_empty())
}

/// Pairs `(c, c')` with some `d` whose apex lies in both (`d` may be `c` or
/// `c'`), which are not themselves a mutual couple and have no common mutual
/// couple partner, must have bisectors at acute angle `>= 2·max α`.
pub fn wide_spread_violations(inst: &Instance) -> Result<Vec<WideSpreadViolation>, CheckError> {
    let matrix = containment_matrix(inst);
    wide_spread_violations_with(inst, &matrix)
}

pub(crate) fn wide_spread_violations_with(
    inst: &Instance,
    matrix: &[Vec<bool>],
) -> Result<Vec<WideSpreadViolation>, CheckError> {
    let secs = sectors(inst)?;
    let m = secs.len();
    if m < 2 {
        return Ok(Vec::new());
    }
    let contains = |i: usize, j: usize| i == j || matrix[i][j];
    let couple = |i: usize, j: usize| matrix[i][j] && matrix[j][i];
    let partners: Vec<BTreeSet<usize>> = (0..m).map(|i| (0..m).filter(|&j| couple(i, j)).collect()).collect();

    let max_half = secs
        .iter()
        .map(|s| &s.half_angle)
        .fold(&secs[0].half_angle, |a, b| max_half_angle(a, b));
    // 2α = four half-angles; beyond a quarter turn no acute angle can pass.
    let bound = max_half.doubled().doubled();
    let bound_ok = max_half.is_at_most_eighth_turn();

    // Bisectors repeat across many sectors; decide each direction pair once.
    let mut dir_ids: HashMap<&Vector, usize> = HashMap::new();
    let ids: Vec<usize> = secs
        .iter()
        .map(|s| {
            let next = dir_ids.len();
            *dir_ids.entry(&s.direction).or_insert(next)
        })
        .collect();
    let mut memo: HashMap<(usize, usize), bool> = HashMap::new();

    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for d in 0..m {
        let holders: Vec<usize> = (0..m).filter(|&c| contains(c, d)).collect();
        for (a, &c1) in holders.iter().enumerate() {
            for &c2 in &holders[a + 1..] {
                if !seen.insert((c1, c2)) {
                    continue;
                }
                if couple(c1, c2) || !partners[c1].is_disjoint(&partners[c2]) {
                    continue;
                }
                let key = (ids[c1].min(ids[c2]), ids[c1].max(ids[c2]));
                let wide = match memo.get(&key) {
                    Some(&w) => w,
                    None => {
                        let w = bound_ok && acute_angle_at_least(&secs[c1].direction, &secs[c2].direction, &bound)?;
                        memo.insert(key, w);
                        w
                    }
                };
                if !wide {
                    out.push(WideSpreadViolation {
                        first: inst.entries[c1].label.clone(),
                        second: inst.entries[c2].label.clone(),
                        shared_apex_of: inst.entries[d].label.clone(),
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Outcome of checking the ordering gadget on a sector `l` and a sequence
/// `a_1, …, a_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GadgetReport {
    /// Failed membership hypotheses, or a regime violation (opening angle
    /// above a quarter turn's half).
    pub hypothesis_failures: Vec<String>,
    /// `Some(true)` iff the projections along `u(l)` are non-decreasing.
    /// `None` when the hypotheses fail.
    pub order_holds: Option<bool>,
    /// Consecutive positions `(i, i + 1)` (1-based) with equal projections.
    pub ties: Vec<(usize, usize)>,
}

impl GadgetReport {
    pub fn hypotheses_hold(&self) -> bool {
        self.hypothesis_failures.is_empty()
    }

    /// Hypotheses imply conclusion.
    pub fn passed(&self) -> bool {
        !self.hypotheses_hold() || self.order_holds == Some(true)
    }

    /// Passed, hypotheses held, and the order is strict.
    pub fn strict(&self) -> bool {
        self.hypotheses_hold() && self.order_holds == Some(true) && self.ties.is_empty()
    }
}

pub fn check_ordering_gadget(l: &Sector, a: &[Sector]) -> GadgetReport {
    let mut failures = Vec::new();
    let l_prep = PreparedSector::new(l);
    let a_prep: Vec<PreparedSector<'_>> = a.iter().map(PreparedSector::new).collect();
    for (i, s) in std::iter::once(l).chain(a.iter()).enumerate() {
        if !s.half_angle.is_at_most_eighth_turn() {
            failures.push(format!("sector {i} has opening angle above π/4"));
        }
    }
    for (i, ai) in a.iter().enumerate() {
        if !l_prep.contains(&ai.apex) {
            failures.push(format!("p(a_{}) not in l", i + 1));
        }
        if !a_prep[i].contains(&l.apex) {
            failures.push(format!("p(l) not in a_{}", i + 1));
        }
        for (j, aj) in a_prep.iter().enumerate().skip(i + 1) {
            if !aj.contains(&ai.apex) {
                failures.push(format!("p(a_{}) not in a_{}", i + 1, j + 1));
            }
        }
    }
    if !failures.is_empty() {
        return GadgetReport {
            hypothesis_failures: failures,
            order_holds: None,
            ties: Vec::new(),
        };
    }
    let params: Vec<_> = a
        .iter()
        .map(|s| project_param(&l.apex, &l.direction, &s.apex).expect("sector direction is non-zero"))
        .collect();
    let mut ties = Vec::new();
    let mut holds = true;
    for (i, w) in params.windows(2).enumerate() {
        if w[0] == w[1] {
            ties.push((i + 1, i + 2));
        } else if w[0] > w[1] {
            holds = false;
        }
    }
    GadgetReport {
        hypothesis_failures: Vec::new(),
        order_holds: Some(holds),
        ties,
    }
}
