use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::checks::wide_spread_violations_with;
use super::{pow2_floor, RealizeError};
use crate::arrangement::{containing_slab, extract_description, is_simple, LineArrangement, Slab};
use crate::geometry::{acute_angle_at_least, int, rat, Point, Rational, RationalRotation, Sector, Vector};
use crate::reduce::{reduce_sectors, COPIES};
use crate::serde_rational;
use crate::transmission::{
    containment_matrix, graph_diff, graph_from_matrix, DiffReport, Instance, LabelledDigraph, VertexLabel,
};

/// Upper bound on the number of `τ` halvings tried by [`realize_sectors`].
pub const MAX_ROUNDS: u32 = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SectorParameters {
    pub slab: Slab,
    /// Vertical offset between neighbouring copies of a line.
    #[serde(with = "serde_rational")]
    pub tau: Rational,
    /// Half opening angle is `2·atan(t)`.
    #[serde(with = "serde_rational")]
    pub t: Rational,
    pub alpha_half: RationalRotation,
    /// Backward shift of `SA` apexes from their crossing.
    #[serde(with = "serde_rational")]
    pub delta: Rational,
    /// Slack added to every squared radius of `SA` and `SB`.
    #[serde(with = "serde_rational")]
    pub epsilon: Rational,
    /// Zero-based round that succeeded.
    pub round: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectorRealization {
    pub instance: Instance,
    pub parameters: SectorParameters,
    /// Transmission graph of `instance`, equal to the sector reduction.
    pub graph: LabelledDigraph,
}

struct Input {
    slopes: Vec<Rational>,
    intercepts: Vec<Rational>,
    slab: Slab,
    m2: Rational,
    dm_min: Rational,
    dm_max: Rational,
    tau0: Rational,
}

fn shift(tau: &Rational, m: usize) -> Rational {
    match m {
        1 => tau.clone(),
        2 => Rational::from_integer(0.into()),
        _ => -tau,
    }
}

impl Input {
    fn new(l: &LineArrangement, slab: Slab) -> Input {
        let lines = l.lines();
        let n = lines.len();
        let slopes: Vec<Rational> = lines.iter().map(|x| x.slope()).collect();
        let intercepts: Vec<Rational> = lines.iter().map(|x| x.intercept()).collect();
        let max_abs = slopes.iter().map(|m| m.abs()).max().expect("at least two lines");
        let m2 = Rational::one() + &max_abs * &max_abs;

        let mut dms = Vec::new();
        let mut gaps = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                dms.push((&slopes[j] - &slopes[i]).abs());
                for x in [&slab.x_left, &slab.x_right] {
                    gaps.push((lines[i].y_at(x) - lines[j].y_at(x)).abs());
                }
            }
        }
        for ((i, j), p) in l.intersections() {
            for (k, line) in lines.iter().enumerate() {
                if k != i && k != j {
                    gaps.push((line.y_at(&p.x) - &p.y).abs());
                }
            }
        }
        let dm_min = dms.iter().min().expect("non-empty").clone();
        let dm_max = dms.iter().max().expect("non-empty").clone();
        let gap = gaps.into_iter().min().expect("non-empty");
        let tau0 = pow2_floor(
            &[&gap * &dm_min / (int(16) * &m2), gap / int(4), &dm_min / int(4)]
                .into_iter()
                .min()
                .expect("non-empty"),
        );
        Input {
            slopes,
            intercepts,
            slab,
            m2,
            dm_min,
            dm_max,
            tau0,
        }
    }

    fn copy_y(&self, i: usize, m: usize, tau: &Rational, x: &Rational) -> Rational {
        &self.slopes[i] * x + &self.intercepts[i] + shift(tau, m)
    }

    fn copy_point(&self, i: usize, m: usize, tau: &Rational, x: &Rational) -> Point {
        Point::new(x.clone(), self.copy_y(i, m, tau, x))
    }

    /// Crossings `(x, k, mm)` of copy `(i, m)`, sorted by `x`, if they follow
    /// the expected group layout strictly inside the slab.
    fn crossings(&self, i: usize, m: usize, tau: &Rational, order: &[usize]) -> Option<Vec<(Rational, usize, usize)>> {
        let n = self.slopes.len();
        let mut xs = Vec::with_capacity(3 * (n - 1));
        for k in (0..n).filter(|&k| k != i) {
            for mm in COPIES {
                let x = (&self.intercepts[i] + shift(tau, m) - &self.intercepts[k] - shift(tau, mm))
                    / (&self.slopes[k] - &self.slopes[i]);
                xs.push((x, k + 1, mm));
            }
        }
        xs.sort();
        let inside = xs
            .iter()
            .all(|(x, _, _)| x > &self.slab.x_left && x < &self.slab.x_right);
        let strict = xs.windows(2).all(|w| w[0].0 < w[1].0);
        let layout = order.iter().enumerate().all(|(g, &k)| {
            let want: [usize; 3] = if k > i + 1 { [1, 2, 3] } else { [3, 2, 1] };
            (0..3).all(|j| {
                let (_, kk, mm) = &xs[3 * g + j];
                *kk == k && *mm == want[j]
            })
        });
        (inside && strict && layout).then_some(xs)
    }
}

/// Builds the sector instance (three parallel copies per line) and checks it
/// against the sector reduction. `τ` starts from a clearance bound and is
/// halved until the transmission graph matches and the instance is wide
/// spread, at most `max_rounds` times.
pub fn realize_sectors_with_limit(l: &LineArrangement, max_rounds: u32) -> Result<SectorRealization, RealizeError> {
    let slab = containing_slab(l)?;
    if !is_simple(l) {
        return Err(RealizeError::NonSimpleArrangement);
    }
    let desc = extract_description(l);
    let expected = reduce_sectors(&desc)?;
    let input = Input::new(l, slab);
    let orders: Vec<Vec<usize>> = (1..=desc.n)
        .map(|i| desc.simple_order(i).expect("simple arrangement"))
        .collect();

    let mut last_diff = DiffReport::default();
    let mut tau = input.tau0.clone();
    for round in 0..max_rounds {
        if round > 0 {
            tau /= int(2);
        }
        let Some((inst, params)) = build_round(l, &input, &orders, &tau, round) else {
            continue;
        };
        let matrix = containment_matrix(&inst);
        let graph = graph_from_matrix(&inst, &matrix);
        let diff = graph_diff(&graph, &expected);
        if !diff.is_empty() {
            last_diff = diff;
            continue;
        }
        if wide_spread_violations_with(&inst, &matrix)
            .map(|v| !v.is_empty())
            .unwrap_or(true)
        {
            continue;
        }
        return Ok(SectorRealization {
            instance: inst,
            parameters: params,
            graph,
        });
    }
    Err(RealizeError::ParameterSearchExhausted {
        rounds: max_rounds,
        last_diff: Box::new(last_diff),
    })
}

pub fn realize_sectors(l: &LineArrangement) -> Result<SectorRealization, RealizeError> {
    realize_sectors_with_limit(l, MAX_ROUNDS)
}

fn build_round(
    l: &LineArrangement,
    input: &Input,
    orders: &[Vec<usize>],
    tau: &Rational,
    round: u32,
) -> Option<(Instance, SectorParameters)> {
    let n = input.slopes.len();
    let slab = &input.slab;
    let mut crossings = Vec::with_capacity(3 * n);
    for (i, order) in orders.iter().enumerate() {
        for m in COPIES {
            crossings.push(((i, m), input.crossings(i, m, tau, order)?));
        }
    }

    let gx = crossings
        .iter()
        .flat_map(|(_, xs)| {
            let mut walls = vec![&slab.x_left];
            walls.extend(xs.iter().map(|c| &c.0));
            walls.push(&slab.x_right);
            walls.windows(2).map(|w| w[1] - w[0]).collect::<Vec<_>>()
        })
        .min()
        .expect("non-empty");
    let v = tau.clone().min(&input.dm_min * &gx / int(2));
    let width = slab.width();
    let r2 = &width * &width * &input.m2;
    let k = (&r2 + int(2)) * (&input.m2 + int(1)) / int(2);
    let mut t = pow2_floor(
        &[rat(1, 8), &v / (int(4) * &k), Rational::one() / (int(8) * &input.m2)]
            .into_iter()
            .min()
            .expect("non-empty"),
    );
    let dirs: Vec<Vector> = l.lines().iter().map(|x| x.direction()).collect();
    let mut half = RationalRotation::from_parameter(&t);
    while !spread_ok(&dirs, &half) {
        t /= int(2);
        half = RationalRotation::from_parameter(&t);
    }
    let delta = pow2_floor(
        &[
            &gx / int(4),
            &t * &gx / (int(8) * &input.dm_max),
            &v / (int(4) * &input.dm_max),
        ]
        .into_iter()
        .min()
        .expect("non-empty"),
    );
    let small = v.min(gx);
    let epsilon = pow2_floor(&Rational::one().min(&small * &small / int(16)));

    let mut inst = Instance::new();
    let mut apexes = Vec::with_capacity(3 * n);
    for (i, dir) in dirs.iter().enumerate() {
        for m in COPIES {
            let apex = input.copy_point(i, m, tau, &slab.x_left);
            let sc = Sector::new(
                apex.clone(),
                dir.clone(),
                half.clone(),
                &width * &width * (Rational::one() + &input.slopes[i] * &input.slopes[i]),
            )
            .ok()?;
            inst.push(VertexLabel::SC(i + 1, m), sc);
            apexes.push(apex);
        }
    }
    let mut sbs = Vec::new();
    for (idx, ((i, m), xs)) in crossings.iter().enumerate() {
        let (i, m) = (*i, *m);
        let back = -&dirs[i];
        let sc_apex = &apexes[idx];
        let make = |x: &Rational| -> Option<Sector> {
            let apex = input.copy_point(i, m, tau, x);
            let r = apex.dist_sq(sc_apex) + &epsilon;
            Sector::new(apex, back.clone(), half.clone(), r).ok()
        };
        for (pos, (x, k, mm)) in xs.iter().enumerate() {
            inst.push(VertexLabel::SA(i + 1, m, *k, *mm), make(&(x - &delta))?);
            let next = xs.get(pos + 1).map(|c| &c.0).unwrap_or(&slab.x_right);
            sbs.push((VertexLabel::SB(i + 1, m, *k, *mm), make(&((x + next) / int(2)))?));
        }
    }
    for (label, s) in sbs {
        inst.push(label, s);
    }

    Some((
        inst,
        SectorParameters {
            slab: slab.clone(),
            tau: tau.clone(),
            t,
            alpha_half: half,
            delta,
            epsilon,
            round,
        },
    ))
}

/// Every pair of line directions is at least `2α` apart.
fn spread_ok(dirs: &[Vector], half: &RationalRotation) -> bool {
    let bound = half.doubled().doubled();
    dirs.iter().enumerate().all(|(i, u)| {
        dirs[i + 1..]
            .iter()
            .all(|v| acute_angle_at_least(u, v, &bound).expect("non-zero directions"))
    })
}
