//! Exact predicates against floating-point oracles, and the sector checkers
//! on generated inputs.

use std::f64::consts::PI;

use gtg_core::geometry::{contains_point, rat, rotate, Turn};
use gtg_core::realize::{check_observation1, check_observation2, check_ordering_gadget, is_mutual_couple};
use gtg_core::verify::{perpendicular_probe, random_gadget, random_sector_pair};
use gtg_core::{transmission_graph, Instance, Point, Rational, RationalRotation, Sector, Segment, Vector, VertexLabel};
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn f(q: &Rational) -> f64 {
    q.to_f64().unwrap()
}

fn angle(v: &Vector) -> f64 {
    f(&v.y).atan2(f(&v.x))
}

fn half(r: &RationalRotation) -> f64 {
    f(&r.s).atan2(f(&r.c))
}

/// Unsigned angle between two directions, in `[0, π]`.
fn between(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(2.0 * PI);
    d.min(2.0 * PI - d)
}

// ---------------------------------------------------------------------------
// Strategies
// ---------------------------------------------------------------------------

fn small_rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn point() -> impl Strategy<Value = Point> {
    (small_rational(), small_rational()).prop_map(|(x, y)| Point::new(x, y))
}

fn direction() -> impl Strategy<Value = Vector> {
    (-9i64..=9, -9i64..=9)
        .prop_filter("non-zero", |(x, y)| (*x, *y) != (0, 0))
        .prop_map(|(x, y)| Vector::from_ints(x, y))
}

fn sector() -> impl Strategy<Value = Sector> {
    (point(), direction(), 1i64..=30, 1i64..=10, 1i64..=400).prop_map(|(apex, dir, a, b, r)| {
        Sector::new(apex, dir, RationalRotation::from_parameter(&rat(a, b)), rat(r, 1)).unwrap()
    })
}

// ---------------------------------------------------------------------------
// Containment
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn sector_membership_matches_float_oracle(s in sector(), p in point()) {
        let w = &p - &s.apex;
        let dist = f(&w.norm_sq()).sqrt();
        let radius = f(&s.radius_sq).sqrt();
        let off = if dist == 0.0 { 0.0 } else { between(angle(&w), angle(&s.direction)) };
        let h = half(&s.half_angle);
        prop_assume!((dist - radius).abs() > 1e-9);
        prop_assume!(dist == 0.0 || (off - h).abs() > 1e-9);
        let expected = dist < radius && (dist == 0.0 || off < h);
        prop_assert_eq!(s.contains(&p), expected, "dist {} radius {} off {} half {}", dist, radius, off, h);
    }

    #[test]
    fn segment_membership_matches_parametric_oracle(p in point(), q in point(), t in 0i64..=12, shift in -2i64..=2) {
        prop_assume!(p != q);
        let seg = Segment::new(p.clone(), q.clone()).unwrap();
        let on = &p + &(&q - &p).scale(&rat(t, 12));
        prop_assert!(seg.contains(&on));
        let off = &on + &(&q - &p).perp().scale(&rat(shift, 7));
        prop_assert_eq!(seg.contains(&off), shift == 0);
        let beyond = &q + &(&q - &p).scale(&rat(1, 5));
        prop_assert!(!seg.contains(&beyond));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn transmission_graph_matches_pairwise_membership(sectors in prop::collection::vec(sector(), 2..14)) {
        let mut inst = Instance::new();
        for (i, s) in sectors.iter().enumerate() {
            inst.push(VertexLabel::Free(format!("s{i}")), s.clone());
        }
        let g = transmission_graph(&inst);
        for (i, a) in inst.entries.iter().enumerate() {
            for (j, b) in inst.entries.iter().enumerate() {
                if i == j {
                    continue;
                }
                let want = contains_point(&a.object, b.object.distinguished_point());
                prop_assert_eq!(g.has_edge(&a.label, &b.label), want, "{} -> {}", a.label, b.label);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Rotations
// ---------------------------------------------------------------------------

proptest! {
    #[test]
    fn rotations_are_exact(a in -30i64..=30, b in 1i64..=30, x in -9i64..=9, y in -9i64..=9) {
        let r = RationalRotation::from_parameter(&rat(a, b));
        prop_assert!(r.is_unit());
        prop_assert_eq!(r.compose(&r.inverse()), RationalRotation::identity());
        prop_assert_eq!(r.doubled(), r.compose(&r));
        let v = Vector::from_ints(x, y);
        let w = rotate(&v, &r, Turn::Ccw);
        prop_assert_eq!(w.norm_sq(), v.norm_sq());
        prop_assert_eq!(rotate(&w, &r, Turn::Cw), v);
        let expected = 2.0 * (a as f64 / b as f64).atan();
        prop_assert!((half(&r) - expected).abs() < 1e-9);
    }
}

// ---------------------------------------------------------------------------
// Checkers
// ---------------------------------------------------------------------------

#[test]
fn mutual_couples_have_near_antiparallel_bisectors() {
    let mut couples = 0;
    for seed in 0..3000u64 {
        let (x, y) = random_sector_pair(seed);
        assert_ne!(x.apex, y.apex);
        if !is_mutual_couple(&x, &y) {
            continue;
        }
        couples += 1;
        assert_eq!(check_observation1(&x, &y), Ok(true), "seed {seed}");
        let gap = between(angle(&x.direction), angle(&y.direction) + PI);
        assert!(gap <= half(&x.half_angle) + half(&y.half_angle) + 1e-9, "seed {seed}");
    }
    assert!(couples > 300, "only {couples} couples generated");
}

#[test]
fn perpendicular_narrow_sectors_never_couple() {
    for seed in 0..3000u64 {
        let (x, y) = perpendicular_probe(seed);
        assert!(!is_mutual_couple(&x, &y), "seed {seed}");
    }
}

#[test]
fn coincident_apexes_are_rejected() {
    let (x, mut y) = random_sector_pair(1);
    y.apex = x.apex.clone();
    assert!(check_observation1(&x, &y).is_err());
}

#[test]
fn generated_gadgets_are_ordered() {
    for seed in 0..300u64 {
        let len = 2 + (seed % 7) as usize;
        let (l, a) = random_gadget(seed, len);
        let report = check_ordering_gadget(&l, &a);
        assert!(report.hypotheses_hold(), "seed {seed}");
        assert_eq!(report.order_holds, Some(true), "seed {seed}: {report:?}");
    }
}

proptest! {
    #[test]
    fn outer_rays_stay_away_from_a_distant_bisector(
        dir in direction(),
        hx in 1i64..=10,
        hy in 1i64..=10,
        gap in 0i64..=10,
        turn_ccw in any::<bool>(),
    ) {
        let hx = RationalRotation::from_parameter(&rat(hx, 60));
        let hy = RationalRotation::from_parameter(&rat(hy, 60));
        let beta = RationalRotation::from_parameter(&rat(1, 5));
        let spread = beta.compose(&RationalRotation::from_parameter(&rat(gap, 40)));
        let turn = if turn_ccw { Turn::Ccw } else { Turn::Cw };
        let x = Sector::new(Point::origin(), dir.clone(), hx, rat(1, 1)).unwrap();
        let y = Sector::new(Point::origin(), rotate(&dir, &spread, turn), hy, rat(1, 1)).unwrap();
        prop_assert_eq!(check_observation2(&x, &y, &beta), Ok(true));
        let (lo, hi) = x.outer_rays();
        let bound = half(&beta) - half(&x.half_angle).max(half(&y.half_angle));
        for ray in [lo, hi] {
            let acute = between(angle(&ray), angle(&y.direction)).min(PI - between(angle(&ray), angle(&y.direction)));
            prop_assert!(acute + 1e-9 >= bound);
        }
    }
}
