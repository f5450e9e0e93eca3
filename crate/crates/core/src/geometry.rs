//! Exact rational geometry: points, vectors, rotations from the rational
//! parametric family, and the membership predicates for segments, circular
//! sectors and disks.
//!
//! Every predicate here is evaluated in exact arithmetic. There is no
//! floating point anywhere in this module.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::serde_rational;

/// Exact arbitrary-precision rational. Always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Builds `num/den` as a [`Rational`].
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds an integer [`Rational`].
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("zero vector where a direction is required")]
    ZeroVector,
    #[error("lines are parallel")]
    ParallelLines,
    #[error("rotation ({c}, {s}) is not on the unit circle")]
    NotUnitRotation { c: String, s: String },
    #[error("invalid object: {0}")]
    InvalidObject(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Point {
    #[serde(with = "serde_rational")]
    pub x: Rational,
    #[serde(with = "serde_rational")]
    pub y: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Vector {
    #[serde(with = "serde_rational")]
    pub x: Rational,
    #[serde(with = "serde_rational")]
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(int(x), int(y))
    }

    pub fn origin() -> Self {
        Point::new(Rational::zero(), Rational::zero())
    }

    pub fn translate(&self, v: &Vector) -> Point {
        Point::new(&self.x + &v.x, &self.y + &v.y)
    }

    pub fn scale(&self, f: &Rational) -> Point {
        Point::new(&self.x * f, &self.y * f)
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        let two = int(2);
        Point::new((&self.x + &other.x) / &two, (&self.y + &other.y) / &two)
    }

    pub fn dist_sq(&self, other: &Point) -> Rational {
        (other - self).norm_sq()
    }
}

impl Vector {
    pub fn new(x: Rational, y: Rational) -> Self {
        Vector { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Vector::new(int(x), int(y))
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn dot(&self, other: &Vector) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    /// z-component of the 2D cross product.
    pub fn cross(&self, other: &Vector) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self)
    }

    pub fn scale(&self, f: &Rational) -> Vector {
        Vector::new(&self.x * f, &self.y * f)
    }

    /// Rotation by a quarter turn counter-clockwise.
    pub fn perp(&self) -> Vector {
        Vector::new(-&self.y, self.x.clone())
    }
}

impl<'a> Sub<&'a Point> for &'a Point {
    type Output = Vector;
    fn sub(self, rhs: &'a Point) -> Vector {
        Vector::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl<'a> Add<&'a Vector> for &'a Point {
    type Output = Point;
    fn add(self, rhs: &'a Vector) -> Point {
        self.translate(rhs)
    }
}

impl<'a> Sub<&'a Vector> for &'a Point {
    type Output = Point;
    fn sub(self, rhs: &'a Vector) -> Point {
        Point::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl<'a> Add<&'a Vector> for &'a Vector {
    type Output = Vector;
    fn add(self, rhs: &'a Vector) -> Vector {
        Vector::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector::new(-&self.x, -&self.y)
    }
}

impl Neg for Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        -&self
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// An exact rotation `(cos θ, sin θ)` with `cos² + sin² = 1`.
///
/// Only angles with `sin θ >= 0` (θ in `[0, π]`) are meaningful as angle
/// bounds; composition may leave that range and callers check for it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalRotation {
    #[serde(with = "serde_rational")]
    pub c: Rational,
    #[serde(with = "serde_rational")]
    pub s: Rational,
}

impl RationalRotation {
    pub fn new(c: Rational, s: Rational) -> Result<Self, GeometryError> {
        let r = RationalRotation { c, s };
        if r.is_unit() {
            Ok(r)
        } else {
            Err(GeometryError::NotUnitRotation {
                c: r.c.to_string(),
                s: r.s.to_string(),
            })
        }
    }

    pub fn identity() -> Self {
        RationalRotation {
            c: Rational::one(),
            s: Rational::zero(),
        }
    }

    pub fn quarter_turn() -> Self {
        RationalRotation {
            c: Rational::zero(),
            s: Rational::one(),
        }
    }

    /// Rotation by `2·atan(t)`: `((1−t²)/(1+t²), 2t/(1+t²))`.
    pub fn from_parameter(t: &Rational) -> Self {
        let t2 = t * t;
        let denom = Rational::one() + &t2;
        RationalRotation {
            c: (Rational::one() - &t2) / &denom,
            s: (int(2) * t) / &denom,
        }
    }

    pub fn is_unit(&self) -> bool {
        &self.c * &self.c + &self.s * &self.s == Rational::one()
    }

    /// Angle sum.
    pub fn compose(&self, other: &RationalRotation) -> RationalRotation {
        RationalRotation {
            c: &self.c * &other.c - &self.s * &other.s,
            s: &self.s * &other.c + &self.c * &other.s,
        }
    }

    pub fn inverse(&self) -> RationalRotation {
        RationalRotation {
            c: self.c.clone(),
            s: -&self.s,
        }
    }

    pub fn doubled(&self) -> RationalRotation {
        self.compose(self)
    }

    /// Rotation by `π − θ`.
    pub fn supplement(&self) -> RationalRotation {
        RationalRotation {
            c: -&self.c,
            s: self.s.clone(),
        }
    }

    /// True iff the angle lies in `[0, π/8]`, i.e. a half opening angle in the
    /// `α ≤ π/4` regime. Exact: the angle, its double and its quadruple all
    /// have non-negative sine, and the quadruple has non-negative cosine.
    pub fn is_at_most_eighth_turn(&self) -> bool {
        let d = self.doubled();
        let q = d.doubled();
        !self.s.is_negative() && !self.c.is_negative() && !d.s.is_negative() && !q.s.is_negative() && !q.c.is_negative()
    }

    /// Exact comparison of the angles of two rotations with angles in `[0, π]`.
    pub fn cmp_angle(&self, other: &RationalRotation) -> Ordering {
        // On [0, π] the angle is decreasing in cos.
        other.c.cmp(&self.c)
    }
}

impl fmt::Display for RationalRotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rot({}, {})", self.c, self.s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Turn {
    Ccw,
    Cw,
}

/// Sign of `(b − a) × (c − a)`.
pub fn orientation(a: &Point, b: &Point, c: &Point) -> i8 {
    let v = (b - a).cross(&(c - a));
    sign(&v)
}

pub(crate) fn sign(v: &Rational) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

pub fn rotation_from_parameter(t: &Rational) -> RationalRotation {
    RationalRotation::from_parameter(t)
}

/// Rotates `v` by `+angle(r)` (counter-clockwise) or `−angle(r)`.
pub fn rotate(v: &Vector, r: &RationalRotation, turn: Turn) -> Vector {
    let s = match turn {
        Turn::Ccw => r.s.clone(),
        Turn::Cw => -&r.s,
    };
    Vector::new(&r.c * &v.x - &s * &v.y, &s * &v.x + &r.c * &v.y)
}

/// Closed cone of half-angle `half` around `axis`. Works for any half-angle
/// in `[0, π]`; for `w = 0` it returns true.
pub(crate) fn cone_contains(axis: &Vector, half: &RationalRotation, w: &Vector) -> bool {
    if w.is_zero() {
        return true;
    }
    let lo = rotate(axis, half, Turn::Cw);
    let hi = rotate(axis, half, Turn::Ccw);
    cone_contains_rays(axis, &lo, &hi, &half.c, w)
}

/// Same as [`cone_contains`] with the boundary rays precomputed.
pub(crate) fn cone_contains_rays(axis: &Vector, lo: &Vector, hi: &Vector, half_cos: &Rational, w: &Vector) -> bool {
    let right_of_lo = !lo.cross(w).is_negative();
    let left_of_hi = !w.cross(hi).is_negative();
    if half_cos.is_positive() {
        right_of_lo && left_of_hi && !axis.dot(w).is_negative()
    } else if half_cos.is_zero() {
        !axis.dot(w).is_negative()
    } else {
        right_of_lo || left_of_hi
    }
}

/// True iff the unsigned angle between `u` and `v` is at most `angle(bound)`.
///
/// Bounds up to `π/2` use the cone test directly; larger bounds (up to `π`)
/// fall back to the reflex cone, which is still exact.
pub fn angle_at_most(u: &Vector, v: &Vector, bound: &RationalRotation) -> Result<bool, GeometryError> {
    if u.is_zero() || v.is_zero() {
        return Err(GeometryError::ZeroVector);
    }
    Ok(cone_contains(u, bound, v))
}

/// True iff the unsigned angle between `u` and `v` equals `angle(bound)`
/// exactly, for a bound in `[0, π]`.
pub fn angle_equals(u: &Vector, v: &Vector, bound: &RationalRotation) -> Result<bool, GeometryError> {
    if u.is_zero() || v.is_zero() {
        return Err(GeometryError::ZeroVector);
    }
    let on_ray = |r: Vector| r.cross(v).is_zero() && r.dot(v).is_positive();
    Ok(on_ray(rotate(u, bound, Turn::Ccw)) || on_ray(rotate(u, bound, Turn::Cw)))
}

/// True iff the unsigned angle between `u` and `v` is strictly below `angle(bound)`.
pub fn angle_less_than(u: &Vector, v: &Vector, bound: &RationalRotation) -> Result<bool, GeometryError> {
    Ok(angle_at_most(u, v, bound)? && !angle_equals(u, v, bound)?)
}

/// True iff the acute angle between the lines spanned by `u` and `v` is at
/// least `angle(bound)`; `bound` must not exceed a quarter turn.
pub fn acute_angle_at_least(u: &Vector, v: &Vector, bound: &RationalRotation) -> Result<bool, GeometryError> {
    Ok(!angle_less_than(u, v, bound)? && !angle_less_than(u, &-v, bound)?)
}

/// A line segment with a distinguished endpoint `p` and far endpoint `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Segment {
    pub p: Point,
    pub q: Point,
}

impl Segment {
    pub fn new(p: Point, q: Point) -> Result<Self, GeometryError> {
        if p == q {
            return Err(GeometryError::InvalidObject("degenerate segment".into()));
        }
        Ok(Segment { p, q })
    }

    pub fn direction(&self) -> Vector {
        &self.q - &self.p
    }

    pub fn contains(&self, pt: &Point) -> bool {
        let d = self.direction();
        let w = pt - &self.p;
        if !d.cross(&w).is_zero() {
            return false;
        }
        let t = d.dot(&w);
        !t.is_negative() && t <= d.norm_sq()
    }
}

/// A closed circular sector. `direction` is the bisector direction and need
/// not be normalized; `half_angle` encodes half of the opening angle.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Sector {
    pub apex: Point,
    pub direction: Vector,
    pub half_angle: RationalRotation,
    #[serde(with = "serde_rational")]
    pub radius_sq: Rational,
}

impl Sector {
    pub fn new(
        apex: Point,
        direction: Vector,
        half_angle: RationalRotation,
        radius_sq: Rational,
    ) -> Result<Self, GeometryError> {
        let s = Sector {
            apex,
            direction,
            half_angle,
            radius_sq,
        };
        s.check()?;
        Ok(s)
    }

    pub fn check(&self) -> Result<(), GeometryError> {
        if self.direction.is_zero() {
            return Err(GeometryError::InvalidObject("sector direction is zero".into()));
        }
        if !self.radius_sq.is_positive() {
            return Err(GeometryError::InvalidObject("sector radius must be positive".into()));
        }
        if !self.half_angle.is_unit() {
            return Err(GeometryError::NotUnitRotation {
                c: self.half_angle.c.to_string(),
                s: self.half_angle.s.to_string(),
            });
        }
        if !self.half_angle.s.is_positive() {
            return Err(GeometryError::InvalidObject(
                "sector half-angle must lie strictly between 0 and π".into(),
            ));
        }
        Ok(())
    }

    /// The two straight boundary rays, clockwise one first.
    pub fn outer_rays(&self) -> (Vector, Vector) {
        (
            rotate(&self.direction, &self.half_angle, Turn::Cw),
            rotate(&self.direction, &self.half_angle, Turn::Ccw),
        )
    }

    pub fn contains(&self, pt: &Point) -> bool {
        let w = pt - &self.apex;
        if w.norm_sq() > self.radius_sq {
            return false;
        }
        cone_contains(&self.direction, &self.half_angle, &w)
    }
}

/// `v` scaled by the positive lcm of its denominators.
fn integer_vector(v: &Vector) -> (BigInt, BigInt) {
    use num_integer::Integer;
    let l = v.x.denom().lcm(v.y.denom());
    (v.x.numer() * (&l / v.x.denom()), v.y.numer() * (&l / v.y.denom()))
}

fn cross_i(a: &(BigInt, BigInt), x: &BigInt, y: &BigInt) -> BigInt {
    &a.0 * y - &a.1 * x
}

/// A sector with its boundary rays precomputed as integer vectors, for
/// repeated membership tests. Agrees with [`Sector::contains`] exactly; it
/// avoids rational normalization by working on unreduced fractions.
pub(crate) struct PreparedSector<'a> {
    apex: &'a Point,
    axis: (BigInt, BigInt),
    lo: (BigInt, BigInt),
    hi: (BigInt, BigInt),
    half_cos: i8,
    radius_sq: &'a Rational,
}

impl<'a> PreparedSector<'a> {
    pub(crate) fn new(s: &'a Sector) -> Self {
        let (lo, hi) = s.outer_rays();
        PreparedSector {
            apex: &s.apex,
            axis: integer_vector(&s.direction),
            lo: integer_vector(&lo),
            hi: integer_vector(&hi),
            half_cos: sign(&s.half_angle.c),
            radius_sq: &s.radius_sq,
        }
    }

    pub(crate) fn contains(&self, pt: &Point) -> bool {
        let (px, py, ax, ay) = (&pt.x, &pt.y, &self.apex.x, &self.apex.y);
        let xn = px.numer() * ax.denom() - ax.numer() * px.denom();
        let yn = py.numer() * ay.denom() - ay.numer() * py.denom();
        if xn.is_zero() && yn.is_zero() {
            return true;
        }
        let xd = px.denom() * ax.denom();
        let yd = py.denom() * ay.denom();
        // w = (xn/xd, yn/yd), scaled by xd·yd > 0.
        let x = &xn * &yd;
        let y = &yn * &xd;
        let scale = &xd * &yd;
        let r = self.radius_sq;
        if (&x * &x + &y * &y) * r.denom() > r.numer() * &scale * &scale {
            return false;
        }
        let right_of_lo = !cross_i(&self.lo, &x, &y).is_negative();
        let left_of_hi = !(&x * &self.hi.1 - &y * &self.hi.0).is_negative();
        let dot_ok = || !(&self.axis.0 * &x + &self.axis.1 * &y).is_negative();
        match self.half_cos {
            1 => right_of_lo && left_of_hi && dot_ok(),
            0 => dot_ok(),
            _ => right_of_lo || left_of_hi,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Disk {
    pub center: Point,
    #[serde(with = "serde_rational")]
    pub radius_sq: Rational,
}

impl Disk {
    pub fn new(center: Point, radius_sq: Rational) -> Result<Self, GeometryError> {
        if !radius_sq.is_positive() {
            return Err(GeometryError::InvalidObject("disk radius must be positive".into()));
        }
        Ok(Disk { center, radius_sq })
    }

    pub fn contains(&self, pt: &Point) -> bool {
        self.center.dist_sq(pt) <= self.radius_sq
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ArrangementObject {
    Segment(Segment),
    Sector(Sector),
    Disk(Disk),
}

impl ArrangementObject {
    pub fn distinguished_point(&self) -> &Point {
        match self {
            ArrangementObject::Segment(s) => &s.p,
            ArrangementObject::Sector(s) => &s.apex,
            ArrangementObject::Disk(d) => &d.center,
        }
    }

    pub fn as_sector(&self) -> Option<&Sector> {
        match self {
            ArrangementObject::Sector(s) => Some(s),
            _ => None,
        }
    }

    pub fn check(&self) -> Result<(), GeometryError> {
        match self {
            ArrangementObject::Segment(s) if s.p == s.q => {
                Err(GeometryError::InvalidObject("degenerate segment".into()))
            }
            ArrangementObject::Segment(_) => Ok(()),
            ArrangementObject::Sector(s) => s.check(),
            ArrangementObject::Disk(d) if !d.radius_sq.is_positive() => {
                Err(GeometryError::InvalidObject("disk radius must be positive".into()))
            }
            ArrangementObject::Disk(_) => Ok(()),
        }
    }

    /// Applies `p ↦ rot·p + shift` to every coordinate. Directions rotate,
    /// squared radii and half-angles are unchanged.
    pub fn rigid_motion(&self, rot: &RationalRotation, shift: &Vector) -> ArrangementObject {
        let mv = |p: &Point| {
            let v = rotate(&Vector::new(p.x.clone(), p.y.clone()), rot, Turn::Ccw);
            Point::new(&v.x + &shift.x, &v.y + &shift.y)
        };
        match self {
            ArrangementObject::Segment(s) => ArrangementObject::Segment(Segment {
                p: mv(&s.p),
                q: mv(&s.q),
            }),
            ArrangementObject::Sector(s) => ArrangementObject::Sector(Sector {
                apex: mv(&s.apex),
                direction: rotate(&s.direction, rot, Turn::Ccw),
                half_angle: s.half_angle.clone(),
                radius_sq: s.radius_sq.clone(),
            }),
            ArrangementObject::Disk(d) => ArrangementObject::Disk(Disk {
                center: mv(&d.center),
                radius_sq: d.radius_sq.clone(),
            }),
        }
    }
}

impl From<Segment> for ArrangementObject {
    fn from(s: Segment) -> Self {
        ArrangementObject::Segment(s)
    }
}

impl From<Sector> for ArrangementObject {
    fn from(s: Sector) -> Self {
        ArrangementObject::Sector(s)
    }
}

impl From<Disk> for ArrangementObject {
    fn from(d: Disk) -> Self {
        ArrangementObject::Disk(d)
    }
}

/// Closed-set membership of `pt` in `obj`.
pub fn contains_point(obj: &ArrangementObject, pt: &Point) -> bool {
    match obj {
        ArrangementObject::Segment(s) => s.contains(pt),
        ArrangementObject::Sector(s) => s.contains(pt),
        ArrangementObject::Disk(d) => d.contains(pt),
    }
}

/// The locus `a·x + b·y = c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Line {
    #[serde(with = "serde_rational")]
    pub a: Rational,
    #[serde(with = "serde_rational")]
    pub b: Rational,
    #[serde(with = "serde_rational")]
    pub c: Rational,
}

impl Line {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self, GeometryError> {
        if a.is_zero() && b.is_zero() {
            return Err(GeometryError::InvalidObject("line with a = b = 0".into()));
        }
        Ok(Line { a, b, c })
    }

    /// `y = slope·x + intercept`.
    pub fn from_slope_intercept(slope: Rational, intercept: Rational) -> Self {
        Line {
            a: -slope,
            b: Rational::one(),
            c: intercept,
        }
    }

    pub fn is_vertical(&self) -> bool {
        self.b.is_zero()
    }

    /// Slope of a non-vertical line.
    pub fn slope(&self) -> Rational {
        -&self.a / &self.b
    }

    /// y-intercept of a non-vertical line.
    pub fn intercept(&self) -> Rational {
        &self.c / &self.b
    }

    pub fn y_at(&self, x: &Rational) -> Rational {
        (&self.c - &self.a * x) / &self.b
    }

    pub fn point_at(&self, x: &Rational) -> Point {
        Point::new(x.clone(), self.y_at(x))
    }

    /// Left-to-right direction `(1, slope)` of a non-vertical line.
    pub fn direction(&self) -> Vector {
        Vector::new(Rational::one(), self.slope())
    }

    pub fn contains(&self, p: &Point) -> bool {
        &self.a * &p.x + &self.b * &p.y == self.c
    }

    /// Image under `(x, y) ↦ (f·x, f·y)`.
    pub fn scaled(&self, f: &Rational) -> Line {
        Line {
            a: self.a.clone(),
            b: self.b.clone(),
            c: &self.c * f,
        }
    }

    /// Image under translation by `v`.
    pub fn translated(&self, v: &Vector) -> Line {
        Line {
            a: self.a.clone(),
            b: self.b.clone(),
            c: &self.c + &self.a * &v.x + &self.b * &v.y,
        }
    }

    /// Image under `(x, y) ↦ (−x, y)`.
    pub fn mirrored_x(&self) -> Line {
        Line {
            a: -&self.a,
            b: self.b.clone(),
            c: self.c.clone(),
        }
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·x + {}·y = {}", self.a, self.b, self.c)
    }
}

pub fn line_intersection(l1: &Line, l2: &Line) -> Result<Point, GeometryError> {
    let det = &l1.a * &l2.b - &l2.a * &l1.b;
    if det.is_zero() {
        return Err(GeometryError::ParallelLines);
    }
    let x = (&l1.c * &l2.b - &l2.c * &l1.b) / &det;
    let y = (&l1.a * &l2.c - &l2.a * &l1.c) / &det;
    Ok(Point::new(x, y))
}

/// Parameter of the orthogonal projection of `pt` onto the directed line
/// `origin + t·u`.
pub fn project_param(origin: &Point, u: &Vector, pt: &Point) -> Result<Rational, GeometryError> {
    if u.is_zero() {
        return Err(GeometryError::ZeroVector);
    }
    Ok((pt - origin).dot(u) / u.norm_sq())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    fn v(x: i64, y: i64) -> Vector {
        Vector::from_ints(x, y)
    }

    fn rot(c: Rational, s: Rational) -> RationalRotation {
        RationalRotation::new(c, s).unwrap()
    }

    fn three_four_five() -> RationalRotation {
        rot(rat(4, 5), rat(3, 5))
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(0, 1)), 1);
        assert_eq!(orientation(&p(0, 0), &p(1, 1), &p(2, 2)), 0);
        assert_eq!(orientation(&p(0, 0), &p(0, 1), &p(1, 0)), -1);
    }

    #[test]
    fn rotation_from_parameter_examples() {
        assert_eq!(rotation_from_parameter(&int(0)), RationalRotation::identity());
        assert_eq!(rotation_from_parameter(&int(1)), RationalRotation::quarter_turn());
        // (1 − 1/9)/(1 + 1/9) = 4/5, (2/3)/(10/9) = 3/5
        assert_eq!(rotation_from_parameter(&rat(1, 3)), three_four_five());
    }

    #[test]
    fn rotate_examples() {
        assert_eq!(rotate(&v(1, 0), &RationalRotation::quarter_turn(), Turn::Ccw), v(0, 1));
        assert_eq!(
            rotate(&v(1, 0), &three_four_five(), Turn::Ccw),
            Vector::new(rat(4, 5), rat(3, 5))
        );
        let w = Vector::new(rat(-7, 3), rat(2, 9));
        assert_eq!(rotate(&w, &RationalRotation::identity(), Turn::Ccw), w);
        assert_eq!(rotate(&w, &RationalRotation::identity(), Turn::Cw), w);
    }

    #[test]
    fn angle_at_most_examples() {
        let b = three_four_five();
        assert!(angle_at_most(&v(1, 0), &v(1, 0), &b).unwrap());
        assert!(angle_at_most(&v(1, 0), &v(1, 0), &RationalRotation::identity()).unwrap());
        assert!(!angle_at_most(&v(1, 0), &v(0, 1), &b).unwrap());
        assert!(angle_at_most(&v(1, 0), &Vector::new(rat(4, 5), rat(3, 5)), &b).unwrap());
        assert_eq!(angle_at_most(&v(0, 0), &v(1, 0), &b), Err(GeometryError::ZeroVector));
    }

    #[test]
    fn identity_bound_rejects_opposite_direction() {
        let id = RationalRotation::identity();
        assert!(!angle_at_most(&v(1, 0), &v(-1, 0), &id).unwrap());
        assert!(angle_at_most(&v(1, 0), &v(5, 0), &id).unwrap());
    }

    #[test]
    fn obtuse_bounds() {
        // 3π/4-ish bound: (−4/5, 3/5) is π − atan(3/4).
        let b = rot(rat(-4, 5), rat(3, 5));
        assert!(angle_at_most(&v(1, 0), &v(-1, 1), &b).unwrap());
        assert!(!angle_at_most(&v(1, 0), &v(-1, 0), &b).unwrap());
        assert!(angle_at_most(&v(1, 0), &v(-1, 0), &rot(int(-1), int(0))).unwrap());
    }

    #[test]
    fn strict_and_equal_angles() {
        let b = three_four_five();
        let edge = Vector::new(rat(8, 5), rat(-6, 5));
        assert!(angle_equals(&v(1, 0), &edge, &b).unwrap());
        assert!(!angle_less_than(&v(1, 0), &edge, &b).unwrap());
        assert!(angle_less_than(&v(1, 0), &v(2, 1), &b).unwrap());
    }

    #[test]
    fn eighth_turn_regime() {
        assert!(rotation_from_parameter(&rat(1, 8)).is_at_most_eighth_turn());
        // tan(π/16) ≈ 0.1989
        assert!(rotation_from_parameter(&rat(19, 100)).is_at_most_eighth_turn());
        assert!(!rotation_from_parameter(&rat(21, 100)).is_at_most_eighth_turn());
        assert!(!three_four_five().is_at_most_eighth_turn());
    }

    #[test]
    fn segment_membership() {
        let s = Segment::new(p(0, 0), p(2, 0)).unwrap();
        let o = ArrangementObject::Segment(s);
        assert!(contains_point(&o, &p(1, 0)));
        assert!(contains_point(&o, &p(0, 0)));
        assert!(contains_point(&o, &p(2, 0)));
        assert!(!contains_point(&o, &p(3, 0)));
        assert!(!contains_point(&o, &p(-1, 0)));
        assert!(!contains_point(&o, &p(1, 1)));
        assert!(Segment::new(p(1, 1), p(1, 1)).is_err());
    }

    #[test]
    fn sector_membership() {
        let s = Sector::new(p(0, 0), v(1, 0), three_four_five(), int(4)).unwrap();
        let o = ArrangementObject::Sector(s);
        assert!(!contains_point(&o, &p(-1, 0)));
        assert!(contains_point(&o, &p(0, 0)));
        assert!(contains_point(&o, &p(2, 0)));
        assert!(!contains_point(&o, &Point::new(rat(21, 10), int(0))));
        // on the boundary ray, |(8/5, 6/5)| = 2
        assert!(contains_point(&o, &Point::new(rat(8, 5), rat(6, 5))));
        assert!(!contains_point(&o, &p(1, 1)));
    }

    #[test]
    fn sector_rejects_bad_fields() {
        assert!(Sector::new(p(0, 0), v(0, 0), three_four_five(), int(1)).is_err());
        assert!(Sector::new(p(0, 0), v(1, 0), three_four_five(), int(0)).is_err());
        assert!(Sector::new(p(0, 0), v(1, 0), RationalRotation::identity(), int(1)).is_err());
    }

    #[test]
    fn disk_membership() {
        let d = ArrangementObject::Disk(Disk::new(p(3, 3), int(2)).unwrap());
        assert!(contains_point(&d, &p(4, 4)));
        assert!(!contains_point(&d, &p(5, 3)));
        assert_eq!(d.distinguished_point(), &p(3, 3));
    }

    #[test]
    fn line_intersection_examples() {
        let y0 = Line::from_slope_intercept(int(0), int(0));
        let yx = Line::from_slope_intercept(int(1), int(0));
        let y2x = Line::from_slope_intercept(int(2), int(-2));
        let yx1 = Line::from_slope_intercept(int(1), int(1));
        assert_eq!(line_intersection(&y0, &yx).unwrap(), p(0, 0));
        assert_eq!(line_intersection(&y0, &y2x).unwrap(), p(1, 0));
        assert_eq!(line_intersection(&yx, &yx1), Err(GeometryError::ParallelLines));
    }

    #[test]
    fn project_param_examples() {
        assert_eq!(project_param(&p(0, 0), &v(1, 0), &p(3, 5)).unwrap(), int(3));
        assert_eq!(project_param(&p(0, 0), &v(2, 0), &p(3, 5)).unwrap(), rat(3, 2));
        assert_eq!(project_param(&p(1, 1), &v(1, 1), &p(1, 1)).unwrap(), int(0));
        assert!(project_param(&p(1, 1), &v(0, 0), &p(1, 1)).is_err());
    }

    #[test]
    fn line_transforms() {
        let l = Line::from_slope_intercept(int(2), int(-2));
        let shift = v(3, -1);
        let moved = l.translated(&shift);
        assert!(moved.contains(&(&p(1, 0) + &shift)));
        let f = rat(5, 2);
        assert!(l.scaled(&f).contains(&p(1, 0).scale(&f)));
        assert!(l.mirrored_x().contains(&p(-1, 0)));
    }
}
