//! Plane primitives: points, oriented angles, the orientation predicate,
//! segment intersection and general-position checks.
//!
//! All predicates work in double precision with fixed tolerances. Generated
//! test data lives on an integer lattice, where every cross product below is
//! computed exactly, so the tolerances only matter for hand-made inputs.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};

/// Relative tolerance of the orientation predicate, scaled by the squared
/// largest coordinate magnitude of its inputs.
pub const TAU_ORIENT: f64 = 1e-12;
/// Absolute distance below which a point counts as lying on a segment.
pub const TAU_PT: f64 = 1e-9;
/// Absolute tolerance for comparing angles, in radians.
pub const TAU_ANG: f64 = 1e-9;

/// A point of the plane. Both coordinates are finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    /// Builds a point, panicking on NaN or infinite coordinates.
    ///
    /// Use [`Point::try_new`] for untrusted input.
    pub fn new(x: f64, y: f64) -> Self {
        match Self::try_new(x, y) {
            Ok(p) => p,
            Err(e) => panic!("{e}"),
        }
    }

    pub fn try_new(x: f64, y: f64) -> Result<Self> {
        if x.is_finite() && y.is_finite() {
            Ok(Self { x, y })
        } else {
            Err(Error::NonFinite { x, y })
        }
    }

    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub fn minus(self, other: Point) -> (f64, f64) {
        (self.x - other.x, self.y - other.y)
    }

    pub fn offset(self, dx: f64, dy: f64) -> Point {
        Point::new(self.x + dx, self.y + dy)
    }

    pub fn lerp(self, other: Point, t: f64) -> Point {
        Point::new(
            self.x + (other.x - self.x) * t,
            self.y + (other.y - self.y) * t,
        )
    }

    pub fn midpoint(self, other: Point) -> Point {
        self.lerp(other, 0.5)
    }

    /// The point symmetric to `self` with respect to `center`.
    pub fn reflect_through(self, center: Point) -> Point {
        Point::new(2.0 * center.x - self.x, 2.0 * center.y - self.y)
    }

    pub fn distance(self, other: Point) -> f64 {
        let (dx, dy) = self.minus(other);
        dx.hypot(dy)
    }

    fn max_abs(self) -> f64 {
        self.x.abs().max(self.y.abs())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

pub(crate) fn cross(a: (f64, f64), b: (f64, f64)) -> f64 {
    a.0 * b.1 - a.1 * b.0
}

pub(crate) fn dot(a: (f64, f64), b: (f64, f64)) -> f64 {
    a.0 * b.0 + a.1 * b.1
}

/// An oriented angle in radians, normalized to `(-π, π]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct OrientedAngle(f64);

impl OrientedAngle {
    pub fn value(self) -> f64 {
        self.0
    }
}

/// A directed segment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub start: Point,
    pub end: Point,
}

impl Segment {
    pub fn new(start: Point, end: Point) -> Self {
        Self { start, end }
    }

    pub fn reversed(self) -> Self {
        Self::new(self.end, self.start)
    }

    pub fn is_degenerate(&self) -> bool {
        self.start == self.end
    }

    /// Euclidean distance from `p` to the closed segment.
    pub fn distance_to(&self, p: Point) -> f64 {
        let d = self.end.minus(self.start);
        let len2 = dot(d, d);
        if len2 == 0.0 {
            return p.distance(self.start);
        }
        let t = (dot(p.minus(self.start), d) / len2).clamp(0.0, 1.0);
        p.distance(self.start.lerp(self.end, t))
    }

    pub fn contains(&self, p: Point) -> bool {
        self.distance_to(p) <= TAU_PT
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    CounterClockwise,
    Clockwise,
    Collinear,
}

impl Orientation {
    pub fn reversed(self) -> Self {
        match self {
            Orientation::CounterClockwise => Orientation::Clockwise,
            Orientation::Clockwise => Orientation::CounterClockwise,
            Orientation::Collinear => Orientation::Collinear,
        }
    }
}

/// The oriented angle ∠AOB: the unique `t ∈ (-π, π]` such that rotating the
/// ray `OA` counterclockwise by `t` gives the ray `OB`.
///
/// `A = B` is allowed and yields zero. A half turn is always reported as `+π`.
pub fn oriented_angle(o: Point, a: Point, b: Point) -> Result<OrientedAngle> {
    if a.distance(o) <= TAU_PT || b.distance(o) <= TAU_PT {
        return Err(Error::DegeneratePoint);
    }
    let oa = a.minus(o);
    let ob = b.minus(o);
    let t = cross(oa, ob).atan2(dot(oa, ob));
    // atan2(-0.0, negative) is -π; fold that onto the closed end of the range.
    Ok(OrientedAngle(if t <= -PI { PI } else { t }))
}

/// Orientation of the triple `(a, b, c)` from the sign of `(b-a)×(c-a)`.
pub fn orientation(a: Point, b: Point, c: Point) -> Orientation {
    let scale = a.max_abs().max(b.max_abs()).max(c.max_abs());
    let det = cross(b.minus(a), c.minus(a));
    if det.abs() <= TAU_ORIENT * scale * scale {
        Orientation::Collinear
    } else if det > 0.0 {
        Orientation::CounterClockwise
    } else {
        Orientation::Clockwise
    }
}

/// `p` is (numerically) collinear with `s` and projects into its extent.
fn touches(s: &Segment, p: Point) -> bool {
    if s.is_degenerate() {
        return p.distance(s.start) <= TAU_PT;
    }
    if orientation(s.start, s.end, p) != Orientation::Collinear {
        return false;
    }
    let d = s.end.minus(s.start);
    let len2 = dot(d, d);
    let t = dot(p.minus(s.start), d) / len2;
    let slack = TAU_PT / len2.sqrt();
    (-slack..=1.0 + slack).contains(&t)
}

/// The transversal crossing point of two segments, if their relative
/// interiors cross properly.
///
/// Any other contact (a shared endpoint, an endpoint on the other segment,
/// collinear overlap) is reported as [`Error::NonGenericIntersection`].
pub fn segment_intersection(s1: Segment, s2: Segment) -> Result<Option<Point>> {
    for (s, p, which) in [
        (&s1, s2.start, "start of second segment lies on the first"),
        (&s1, s2.end, "end of second segment lies on the first"),
        (&s2, s1.start, "start of first segment lies on the second"),
        (&s2, s1.end, "end of first segment lies on the second"),
    ] {
        if touches(s, p) {
            return Err(Error::NonGenericIntersection(which.to_string()));
        }
    }
    if s1.is_degenerate() || s2.is_degenerate() {
        return Ok(None);
    }

    let o1 = orientation(s1.start, s1.end, s2.start);
    let o2 = orientation(s1.start, s1.end, s2.end);
    let o3 = orientation(s2.start, s2.end, s1.start);
    let o4 = orientation(s2.start, s2.end, s1.end);
    if [o1, o2, o3, o4].contains(&Orientation::Collinear) || o1 == o2 || o3 == o4 {
        return Ok(None);
    }

    let r = s1.end.minus(s1.start);
    let q = s2.end.minus(s2.start);
    let t = cross(s2.start.minus(s1.start), q) / cross(r, q);
    Ok(Some(s1.start.lerp(s1.end, t)))
}

/// Whether `p` lies within [`TAU_PT`] of any of the segments.
pub fn point_on_segments<'a, I>(p: Point, segments: I) -> bool
where
    I: IntoIterator<Item = &'a Segment>,
{
    segments.into_iter().any(|s| s.contains(p))
}

/// No three points are collinear and no three of the segments joining them
/// share an interior point.
pub fn in_general_position(points: &[Point]) -> bool {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if orientation(points[i], points[j], points[k]) == Orientation::Collinear {
                    return false;
                }
            }
        }
    }

    let mut joins = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            joins.push((i, j));
        }
    }

    // With no collinear triple, three segments sharing an interior point
    // cross pairwise at that point, so it shows up as two coinciding
    // crossing points.
    let mut hits = Vec::new();
    for (a, &(i, j)) in joins.iter().enumerate() {
        for &(k, l) in &joins[a + 1..] {
            if i == k || i == l || j == k || j == l {
                continue;
            }
            let s1 = Segment::new(points[i], points[j]);
            let s2 = Segment::new(points[k], points[l]);
            match segment_intersection(s1, s2) {
                Ok(Some(x)) => hits.push(x),
                Ok(None) => {}
                Err(_) => return false,
            }
        }
    }
    hits.sort_by(|a, b| a.x.total_cmp(&b.x));
    for (idx, h) in hits.iter().enumerate() {
        for other in &hits[idx + 1..] {
            if other.x - h.x > TAU_PT {
                break;
            }
            if h.distance(*other) <= TAU_PT {
                return false;
            }
        }
    }
    true
}

/// ∠AOB + ∠BOC + ∠COA.
///
/// This is `±2π` when `O` lies inside triangle `ABC` and `0` when it lies
/// outside.
pub fn verify_triangle_angle_sum(o: Point, a: Point, b: Point, c: Point) -> Result<f64> {
    let sides = [Segment::new(a, b), Segment::new(b, c), Segment::new(c, a)];
    if point_on_segments(o, &sides) {
        return Err(Error::PointOnLine { x: o.x, y: o.y });
    }
    Ok(oriented_angle(o, a, b)?.value()
        + oriented_angle(o, b, c)?.value()
        + oriented_angle(o, c, a)?.value())
}
