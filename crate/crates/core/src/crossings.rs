//! Signed crossings of polygonal lines, the discrete Stokes identities and
//! the boundary pairing `∂(l × p)`.
//!
//! A crossing of directed segments `AB` (from `l`) and `CD` (from `p`) has
//! sign `+1` when the triple `A, B, C` is clockwise and `-1` otherwise. With
//! this convention `w(l, P_1) − w(l, P_0) = l·p` for a closed `l` and an
//! open `p` running from `P_0` to `P_1`.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::geom::{orientation, oriented_angle, segment_intersection, Orientation, Point, Segment};
use crate::polyline::{bounding_box, far_point, ClosedPolyline, OpenPolyline, Polyline};
use crate::winding::{w_prime, winding_number, WindingResult, EPS_INT};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Crossing {
    pub point: Point,
    pub sign: i64,
    /// Index into `l.segments()`.
    pub l_segment: usize,
    /// Index into `p.segments()`.
    pub p_segment: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CrossingReport {
    pub crossings: Vec<Crossing>,
    pub count: usize,
    pub signed_sum: i64,
}

fn sign_of_proper_crossing(ab: Segment, cd: Segment) -> Result<i64> {
    let (a, b, c, d) = (ab.start, ab.end, cd.start, cd.end);
    for (x, y, z) in [(a, b, c), (a, b, d), (a, c, d), (b, c, d)] {
        if orientation(x, y, z) == Orientation::Collinear {
            return Err(Error::NonGenericIntersection(format!(
                "collinear triple {x}, {y}, {z}"
            )));
        }
    }
    Ok(match orientation(a, b, c) {
        Orientation::Clockwise => 1,
        _ => -1,
    })
}

/// Sign of the crossing of two properly crossing directed segments.
pub fn crossing_sign(ab: Segment, cd: Segment) -> Result<i64> {
    match segment_intersection(ab, cd)? {
        Some(_) => sign_of_proper_crossing(ab, cd),
        None => Err(Error::NonGenericIntersection(
            "segments do not cross".into(),
        )),
    }
}

/// All transversal crossings between segments of `l` and `p`, by brute
/// force over segment pairs, ordered by `(l_segment, p_segment)`.
pub fn crossings<L, P>(l: &L, p: &P) -> Result<CrossingReport>
where
    L: Polyline + ?Sized,
    P: Polyline + ?Sized,
{
    let ls = l.segments();
    let ps = p.segments();
    let mut out = Vec::new();
    for (i, &s) in ls.iter().enumerate() {
        for (k, &t) in ps.iter().enumerate() {
            let violation = |detail: String| Error::GeneralPositionViolation {
                l_segment: i,
                p_segment: k,
                detail,
            };
            let hit = match segment_intersection(s, t) {
                Ok(hit) => hit,
                Err(Error::NonGenericIntersection(d)) => return Err(violation(d)),
                Err(e) => return Err(e),
            };
            if let Some(point) = hit {
                let sign = match sign_of_proper_crossing(s, t) {
                    Ok(sign) => sign,
                    Err(Error::NonGenericIntersection(d)) => return Err(violation(d)),
                    Err(e) => return Err(e),
                };
                out.push(Crossing {
                    point,
                    sign,
                    l_segment: i,
                    p_segment: k,
                });
            }
        }
    }
    let signed_sum = out.iter().map(|c| c.sign).sum();
    Ok(CrossingReport {
        count: out.len(),
        signed_sum,
        crossings: out,
    })
}

/// `((w(l, P_1) − w(l, P_0)) mod 2, |l ∩ p| mod 2)`; the two agree.
pub fn stokes_parity_check(l: &ClosedPolyline, p: &OpenPolyline) -> Result<(u8, u8)> {
    let report = crossings(l, p)?;
    let diff = winding_number(l, p.end())?.w - winding_number(l, p.start())?.w;
    Ok((diff.rem_euclid(2) as u8, (report.count % 2) as u8))
}

/// `(w(l, P_1) − w(l, P_0), l·p)`; the two agree.
pub fn stokes_signed_check(l: &ClosedPolyline, p: &OpenPolyline) -> Result<(i64, i64)> {
    let report = crossings(l, p)?;
    let diff = winding_number(l, p.end())?.w - winding_number(l, p.start())?.w;
    Ok((diff, report.signed_sum))
}

/// Rays from far away are re-aimed at most this many times.
pub const MAX_REAIMS: usize = 64;

const GOLDEN_ANGLE: f64 = 2.399_963_229_728_653;

/// Crossings of `l` with a straight path from a point outside its hull to
/// `x`.
///
/// When that path is not in general position with `l`, its far end is
/// rotated about the bounding-box center by successive golden angles, at
/// most [`MAX_REAIMS`] times.
pub fn ray_crossings(l: &ClosedPolyline, x: Point) -> Result<CrossingReport> {
    if l.passes_through(x) {
        return Err(Error::PointOnLine { x: x.x, y: x.y });
    }
    let (lo, hi) = bounding_box(l.points());
    let center = lo.midpoint(hi);
    let (vx, vy) = far_point(l).minus(center);
    let mut last = None;
    for k in 0..MAX_REAIMS {
        let (s, c) = (k as f64 * GOLDEN_ANGLE).sin_cos();
        let start = center.offset(c * vx - s * vy, s * vx + c * vy);
        let path = OpenPolyline::new(vec![start, x])?;
        match crossings(l, &path) {
            Ok(r) => return Ok(r),
            Err(e @ Error::GeneralPositionViolation { .. }) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one aim was tried"))
}

/// Winding number as the signed crossing count `l·p` of a path `p` coming
/// from outside the hull of `l` (see [`ray_crossings`]).
pub fn winding_via_ray(l: &ClosedPolyline, x: Point) -> Result<WindingResult> {
    let r = ray_crossings(l, x)?;
    Ok(WindingResult {
        w: r.signed_sum,
        residual: 0.0,
    })
}

/// `∂(l × p)` in turns, with its nearest integer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryPairing {
    pub value: f64,
    pub rounded: i64,
    /// `2π·|value − rounded|`.
    pub residual: f64,
}

/// For `l = A…B` and `p = C…D`:
/// `∂(l × p) = w′(l, D) − w′(p, B) − w′(l, C) + w′(p, A)`.
///
/// Defined when no endpoint of either line lies on the other line. The
/// result is the winding number of `l(s) − p(t)` around the boundary of the
/// unit square, hence an integer; it is certified like any winding number.
pub fn boundary_pairing(l: &OpenPolyline, p: &OpenPolyline) -> Result<BoundaryPairing> {
    for (line, other) in [(l, p), (p, l)] {
        for e in [other.start(), other.end()] {
            if line.passes_through(e) {
                return Err(Error::EndpointOnLine { x: e.x, y: e.y });
            }
        }
    }
    let (a, b) = (l.start(), l.end());
    let (c, d) = (p.start(), p.end());
    let value = w_prime(l, d)?.value() - w_prime(p, b)?.value() - w_prime(l, c)?.value()
        + w_prime(p, a)?.value();
    let rounded = value.round();
    let residual = TAU * (value - rounded).abs();
    if residual >= EPS_INT {
        return Err(Error::IntegralityViolation { residual });
    }
    Ok(BoundaryPairing {
        value,
        rounded: rounded as i64,
        residual,
    })
}

/// `Σ ∂(EF × GH)` over segments `EF` of `l` and `GH` of `p`.
pub fn boundary_pairing_by_segments(l: &OpenPolyline, p: &OpenPolyline) -> Result<f64> {
    let mut total = 0.0;
    for s in l.segments() {
        for t in p.segments() {
            let ef = OpenPolyline::new(vec![s.start, s.end])?;
            let gh = OpenPolyline::new(vec![t.start, t.end])?;
            total += boundary_pairing(&ef, &gh)?.value;
        }
    }
    Ok(total)
}

/// Whether `∂` is additive under concatenation in both slots, within
/// `2·EPS_INT`.
pub fn bilinearity_check(l1: &OpenPolyline, l2: &OpenPolyline, p: &OpenPolyline) -> Result<bool> {
    let l = l1.concat(l2)?;
    let tol = 2.0 * EPS_INT;
    let left = boundary_pairing(&l, p)?.value
        - boundary_pairing(l1, p)?.value
        - boundary_pairing(l2, p)?.value;
    let right = boundary_pairing(p, &l)?.value
        - boundary_pairing(p, l1)?.value
        - boundary_pairing(p, l2)?.value;
    Ok(left.abs() <= tol && right.abs() <= tol)
}

/// ∠ADB + ∠DBC + ∠BCA + ∠CAD, each angle taken at its middle letter.
///
/// Equals `2π·∂(AB × CD)`, so it vanishes for disjoint segments.
pub fn four_angle_sum(a: Point, b: Point, c: Point, d: Point) -> Result<f64> {
    Ok(oriented_angle(d, a, b)?.value()
        + oriented_angle(b, d, c)?.value()
        + oriented_angle(c, b, a)?.value()
        + oriented_angle(a, c, d)?.value())
}
