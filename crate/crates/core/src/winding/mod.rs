//! Winding numbers of closed lines, turn fractions of open lines, 1-cycles
//! and the fan decomposition.
//!
//! For a closed line `A_1 … A_m` not through `O`,
//! `w(l, O) = (∠A_1OA_2 + … + ∠A_mOA_1) / 2π`; for an open line the closing
//! term is dropped and the result `w′(l, O)` is a real number of turns.

mod constructions;

use std::f64::consts::TAU;

pub use constructions::{
    gen_loop, gen_sector_path, gen_symmetric, gen_symmetric_spiral, gen_three_paths,
    segment_meets_ray,
};

use crate::error::{Error, Result};
use crate::geom::{oriented_angle, Point, Segment};
use crate::polyline::{ClosedPolyline, OneCycle, OpenPolyline, Polyline};

/// Largest accepted distance, in radians, between an angle sum and the
/// nearest multiple of 2π.
pub const EPS_INT: f64 = 1e-6;

/// A certified integer winding number.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindingResult {
    pub w: i64,
    /// `|Σ angles − 2π·w|` in radians.
    pub residual: f64,
}

/// A possibly fractional number of turns.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct TurnFraction(pub f64);

impl TurnFraction {
    pub fn value(self) -> f64 {
        self.0
    }
}

fn on_line(x: Point) -> Error {
    Error::PointOnLine { x: x.x, y: x.y }
}

fn angle_sum(points: &[Point], o: Point, closed: bool) -> Result<f64> {
    let mut sum = 0.0;
    for w in points.windows(2) {
        sum += oriented_angle(o, w[0], w[1])?.value();
    }
    if closed {
        sum += oriented_angle(o, points[points.len() - 1], points[0])?.value();
    }
    Ok(sum)
}

/// Rounds an angle sum to whole turns, refusing sums that are not close to
/// a multiple of 2π.
pub fn certify(sum: f64) -> Result<WindingResult> {
    let w = (sum / TAU).round();
    let residual = (sum - TAU * w).abs();
    if residual >= EPS_INT {
        return Err(Error::IntegralityViolation { residual });
    }
    Ok(WindingResult {
        w: w as i64,
        residual,
    })
}

pub fn winding_number(l: &ClosedPolyline, o: Point) -> Result<WindingResult> {
    if l.passes_through(o) {
        return Err(on_line(o));
    }
    certify(angle_sum(l.points(), o, true)?)
}

/// `w′(l, O)`; zero for a single-point line.
pub fn w_prime(l: &OpenPolyline, o: Point) -> Result<TurnFraction> {
    if l.passes_through(o) {
        return Err(on_line(o));
    }
    Ok(TurnFraction(angle_sum(l.points(), o, false)? / TAU))
}

/// Winding number of a 1-cycle: the angle sum over its directed segments.
///
/// Whether the multiset really is a cycle is not checked; a non-cycle shows
/// up as an [`Error::IntegralityViolation`].
pub fn winding_of_cycle(c: &OneCycle, o: Point) -> Result<WindingResult> {
    if crate::geom::point_on_segments(o, c.segments()) {
        return Err(on_line(o));
    }
    let mut sum = 0.0;
    for s in c.segments() {
        sum += oriented_angle(o, s.start, s.end)?.value();
    }
    certify(sum)
}

/// `Σ_i w(P A_i A_{i+1}, O)`, which equals `w(l, O)` whenever `O` avoids the
/// line and every fan segment `P A_i`.
pub fn fan_decomposition(l: &ClosedPolyline, o: Point, apex: Point) -> Result<WindingResult> {
    if l.passes_through(o) {
        return Err(on_line(o));
    }
    let pts = l.points();
    for (i, &a) in pts.iter().enumerate() {
        if Segment::new(apex, a).contains(o) {
            return Err(Error::FanBlocked { index: i });
        }
    }
    let mut total = WindingResult {
        w: 0,
        residual: 0.0,
    };
    for i in 0..pts.len() {
        let tri = ClosedPolyline::new(vec![apex, pts[i], pts[(i + 1) % pts.len()]])?;
        let r = winding_number(&tri, o)?;
        total.w += r.w;
        total.residual += r.residual;
    }
    Ok(total)
}
