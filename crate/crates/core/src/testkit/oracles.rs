//! Oracles that share no code path with the quantities they check.

use crate::error::{Error, Result};
use crate::geom::Point;
use crate::polyline::{ClosedPolyline, Polyline};

/// Deepest bisection allowed while refining a sub-step.
const MAX_DEPTH: u32 = 64;

/// Angle swept by the vector from `o` as it moves from `a` to `b`, for
/// sweeps below π/4, via `asin` of the normalized cross product.
fn small_angle(o: Point, a: Point, b: Point) -> Option<f64> {
    let (ax, ay) = (a.x - o.x, a.y - o.y);
    let (bx, by) = (b.x - o.x, b.y - o.y);
    let cr = ax * by - ay * bx;
    let dt = ax * bx + ay * by;
    // dot > |cross| means the sweep is under π/4.
    if dt <= cr.abs() {
        return None;
    }
    let norm = (ax * ax + ay * ay).sqrt() * (bx * bx + by * by).sqrt();
    Some((cr / norm).clamp(-1.0, 1.0).asin())
}

/// Total angle swept by the vector from `o` to a point running along the
/// closed line, in radians.
///
/// Each segment is cut into `steps_per_segment` pieces and a piece is
/// bisected until it sweeps less than π/4, so no single term ever comes
/// near the branch cut at ±π.
pub fn sampled_angle_oracle(l: &ClosedPolyline, o: Point, steps_per_segment: usize) -> Result<f64> {
    if steps_per_segment < 2 {
        return Err(Error::InvalidParameter(
            "need at least 2 steps per segment".into(),
        ));
    }
    if l.passes_through(o) {
        return Err(Error::PointOnLine { x: o.x, y: o.y });
    }
    let mut total = 0.0;
    let mut stack: Vec<(f64, f64, u32)> = Vec::new();
    for s in l.segments() {
        for i in (0..steps_per_segment).rev() {
            let t0 = i as f64 / steps_per_segment as f64;
            let t1 = (i + 1) as f64 / steps_per_segment as f64;
            stack.push((t0, t1, 0));
        }
        while let Some((t0, t1, depth)) = stack.pop() {
            let (a, b) = (s.start.lerp(s.end, t0), s.start.lerp(s.end, t1));
            match small_angle(o, a, b) {
                Some(t) => total += t,
                None if depth < MAX_DEPTH => {
                    let mid = 0.5 * (t0 + t1);
                    stack.push((mid, t1, depth + 1));
                    stack.push((t0, mid, depth + 1));
                }
                None => return Err(Error::PointOnLine { x: o.x, y: o.y }),
            }
        }
    }
    Ok(total)
}

/// Whether `o` lies strictly inside triangle `abc`, from barycentric
/// coordinates. Degenerate triangles contain nothing.
pub fn inside_triangle_barycentric(o: Point, a: Point, b: Point, c: Point) -> bool {
    let det = (b.y - c.y) * (a.x - c.x) + (c.x - b.x) * (a.y - c.y);
    if det == 0.0 {
        return false;
    }
    let l1 = ((b.y - c.y) * (o.x - c.x) + (c.x - b.x) * (o.y - c.y)) / det;
    let l2 = ((c.y - a.y) * (o.x - c.x) + (a.x - c.x) * (o.y - c.y)) / det;
    let l3 = 1.0 - l1 - l2;
    l1 > 0.0 && l2 > 0.0 && l3 > 0.0
}
