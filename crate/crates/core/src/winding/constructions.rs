//! Lines with prescribed winding behavior.

use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::geom::{segment_intersection, Point, Segment, TAU_PT};
use crate::polyline::{ClosedPolyline, OpenPolyline};
use crate::testkit::rng::CounterRng;

use super::{w_prime, winding_number};

fn rotate_about(center: Point, p: Point, angle: f64) -> Point {
    let (dx, dy) = p.minus(center);
    let (s, c) = angle.sin_cos();
    center.offset(c * dx - s * dy, s * dx + c * dy)
}

/// Equilateral triangle centered at `center` whose first vertex is `first`.
fn triangle_from(center: Point, first: Point, ccw: bool) -> [Point; 3] {
    let step = if ccw { TAU / 3.0 } else { -TAU / 3.0 };
    [
        first,
        rotate_about(center, first, step),
        rotate_about(center, first, 2.0 * step),
    ]
}

/// A closed line winding `n` times around `center`: a single point for
/// `n = 0`, otherwise an equilateral triangle traversed `|n|` times,
/// counterclockwise for positive `n`.
pub fn gen_loop(n: i64, center: Point, radius: f64) -> Result<ClosedPolyline> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "radius must be positive, got {radius}"
        )));
    }
    let first = center.offset(radius, 0.0);
    if n == 0 {
        return ClosedPolyline::new(vec![first]);
    }
    let tri = triangle_from(center, first, n > 0);
    let points = std::iter::repeat_n(tri, n.unsigned_abs() as usize)
        .flatten()
        .collect();
    ClosedPolyline::new(points)
}

/// A random closed line `A_1 … A_2k` symmetric about `center`
/// (`A_{k+j} = 2·center − A_j`) that does not pass through `center`.
///
/// Vertices are `center` plus lattice offsets in `[-100, 100]²`.
pub fn gen_symmetric(k: usize, center: Point, seed: u64) -> Result<ClosedPolyline> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "k must be at least 2, got {k}"
        )));
    }
    let mut rng = CounterRng::new(seed);
    const ATTEMPTS: usize = 1000;
    for _ in 0..ATTEMPTS {
        let offsets: Vec<(f64, f64)> = (0..k)
            .map(|_| (rng.int_in(-100, 100) as f64, rng.int_in(-100, 100) as f64))
            .collect();
        let mut points: Vec<Point> = offsets
            .iter()
            .map(|&(dx, dy)| center.offset(dx, dy))
            .collect();
        points.extend(offsets.iter().map(|&(dx, dy)| center.offset(-dx, -dy)));
        let l = ClosedPolyline::new(points)?;
        if winding_number(&l, center).is_ok() {
            return Ok(l);
        }
    }
    Err(Error::GenerationExhausted { attempts: ATTEMPTS })
}

/// A symmetric closed line of `2k` vertices winding exactly `winding` times
/// around `center` (`winding` odd, `k > |winding|`).
///
/// Vertex `j` sits at polar angle `j·π·winding/k` with a random radius in
/// `[1, 3]`; the second half is the point reflection of the first.
pub fn gen_symmetric_spiral(
    winding: i64,
    k: usize,
    center: Point,
    seed: u64,
) -> Result<ClosedPolyline> {
    if winding % 2 == 0 {
        return Err(Error::InvalidParameter(format!(
            "winding must be odd, got {winding}"
        )));
    }
    if (k as u64) <= winding.unsigned_abs() {
        return Err(Error::InvalidParameter(format!(
            "need k > |winding|, got k={k}"
        )));
    }
    let mut rng = CounterRng::new(seed);
    let step = PI * winding as f64 / k as f64;
    let half: Vec<(f64, f64)> = (0..k)
        .map(|j| {
            let r = rng.uniform(1.0, 3.0);
            let (s, c) = (j as f64 * step).sin_cos();
            (r * c, r * s)
        })
        .collect();
    let mut points: Vec<Point> = half.iter().map(|&(dx, dy)| center.offset(dx, dy)).collect();
    points.extend(half.iter().map(|&(dx, dy)| center.offset(-dx, -dy)));
    ClosedPolyline::new(points)
}

/// Closed detour `A T_1 T_2 T_3 … T_1 A` winding `n` times around `center`,
/// with the triangle's first vertex halfway between `center` and `a`.
fn loop_at(a: Point, center: Point, n: i64) -> Vec<Point> {
    if n == 0 {
        return vec![a];
    }
    let first = center.midpoint(a);
    let tri = triangle_from(center, first, n > 0);
    let mut pts = vec![a];
    for _ in 0..n.unsigned_abs() {
        pts.extend_from_slice(&tri);
    }
    pts.push(first);
    pts.push(a);
    pts
}

/// Three lines from `a` to `b` avoiding `center` such that
/// `w(l1·l2⁻¹) = n1`, `w(l2·l3⁻¹) = n2` and `w(l1·l3⁻¹) = n1 + n2`.
///
/// `l2` is the segment `ab` (bent around `center` when it would pass
/// through it); `l1` and `l3` prepend a loop at `a` winding `n1` and `-n2`
/// times respectively.
pub fn gen_three_paths(
    n1: i64,
    n2: i64,
    a: Point,
    b: Point,
    center: Point,
) -> Result<(OpenPolyline, OpenPolyline, OpenPolyline)> {
    if a.distance(b) <= TAU_PT {
        return Err(Error::DegenerateInput("A and B coincide".into()));
    }
    if a.distance(center) <= TAU_PT || b.distance(center) <= TAU_PT {
        return Err(Error::DegenerateInput(
            "an endpoint coincides with O".into(),
        ));
    }

    let base = if Segment::new(a, b).contains(center) {
        let (dx, dy) = b.minus(a);
        let bend = a.midpoint(b).offset(-dy / 2.0, dx / 2.0);
        OpenPolyline::new(vec![a, bend, b])?
    } else {
        OpenPolyline::new(vec![a, b])?
    };
    let l1 = OpenPolyline::new(loop_at(a, center, n1))?.concat(&base)?;
    let l3 = OpenPolyline::new(loop_at(a, center, -n2))?.concat(&base)?;
    Ok((l1, base, l3))
}

/// Whether the segment touches the closed ray from `origin` through `through`.
pub fn segment_meets_ray(s: Segment, origin: Point, through: Point) -> bool {
    let (dx, dy) = through.minus(origin);
    let len = dx.hypot(dy);
    let reach = 4.0 * (s.start.distance(origin).max(s.end.distance(origin)) + len) / len;
    let ray = Segment::new(origin, origin.offset(dx * reach, dy * reach));
    !matches!(segment_intersection(s, ray), Ok(None))
}

fn check_equilateral(tri: &[Point; 3], center: Point) -> Result<f64> {
    let sides = [
        tri[0].distance(tri[1]),
        tri[1].distance(tri[2]),
        tri[2].distance(tri[0]),
    ];
    let side = sides[0];
    let centroid = Point::new(
        (tri[0].x + tri[1].x + tri[2].x) / 3.0,
        (tri[0].y + tri[1].y + tri[2].y) / 3.0,
    );
    let tol = 1e-6 * side;
    if side <= TAU_PT
        || sides.iter().any(|s| (s - side).abs() > tol)
        || centroid.distance(center) > tol
    {
        return Err(Error::InvalidParameter(
            "expected an equilateral triangle centered at O".into(),
        ));
    }
    Ok(side / 3f64.sqrt())
}

/// A random line from `A_{j+1}` to `A_{j+2}` (indices mod 3) avoiding the
/// closed ray from `center` through `A_j`.
///
/// Intermediate vertices are drawn in polar coordinates around `center`;
/// draws that touch the ray are discarded. If no draw succeeds the direct
/// chord is returned.
pub fn gen_sector_path(
    j: usize,
    tri: [Point; 3],
    center: Point,
    seed: u64,
) -> Result<OpenPolyline> {
    if j > 2 {
        return Err(Error::InvalidParameter(format!(
            "j must be 0, 1 or 2, got {j}"
        )));
    }
    let radius = check_equilateral(&tri, center)?;
    let (from, to, blocked) = (tri[(j + 1) % 3], tri[(j + 2) % 3], tri[j]);
    let (bx, by) = blocked.minus(center);
    let base_angle = by.atan2(bx);

    let mut rng = CounterRng::new(seed);
    for _ in 0..256 {
        let inner = rng.int_in(1, 4) as usize;
        let mut pts = vec![from];
        for _ in 0..inner {
            let phi = base_angle + rng.uniform(0.1, TAU - 0.1);
            let rho = radius * rng.uniform(0.2, 2.5);
            pts.push(center.offset(rho * phi.cos(), rho * phi.sin()));
        }
        pts.push(to);
        let clear = pts
            .windows(2)
            .all(|w| !segment_meets_ray(Segment::new(w[0], w[1]), center, blocked));
        if clear {
            let l = OpenPolyline::new(pts)?;
            if w_prime(&l, center).is_ok() {
                return Ok(l);
            }
        }
    }
    OpenPolyline::new(vec![from, to])
}
