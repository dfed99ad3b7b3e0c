//! Polygonal lines as ordered point sequences, and their algebra.
//!
//! A polyline is a value identified by its whole point sequence: `ABCABC`
//! and `ABC` are different lines even though they cover the same segments.
//! Repeated points are allowed everywhere.

use crate::error::{Error, Result};
use crate::geom::{cross, Orientation, Point, Segment};

/// Shared read access to open and closed polylines.
pub trait Polyline {
    fn points(&self) -> &[Point];

    fn is_closed(&self) -> bool;

    /// Consecutive segments, including the closing one for closed lines.
    /// Zero-length segments are skipped.
    fn segments(&self) -> Vec<Segment> {
        let pts = self.points();
        let mut out: Vec<Segment> = pts.windows(2).map(|w| Segment::new(w[0], w[1])).collect();
        if self.is_closed() && pts.len() > 1 {
            out.push(Segment::new(pts[pts.len() - 1], pts[0]));
        }
        out.retain(|s| !s.is_degenerate());
        out
    }

    /// Whether `p` lies on the line, counting vertices of single-point lines.
    fn passes_through(&self, p: Point) -> bool {
        self.points()
            .iter()
            .any(|v| v.distance(p) <= crate::geom::TAU_PT)
            || crate::geom::point_on_segments(p, &self.segments())
    }
}

fn non_empty(points: Vec<Point>) -> Result<Vec<Point>> {
    if points.is_empty() {
        Err(Error::EmptyPolyline)
    } else {
        Ok(points)
    }
}

/// A polygonal line `A_1 … A_m` with `m ≥ 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct OpenPolyline {
    points: Vec<Point>,
}

impl OpenPolyline {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        Ok(Self {
            points: non_empty(points)?,
        })
    }

    pub fn start(&self) -> Point {
        self.points[0]
    }

    pub fn end(&self) -> Point {
        self.points[self.points.len() - 1]
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn reverse(&self) -> Self {
        let mut points = self.points.clone();
        points.reverse();
        Self { points }
    }

    /// `A_1 … A_m C` · `C B_1 … B_k` = `A_1 … A_m C B_1 … B_k`.
    ///
    /// The shared point must be bit-identical.
    pub fn concat(&self, other: &OpenPolyline) -> Result<Self> {
        let (left, right) = (self.end(), other.start());
        if left != right {
            return Err(Error::EndpointMismatch {
                left: (left.x, left.y),
                right: (right.x, right.y),
            });
        }
        let mut points = self.points.clone();
        points.extend_from_slice(&other.points[1..]);
        Ok(Self { points })
    }

    /// Reads the same point sequence as a closed line.
    pub fn close(&self) -> ClosedPolyline {
        ClosedPolyline {
            points: self.points.clone(),
        }
    }

    /// The sub-line `A_i … A_j` (inclusive, zero-based).
    pub fn slice(&self, i: usize, j: usize) -> Self {
        Self {
            points: self.points[i..=j].to_vec(),
        }
    }
}

impl Polyline for OpenPolyline {
    fn points(&self) -> &[Point] {
        &self.points
    }

    fn is_closed(&self) -> bool {
        false
    }
}

/// A closed polygonal line `A_1 … A_m`; the segment `A_m A_1` is implicit.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedPolyline {
    points: Vec<Point>,
}

impl ClosedPolyline {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        Ok(Self {
            points: non_empty(points)?,
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn last(&self) -> Point {
        self.points[self.points.len() - 1]
    }

    pub fn reverse(&self) -> Self {
        let mut points = self.points.clone();
        points.reverse();
        Self { points }
    }

    /// `A_1 … A_m C` · `B_1 … B_k C` = `A_1 … A_m C B_1 … B_k C`.
    pub fn concat(&self, other: &ClosedPolyline) -> Result<Self> {
        let (left, right) = (self.last(), other.last());
        if left != right {
            return Err(Error::EndpointMismatch {
                left: (left.x, left.y),
                right: (right.x, right.y),
            });
        }
        let mut points = self.points.clone();
        points.extend_from_slice(&other.points);
        Ok(Self { points })
    }

    /// The open line `A_1 … A_m A_1`.
    pub fn unrolled(&self) -> OpenPolyline {
        let mut points = self.points.clone();
        points.push(self.points[0]);
        OpenPolyline { points }
    }

    /// The same sequence read as an open line `A_1 … A_m`.
    pub fn to_open(&self) -> OpenPolyline {
        OpenPolyline {
            points: self.points.clone(),
        }
    }
}

impl Polyline for ClosedPolyline {
    fn points(&self) -> &[Point] {
        &self.points
    }

    fn is_closed(&self) -> bool {
        true
    }
}

/// A finite multiset of directed segments with distinct endpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct OneCycle {
    segments: Vec<Segment>,
}

impl OneCycle {
    pub fn new(segments: Vec<Segment>) -> Result<Self> {
        if let Some(i) = segments.iter().position(Segment::is_degenerate) {
            return Err(Error::DegenerateSegment(i));
        }
        Ok(Self { segments })
    }

    pub fn from_polyline(l: &ClosedPolyline) -> Self {
        Self {
            segments: l.segments(),
        }
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }
}

/// Axis-aligned bounding box of a non-empty point set.
pub fn bounding_box(points: &[Point]) -> (Point, Point) {
    let mut lo = points[0];
    let mut hi = points[0];
    for p in &points[1..] {
        lo.x = lo.x.min(p.x);
        lo.y = lo.y.min(p.y);
        hi.x = hi.x.max(p.x);
        hi.y = hi.y.max(p.y);
    }
    (lo, hi)
}

/// A point strictly outside the convex hull of the line: the upper-right
/// bounding-box corner pushed out by the box diagonal (or by 1 when the box
/// is a single point).
pub fn far_point<L: Polyline + ?Sized>(l: &L) -> Point {
    let (lo, hi) = bounding_box(l.points());
    let diag = lo.distance(hi);
    let d = if diag > 0.0 { diag } else { 1.0 };
    Point::new(hi.x + d, hi.y + d)
}

/// Convex hull in counterclockwise order without collinear vertices
/// (monotone chain).
pub fn convex_hull(points: &[Point]) -> Result<ClosedPolyline> {
    let mut pts = non_empty(points.to_vec())?;
    pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    pts.dedup();
    if pts.len() < 3 {
        return ClosedPolyline::new(pts);
    }

    let turns_left = |a: Point, b: Point, c: Point| cross(b.minus(a), c.minus(a)) > 0.0;
    let mut hull: Vec<Point> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let floor = hull.len();
        let iter: Box<dyn Iterator<Item = &Point>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= floor + 2
                && !turns_left(hull[hull.len() - 2], hull[hull.len() - 1], p)
            {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    // All points collinear: the chains collapse to the two extremes.
    if hull.len() < 3 {
        hull.truncate(2);
    }
    ClosedPolyline::new(hull)
}

/// Whether `p` lies inside or on the convex polygon `hull` (CCW order).
pub fn hull_contains(hull: &ClosedPolyline, p: Point) -> bool {
    let v = hull.points();
    match v.len() {
        1 => v[0] == p,
        2 => Segment::new(v[0], v[1]).contains(p),
        _ => (0..v.len()).all(|i| {
            crate::geom::orientation(v[i], v[(i + 1) % v.len()], p) != Orientation::Clockwise
        }),
    }
}
