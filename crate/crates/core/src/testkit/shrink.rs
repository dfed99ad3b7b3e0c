//! Greedy shrinking of failing property instances.

use crate::error::Result;
use crate::geom::Point;
use crate::io::{CounterexampleDoc, PolylineDoc};
use crate::polyline::{ClosedPolyline, OpenPolyline, Polyline};

#[derive(Debug, Clone, PartialEq)]
pub struct CaseLine {
    pub closed: bool,
    pub points: Vec<Point>,
}

impl CaseLine {
    pub fn closed(l: &ClosedPolyline) -> Self {
        Self {
            closed: true,
            points: l.points().to_vec(),
        }
    }

    pub fn open(l: &OpenPolyline) -> Self {
        Self {
            closed: false,
            points: l.points().to_vec(),
        }
    }

    pub fn as_closed(&self) -> Result<ClosedPolyline> {
        ClosedPolyline::new(self.points.clone())
    }

    pub fn as_open(&self) -> Result<OpenPolyline> {
        OpenPolyline::new(self.points.clone())
    }
}

/// One generated property instance: lines, query points and integer
/// parameters (loop counts, seeds, ...).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Case {
    pub lines: Vec<CaseLine>,
    pub points: Vec<Point>,
    pub params: Vec<i64>,
}

impl Case {
    pub fn vertex_count(&self) -> usize {
        self.lines.iter().map(|l| l.points.len()).sum()
    }

    pub fn to_doc(&self, property: &str) -> CounterexampleDoc {
        CounterexampleDoc {
            property: property.to_string(),
            lines: self
                .lines
                .iter()
                .map(|l| PolylineDoc {
                    closed: l.closed,
                    points: l.points.iter().map(|p| [p.x, p.y]).collect(),
                })
                .collect(),
            points: self.points.iter().map(|p| [p.x, p.y]).collect(),
        }
    }

    fn points_mut(&mut self) -> impl Iterator<Item = &mut Point> {
        self.lines
            .iter_mut()
            .flat_map(|l| l.points.iter_mut())
            .chain(self.points.iter_mut())
    }
}

fn toward_zero(v: f64) -> f64 {
    let half = v / 2.0;
    if v.fract() == 0.0 {
        half.trunc() + 0.0
    } else {
        half
    }
}

/// Upper bound on predicate evaluations per shrink.
const BUDGET: usize = 20_000;

/// Greedily simplifies `case` while `fails` keeps returning true: drops
/// vertices, then moves coordinates toward zero. A case that does not fail
/// is returned unchanged.
pub fn shrink<F>(case: &Case, fails: F) -> Case
where
    F: Fn(&Case) -> bool,
{
    let mut best = case.clone();
    if !fails(&best) {
        return best;
    }
    let evals = std::cell::Cell::new(0usize);
    let try_accept = |best: &mut Case, cand: Case| -> bool {
        evals.set(evals.get() + 1);
        if evals.get() <= BUDGET && fails(&cand) {
            *best = cand;
            true
        } else {
            false
        }
    };

    loop {
        let mut progress = false;

        for li in 0..best.lines.len() {
            let mut vi = best.lines[li].points.len();
            while vi > 0 {
                vi -= 1;
                if best.lines[li].points.len() <= 1 || vi >= best.lines[li].points.len() {
                    continue;
                }
                let mut cand = best.clone();
                cand.lines[li].points.remove(vi);
                progress |= try_accept(&mut best, cand);
            }
        }

        let mut halved = best.clone();
        for p in halved.points_mut() {
            *p = Point::new(toward_zero(p.x), toward_zero(p.y));
        }
        if halved != best {
            progress |= try_accept(&mut best, halved);
        }

        let n_points: usize = best.vertex_count() + best.points.len();
        for idx in 0..n_points {
            for axis in 0..2 {
                let mut cand = best.clone();
                let p = cand.points_mut().nth(idx).expect("index in range");
                let moved = if axis == 0 {
                    Point::new(toward_zero(p.x), p.y)
                } else {
                    Point::new(p.x, toward_zero(p.y))
                };
                if moved != *p {
                    *p = moved;
                    progress |= try_accept(&mut best, cand);
                }
            }
        }

        if !progress || evals.get() > BUDGET {
            return best;
        }
    }
}
