//! JSON file formats.
//!
//! A polyline is `{"closed": true|false, "points": [[x, y], ...]}`; a grid is
//! `{"bbox": [[xmin, ymin], [xmax, ymax]], "nx": .., "ny": .., "labels": ..}`
//! where `labels[ix][iy]` is the winding number of cell `(ix, iy)` counted
//! from the lower-left corner, or `null` on the line.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::Point;
use crate::polyline::{ClosedPolyline, OpenPolyline, Polyline};
use crate::regions::RegionGrid;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolylineDoc {
    pub closed: bool,
    pub points: Vec<[f64; 2]>,
}

/// A parsed polyline of either kind.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyPolyline {
    Open(OpenPolyline),
    Closed(ClosedPolyline),
}

impl AnyPolyline {
    pub fn as_dyn(&self) -> &dyn Polyline {
        match self {
            AnyPolyline::Open(l) => l,
            AnyPolyline::Closed(l) => l,
        }
    }
}

impl PolylineDoc {
    pub fn from_polyline<L: Polyline + ?Sized>(l: &L) -> Self {
        Self {
            closed: l.is_closed(),
            points: l.points().iter().map(|p| [p.x, p.y]).collect(),
        }
    }

    fn points(&self) -> Result<Vec<Point>> {
        self.points
            .iter()
            .map(|&[x, y]| Point::try_new(x, y))
            .collect()
    }

    pub fn into_polyline(self) -> Result<AnyPolyline> {
        let pts = self.points()?;
        Ok(if self.closed {
            AnyPolyline::Closed(ClosedPolyline::new(pts)?)
        } else {
            AnyPolyline::Open(OpenPolyline::new(pts)?)
        })
    }
}

pub fn parse_polyline(text: &str) -> Result<AnyPolyline> {
    let doc: PolylineDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    doc.into_polyline()
}

pub fn polyline_to_json<L: Polyline + ?Sized>(l: &L) -> String {
    serde_json::to_string(&PolylineDoc::from_polyline(l)).expect("finite coordinates serialize")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridDoc {
    pub bbox: [[f64; 2]; 2],
    pub nx: usize,
    pub ny: usize,
    pub labels: Vec<Vec<Option<i64>>>,
}

impl From<&RegionGrid> for GridDoc {
    fn from(g: &RegionGrid) -> Self {
        Self {
            bbox: [[g.min.x, g.min.y], [g.max.x, g.max.y]],
            nx: g.nx,
            ny: g.ny,
            labels: (0..g.nx)
                .map(|ix| (0..g.ny).map(|iy| g.label(ix, iy)).collect())
                .collect(),
        }
    }
}

pub fn grid_to_json(g: &RegionGrid) -> String {
    serde_json::to_string(&GridDoc::from(g)).expect("grid serializes")
}

/// A minimized failing instance: the property it breaks, the lines and any
/// query points involved.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CounterexampleDoc {
    pub property: String,
    pub lines: Vec<PolylineDoc>,
    pub points: Vec<[f64; 2]>,
}
