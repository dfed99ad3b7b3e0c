//! Point classification and colorings of the complement of a closed line,
//! sampled on a rectangular grid of cell centers.

mod svg;

pub use svg::{render_svg, RenderMode};

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::geom::Point;
use crate::polyline::{bounding_box, ClosedPolyline, Polyline};
use crate::winding::winding_number;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointClass {
    OnBoundary,
    Off { winding: i64 },
}

/// Boundary if the point is within `TAU_PT` of the line, otherwise its
/// winding number.
///
/// Points so close to the line that the angle sum cannot be certified are
/// also reported as boundary.
pub fn classify_point(l: &ClosedPolyline, x: Point) -> PointClass {
    match winding_number(l, x) {
        Ok(r) => PointClass::Off { winding: r.w },
        Err(_) => PointClass::OnBoundary,
    }
}

/// Membership in the interior modulo 2, i.e. odd winding number.
pub fn interior_mod2(pc: PointClass) -> Result<bool> {
    match pc {
        PointClass::Off { winding } => Ok(winding.rem_euclid(2) == 1),
        PointClass::OnBoundary => Err(Error::BoundaryPoint),
    }
}

/// Winding labels at the cell centers of a regular grid. `None` marks cells
/// whose center lies on the line.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionGrid {
    pub min: Point,
    pub max: Point,
    pub nx: usize,
    pub ny: usize,
    /// Row-major from the bottom row: cell `(ix, iy)` is at `iy * nx + ix`.
    labels: Vec<Option<i64>>,
}

impl RegionGrid {
    pub fn label(&self, ix: usize, iy: usize) -> Option<i64> {
        self.labels[iy * self.nx + ix]
    }

    pub fn labels(&self) -> &[Option<i64>] {
        &self.labels
    }

    pub fn cell_size(&self) -> (f64, f64) {
        (
            (self.max.x - self.min.x) / self.nx as f64,
            (self.max.y - self.min.y) / self.ny as f64,
        )
    }

    pub fn center(&self, ix: usize, iy: usize) -> Point {
        let (dx, dy) = self.cell_size();
        Point::new(
            self.min.x + (ix as f64 + 0.5) * dx,
            self.min.y + (iy as f64 + 0.5) * dy,
        )
    }

    /// Number of cells per label; boundary cells are keyed by `None`.
    pub fn histogram(&self) -> BTreeMap<Option<i64>, usize> {
        let mut h = BTreeMap::new();
        for &l in &self.labels {
            *h.entry(l).or_insert(0) += 1;
        }
        h
    }

    /// Cells on the outermost ring.
    pub fn frame(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.ny).flat_map(move |iy| {
            (0..self.nx)
                .filter(move |&ix| iy == 0 || iy + 1 == self.ny || ix == 0 || ix + 1 == self.nx)
                .map(move |ix| (ix, iy))
        })
    }
}

/// Margin added on each side of the bounding box, as a fraction of its
/// extent. Ten percent, widened on coarse grids so that the outermost cell
/// centers still fall outside the box.
fn margin_fraction(cells: usize) -> f64 {
    0.1f64.max(0.6 / (cells - 1) as f64)
}

/// Labels every cell center of an `nx × ny` grid over the line's bounding
/// box (inflated as in [`margin_fraction`]) with its winding number.
pub fn mobius_alexander_grid(l: &ClosedPolyline, nx: usize, ny: usize) -> Result<RegionGrid> {
    if nx < 2 || ny < 2 {
        return Err(Error::GridTooSmall { nx, ny });
    }
    let (lo, hi) = bounding_box(l.points());
    let (w, h) = (hi.x - lo.x, hi.y - lo.y);
    let fallback = w.max(h).max(1.0);
    let ex = if w > 0.0 { w } else { fallback };
    let ey = if h > 0.0 { h } else { fallback };
    let mx = ex * margin_fraction(nx);
    let my = ey * margin_fraction(ny);
    let mut grid = RegionGrid {
        min: lo.offset(-mx, -my),
        max: hi.offset(mx, my),
        nx,
        ny,
        labels: Vec::with_capacity(nx * ny),
    };
    for iy in 0..ny {
        for ix in 0..nx {
            let label = match classify_point(l, grid.center(ix, iy)) {
                PointClass::Off { winding } => Some(winding),
                PointClass::OnBoundary => None,
            };
            grid.labels.push(label);
        }
    }
    Ok(grid)
}

/// Cell-wise parity of a grid: `Some(true)` (black) for odd labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityMask {
    pub nx: usize,
    pub ny: usize,
    cells: Vec<Option<bool>>,
}

impl ParityMask {
    pub fn get(&self, ix: usize, iy: usize) -> Option<bool> {
        self.cells[iy * self.nx + ix]
    }

    pub fn cells(&self) -> &[Option<bool>] {
        &self.cells
    }
}

pub fn checkerboard_mask(grid: &RegionGrid) -> ParityMask {
    ParityMask {
        nx: grid.nx,
        ny: grid.ny,
        cells: grid
            .labels
            .iter()
            .map(|l| l.map(|w| w.rem_euclid(2) == 1))
            .collect(),
    }
}
