//! Deterministic generators, independent oracles and counterexample
//! shrinking for the property suites.

pub mod oracles;
pub mod rng;
pub mod shrink;

pub use oracles::{inside_triangle_barycentric, sampled_angle_oracle};
pub use rng::CounterRng;
pub use shrink::{shrink, Case, CaseLine};

use crate::error::{Error, Result};
use crate::geom::{in_general_position, Point};
use crate::polyline::{ClosedPolyline, OpenPolyline, Polyline};

/// Rejection-sampling budget of the general-position generators.
pub const MAX_REJECTIONS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenConfig {
    pub seed: u64,
    pub max_vertices: usize,
    /// Coordinates are integers in `[-coord_range, coord_range]`.
    pub coord_range: i64,
    /// Optional uniform jitter added to lattice coordinates.
    pub perturbation: f64,
}

impl Default for GenConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            max_vertices: 8,
            coord_range: 1000,
            perturbation: 0.0,
        }
    }
}

impl GenConfig {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_vertices < 3 {
            return Err(Error::InvalidParameter(
                "max_vertices must be at least 3".into(),
            ));
        }
        if self.coord_range < 10 {
            return Err(Error::InvalidParameter(
                "coord_range must be at least 10".into(),
            ));
        }
        if !(self.perturbation >= 0.0 && self.perturbation.is_finite()) {
            return Err(Error::InvalidParameter(
                "perturbation must be finite and non-negative".into(),
            ));
        }
        Ok(())
    }

    pub fn rng(&self) -> CounterRng {
        CounterRng::new(self.seed)
    }
}

pub fn lattice_point(rng: &mut CounterRng, cfg: &GenConfig) -> Point {
    let r = cfg.coord_range;
    let mut x = rng.int_in(-r, r) as f64;
    let mut y = rng.int_in(-r, r) as f64;
    if cfg.perturbation > 0.0 {
        x += rng.uniform(-cfg.perturbation, cfg.perturbation);
        y += rng.uniform(-cfg.perturbation, cfg.perturbation);
    }
    Point::new(x, y)
}

pub fn lattice_points(rng: &mut CounterRng, cfg: &GenConfig, n: usize) -> Vec<Point> {
    (0..n).map(|_| lattice_point(rng, cfg)).collect()
}

/// A closed line with `min..=max_vertices` lattice vertices (repeats allowed).
pub fn random_closed(rng: &mut CounterRng, cfg: &GenConfig, min: usize) -> ClosedPolyline {
    let m = rng.int_in(min as i64, cfg.max_vertices.max(min) as i64) as usize;
    ClosedPolyline::new(lattice_points(rng, cfg, m)).expect("non-empty")
}

pub fn random_open(rng: &mut CounterRng, cfg: &GenConfig, min: usize) -> OpenPolyline {
    let m = rng.int_in(min as i64, cfg.max_vertices.max(min) as i64) as usize;
    OpenPolyline::new(lattice_points(rng, cfg, m)).expect("non-empty")
}

/// A lattice point off the line.
pub fn random_point_off<L: Polyline + ?Sized>(
    rng: &mut CounterRng,
    cfg: &GenConfig,
    l: &L,
) -> Point {
    loop {
        let p = lattice_point(rng, cfg);
        if !l.passes_through(p) {
            return p;
        }
    }
}

/// Vertex sets of the requested sizes whose union is in general position.
pub fn general_position_vertices(
    rng: &mut CounterRng,
    cfg: &GenConfig,
    sizes: &[usize],
) -> Result<Vec<Vec<Point>>> {
    let total: usize = sizes.iter().sum();
    for _ in 0..MAX_REJECTIONS {
        let pts = lattice_points(rng, cfg, total);
        if in_general_position(&pts) {
            let mut rest = &pts[..];
            let mut out = Vec::with_capacity(sizes.len());
            for &n in sizes {
                out.push(rest[..n].to_vec());
                rest = &rest[n..];
            }
            return Ok(out);
        }
    }
    Err(Error::GenerationExhausted {
        attempts: MAX_REJECTIONS,
    })
}

fn size(rng: &mut CounterRng, min: usize, cfg: &GenConfig) -> usize {
    rng.int_in(min as i64, cfg.max_vertices as i64) as usize
}

/// A closed line and an open line whose vertices together are pairwise
/// distinct and in general position. Deterministic in `cfg.seed`.
pub fn gen_general_position_pair(cfg: &GenConfig) -> Result<(ClosedPolyline, OpenPolyline)> {
    cfg.validate()?;
    let mut rng = cfg.rng();
    general_position_pair(&mut rng, cfg)
}

pub fn general_position_pair(
    rng: &mut CounterRng,
    cfg: &GenConfig,
) -> Result<(ClosedPolyline, OpenPolyline)> {
    let sizes = [size(rng, 3, cfg), size(rng, 2, cfg)];
    let mut v = general_position_vertices(rng, cfg, &sizes)?;
    let p = OpenPolyline::new(v.pop().expect("two sets"))?;
    let l = ClosedPolyline::new(v.pop().expect("two sets"))?;
    Ok((l, p))
}

pub fn general_position_closed_pair(
    rng: &mut CounterRng,
    cfg: &GenConfig,
) -> Result<(ClosedPolyline, ClosedPolyline)> {
    let sizes = [size(rng, 3, cfg), size(rng, 3, cfg)];
    let mut v = general_position_vertices(rng, cfg, &sizes)?;
    let b = ClosedPolyline::new(v.pop().expect("two sets"))?;
    let a = ClosedPolyline::new(v.pop().expect("two sets"))?;
    Ok((a, b))
}

pub fn general_position_open_pair(
    rng: &mut CounterRng,
    cfg: &GenConfig,
) -> Result<(OpenPolyline, OpenPolyline)> {
    let sizes = [size(rng, 2, cfg), size(rng, 2, cfg)];
    let mut v = general_position_vertices(rng, cfg, &sizes)?;
    let b = OpenPolyline::new(v.pop().expect("two sets"))?;
    let a = OpenPolyline::new(v.pop().expect("two sets"))?;
    Ok((a, b))
}

/// A closed line plus a query point, all in general position.
pub fn general_position_instance(
    rng: &mut CounterRng,
    cfg: &GenConfig,
) -> Result<(ClosedPolyline, Point)> {
    let sizes = [size(rng, 3, cfg), 1];
    let v = general_position_vertices(rng, cfg, &sizes)?;
    Ok((ClosedPolyline::new(v[0].clone())?, v[1][0]))
}

/// A simple polygon, star-shaped around a lattice center: distinct sorted
/// angles with random radii, traversed counterclockwise.
pub fn star_polygon(rng: &mut CounterRng, cfg: &GenConfig) -> ClosedPolyline {
    use std::f64::consts::TAU;
    let r = cfg.coord_range as f64;
    let center = Point::new(
        rng.int_in(-cfg.coord_range / 2, cfg.coord_range / 2) as f64,
        rng.int_in(-cfg.coord_range / 2, cfg.coord_range / 2) as f64,
    );
    let m = size(rng, 3, cfg);
    let mut angles: Vec<f64> = (0..m).map(|_| rng.uniform(0.0, TAU)).collect();
    angles.sort_by(f64::total_cmp);
    angles.dedup();
    // Keep every wedge below a half turn so the center stays inside.
    let spread = |a: &[f64]| {
        a.windows(2)
            .map(|w| w[1] - w[0])
            .chain(std::iter::once(a[0] + TAU - a[a.len() - 1]))
            .fold(0.0, f64::max)
    };
    while angles.len() < 3 || spread(&angles) >= 0.9 * std::f64::consts::PI {
        angles.push(rng.uniform(0.0, TAU));
        angles.sort_by(f64::total_cmp);
        angles.dedup();
    }
    let pts = angles
        .iter()
        .map(|&t| {
            let rho = rng.uniform(0.05, 0.5) * r;
            center.offset(rho * t.cos(), rho * t.sin())
        })
        .collect();
    ClosedPolyline::new(pts).expect("non-empty")
}
