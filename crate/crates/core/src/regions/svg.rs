use std::fmt::Write;

use crate::fmt::{sig, SVG_DIGITS};
use crate::polyline::{ClosedPolyline, Polyline};

use super::RegionGrid;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderMode {
    /// Diverging ramp by winding number: red positive, blue negative.
    Integer,
    /// Black for odd winding numbers, white for even.
    Parity,
}

const BOUNDARY_FILL: &str = "#9e9e9e";

fn ramp(label: i64, max_abs: i64) -> String {
    if label == 0 {
        return "#ffffff".to_string();
    }
    let t = label.unsigned_abs() as f64 / max_abs.max(1) as f64;
    // Saturated at the extreme label.
    let fade = (40.0 + 215.0 * (1.0 - t)).round() as u8;
    if label > 0 {
        format!("#{:02x}{:02x}{:02x}", 0xd7, fade, fade)
    } else {
        format!("#{:02x}{:02x}{:02x}", fade, fade, 0xd7)
    }
}

/// The grid as filled cells with the line and its direction drawn on top.
///
/// World coordinates are kept; the y axis is flipped by the viewport
/// transform so the picture appears in the usual orientation.
pub fn render_svg(l: &ClosedPolyline, grid: &RegionGrid, mode: RenderMode) -> String {
    let n = |x: f64| sig(x, SVG_DIGITS);
    let (w, h) = (grid.max.x - grid.min.x, grid.max.y - grid.min.y);
    let (dx, dy) = grid.cell_size();
    let stroke = w.max(h) / 400.0;
    let max_abs = grid
        .labels()
        .iter()
        .flatten()
        .map(|l| l.abs())
        .max()
        .unwrap_or(0);

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" height=\"{}\" viewBox=\"{} {} {} {}\">",
        n(640.0 * h / w),
        n(grid.min.x),
        n(-grid.max.y),
        n(w),
        n(h)
    );
    let _ = writeln!(
        out,
        "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#000000\"/></marker></defs>"
    );
    let _ = writeln!(out, "<g transform=\"scale(1,-1)\">");
    let _ = writeln!(out, "<g shape-rendering=\"crispEdges\">");
    for iy in 0..grid.ny {
        for ix in 0..grid.nx {
            let fill = match (grid.label(ix, iy), mode) {
                (None, _) => BOUNDARY_FILL.to_string(),
                (Some(k), RenderMode::Integer) => ramp(k, max_abs),
                (Some(k), RenderMode::Parity) => if k.rem_euclid(2) == 1 {
                    "#000000"
                } else {
                    "#ffffff"
                }
                .to_string(),
            };
            let _ = writeln!(
                out,
                "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\"/>",
                n(grid.min.x + ix as f64 * dx),
                n(grid.min.y + iy as f64 * dy),
                n(dx),
                n(dy),
                fill
            );
        }
    }
    out.push_str("</g>\n");

    let line_color = match mode {
        RenderMode::Integer => "#000000",
        RenderMode::Parity => "#d73027",
    };
    let _ = writeln!(
        out,
        "<g fill=\"none\" stroke=\"{line_color}\" stroke-width=\"{}\" marker-end=\"url(#arrow)\">",
        n(stroke)
    );
    for s in l.segments() {
        let _ = writeln!(
            out,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            n(s.start.x),
            n(s.start.y),
            n(s.end.x),
            n(s.end.y)
        );
    }
    out.push_str("</g>\n</g>\n</svg>\n");
    out
}
