//! Deterministic number formatting for reports and SVG output.

/// Significant digits used in text reports.
pub const REPORT_DIGITS: usize = 12;
/// Significant digits used for SVG coordinates.
pub const SVG_DIGITS: usize = 6;

/// `x` rounded to `digits` significant digits, printed in the shortest form
/// that reads back as the rounded value. Magnitudes outside `[1e-5, 1e15)`
/// use exponent notation.
pub fn sig(x: f64, digits: usize) -> String {
    assert!(digits >= 1);
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let rounded: f64 = format!("{:.*e}", digits - 1, x)
        .parse()
        .expect("formatted float parses");
    let mag = rounded.abs();
    if (1e-5..1e15).contains(&mag) {
        format!("{rounded}")
    } else {
        format!("{rounded:e}")
    }
}

pub fn report(x: f64) -> String {
    sig(x, REPORT_DIGITS)
}
