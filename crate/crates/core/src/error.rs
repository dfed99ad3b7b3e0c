use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// Variants fall into four families, which the CLI maps onto distinct exit
/// codes: input errors, geometric precondition violations, general-position
/// violations and numerical certification failures.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite coordinate ({x}, {y})")]
    NonFinite { x: f64, y: f64 },

    #[error("point coincides with the angle vertex")]
    DegeneratePoint,

    #[error("segments do not meet transversally: {0}")]
    NonGenericIntersection(String),

    #[error("polyline needs at least one point")]
    EmptyPolyline,

    #[error("1-cycle segment {0} has coincident endpoints")]
    DegenerateSegment(usize),

    #[error("shared endpoints differ: {left:?} vs {right:?}")]
    EndpointMismatch { left: (f64, f64), right: (f64, f64) },

    #[error("point ({x}, {y}) lies on the polygonal line")]
    PointOnLine { x: f64, y: f64 },

    #[error("angle sum is {residual:e} rad away from a multiple of 2π")]
    IntegralityViolation { residual: f64 },

    #[error("point lies on fan segment P–A_{index}")]
    FanBlocked { index: usize },

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("general position violated at l-segment {l_segment}, p-segment {p_segment}: {detail}")]
    GeneralPositionViolation {
        l_segment: usize,
        p_segment: usize,
        detail: String,
    },

    #[error("endpoint ({x}, {y}) lies on the other polygonal line")]
    EndpointOnLine { x: f64, y: f64 },

    #[error("point lies on the boundary; no winding number")]
    BoundaryPoint,

    #[error("grid must be at least 2x2, got {nx}x{ny}")]
    GridTooSmall { nx: usize, ny: usize },

    #[error("gave up after {attempts} rejected draws")]
    GenerationExhausted { attempts: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
