//! Winding numbers of planar polygonal lines.
//!
//! The crate computes oriented angles, winding numbers of closed lines and
//! turn fractions of open ones, signed crossings between lines, the
//! boundary pairing `∂(l × p)`, and winding-number colorings of the
//! complement of a closed line. Each identity relating these quantities is
//! checked by the property suites in [`verify`] against independent
//! oracles from [`testkit`].

pub mod crossings;
pub mod error;
pub mod fmt;
pub mod geom;
pub mod io;
pub mod polyline;
pub mod regions;
pub mod testkit;
pub mod verify;
pub mod winding;

pub use error::{Error, Result};
pub use geom::{Orientation, OrientedAngle, Point, Segment};
pub use polyline::{ClosedPolyline, OneCycle, OpenPolyline, Polyline};
pub use winding::{TurnFraction, WindingResult};
