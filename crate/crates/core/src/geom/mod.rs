//! Planar primitives: points, oriented lines, convex polygons, half-plane
//! clipping and directional area sections.
//!
//! Oriented lines are points `(theta, t)` of the cylinder `S¹ × ℝ`. The line
//! `(theta, t)` is traversed along `u(theta) = (cos θ, sin θ)` and bounds the
//! closed half-planes
//!
//! * plus: `{x : <x, u'(theta)> >= t}` (left of the line)
//! * minus: `{x : <x, u'(theta)> <= t}` (right of the line)
//!
//! where `u'(theta) = (-sin θ, cos θ)`. An α-section of a body `P` is a line
//! with `|minus ∩ P| = α|P|`; for every direction there is exactly one.

mod line;
mod pizza;
mod point;
mod polygon;
mod section;

use thiserror::Error;

pub use line::{direction_vectors, normalize_angle, side_of, OrientedLine, Side};
pub use pizza::Pizza;
pub use point::Point2;
pub use polygon::{area, clip, ConvexPolygon};
pub use section::{alpha_section, alpha_section_with, section_fraction, DEFAULT_SECTION_ITERATIONS};

/// Reasons a vertex list or a pair of bodies is rejected.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("a convex body needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertex {index} has a non-finite coordinate")]
    NonFinite { index: usize },
    #[error("vertices are in clockwise order; list them counterclockwise")]
    Clockwise,
    #[error("polygon turns right at vertex {index}; the body must be convex")]
    NotConvex { index: usize },
    #[error("polygon winds around more than once; the body must be simple")]
    NotSimple,
    #[error("polygon is degenerate (area {area:e})")]
    Degenerate { area: f64 },
    #[error("topping vertex {index} ({x}, {y}) lies outside the dough by {excess:e}")]
    NotNested { index: usize, x: f64, y: f64, excess: f64 },
}
