//! Fair partitions of pizzas: nested planar convex bodies `A ⊆ B` cut by
//! successive straight lines, where every final slice must carry the same
//! amount of dough `B` and the same amount of topping `A`.
//!
//! * [`geom`]: polygons, oriented lines, clipping and α-sections.
//! * [`sections`]: searches over the circle of directions for lines that
//!   section two bodies at once.
//! * [`partition`]: the recursive construction for an even number of slices,
//!   its verifier, and the concentric-disk witness for odd counts.
//! * [`chain`]: consecutive α-section chords around a convex boundary and
//!   the covering counts of the caps they cut off.

pub mod chain;
pub mod geom;
pub mod partition;
pub mod root;
pub mod sections;
pub mod tol;

use thiserror::Error;

pub use geom::{ConvexPolygon, GeomError, OrientedLine, Pizza, Point2, Side};

/// Failures of the numerical searches and constructions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{what} did not converge after {iterations} iterations (residual {residual:e})")]
    NotConverged {
        what: &'static str,
        residual: f64,
        iterations: usize,
    },
    #[error(
        "no {kind} witness found for alpha = {alpha}: best fraction {best} misses the bound by more than {slack:e}"
    )]
    TheoremViolation {
        kind: &'static str,
        alpha: f64,
        best: f64,
        slack: f64,
    },
    #[error("a fair partition into {0} slices is not guaranteed; n must be even")]
    OddN(usize),
    #[error("numerical failure: {0}")]
    NumericalFailure(String),
    #[error("disk witness fails at beta = {beta}, theta = {theta}: slack {slack:e} <= margin {margin:e}")]
    WitnessFailure {
        beta: f64,
        theta: f64,
        slack: f64,
        margin: f64,
    },
    #[error(transparent)]
    Geom(#[from] GeomError),
}
