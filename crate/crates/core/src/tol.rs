//! Numerical tolerances shared across the crate.

/// Convexity slack: the sine of the turn angle at a vertex may dip this far
/// below zero before the polygon is rejected as non-convex.
pub const EPS_GEOM: f64 = 1e-12;

/// Areas at or below this (in squared input units) are treated as empty.
pub const EPS_AREA_ABS: f64 = 1e-15;

/// Relative slack for area bookkeeping (additivity, tiling sums).
pub const EPS_AREA_REL: f64 = 1e-9;

/// Containment slack, relative to the outer body's extent.
pub const EPS_CONTAIN_REL: f64 = 1e-9;

/// Clipped vertices closer than this (relative to extent) to their
/// predecessor are merged.
pub const EPS_MERGE_REL: f64 = 1e-12;

/// Residual allowed on an area fraction produced by a section search.
pub const EPS_SEC: f64 = 1e-12;

/// Slack allowed on the fraction bounds the section searches must meet.
pub const EPS_THM: f64 = 1e-6;

/// Relative deviation from |B|/n and |A|/n accepted as fair.
pub const EPS_FAIR: f64 = 1e-6;
