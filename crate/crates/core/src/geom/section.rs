use super::{direction_vectors, ConvexPolygon, OrientedLine, Side};
use crate::root::bisect;
use crate::Error;

/// Bisection budget for [`alpha_section`].
pub const DEFAULT_SECTION_ITERATIONS: usize = 80;

/// `|line⁻ ∩ polygon| / |polygon|`.
pub fn section_fraction(line: &OrientedLine, polygon: &ConvexPolygon) -> f64 {
    (polygon.clipped_area(line, Side::Minus) / polygon.area()).clamp(0.0, 1.0)
}

/// The unique line of direction `theta` leaving the fraction `alpha` of the
/// polygon's area on its minus side, with the default tolerance and budget.
pub fn alpha_section(polygon: &ConvexPolygon, alpha: f64, theta: f64) -> Result<OrientedLine, Error> {
    alpha_section_with(polygon, alpha, theta, crate::tol::EPS_SEC, DEFAULT_SECTION_ITERATIONS)
}

/// [`alpha_section`] with an explicit residual tolerance and iteration budget.
///
/// The minus-side area grows strictly with `t` while the line crosses the
/// polygon, so `t` is bisected over the support interval in direction
/// `u'(theta)`.
pub fn alpha_section_with(
    polygon: &ConvexPolygon,
    alpha: f64,
    theta: f64,
    eps_sec: f64,
    max_iter: usize,
) -> Result<OrientedLine, Error> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidArgument(format!("alpha must lie in (0, 1), got {alpha}")));
    }
    let (_, normal) = direction_vectors(theta);
    let (lo, hi) = polygon.support_interval(normal);
    let area = polygon.area();
    let residual = |t: f64| {
        let line = OrientedLine::new(theta, t);
        Ok::<_, Error>(polygon.clipped_area(&line, Side::Minus) / area - alpha)
    };
    // Aim well below the tolerance so downstream searches see a smooth map.
    let root = bisect(lo, hi, -alpha, 1.0 - alpha, 0.01 * eps_sec, max_iter, residual)?;
    if root.value.abs() > eps_sec {
        return Err(Error::NotConverged {
            what: "alpha_section",
            residual: root.value.abs(),
            iterations: root.iterations,
        });
    }
    Ok(OrientedLine::new(theta, root.x))
}
