//! Chains of consecutive α-section chords around a convex boundary.
//!
//! Starting from `x₀ ∈ ∂A`, each `x_i ∈ ∂A` is chosen so that the chord
//! `D_i = (x_{i-1} x_i)`, oriented from `x_{i-1}` to `x_i`, cuts off a cap
//! `D_i⁻ ∩ A` of area `α|A|`. The caps follow the boundary counterclockwise,
//! and the covering number `K(x)` of a point counts the caps containing it.
//! [`build_chain`] records the chain together with sampled covering numbers
//! so the counting bounds can be checked:
//!
//! * on `∂A`, `k <= K(x) <= k + 1` where `k` is the minimum over `∂A`;
//! * in `A`, `K(x) <= k + 1`, hence `Σ|caps| <= (k + 1)|A|` and `nα <= k + 1`;
//! * the arc `x_{m-1} → x_m` holds `K + 1` or `K + 2` chain points, with `K`
//!   the number of caps containing `x_m` besides the one starting at `x_m`
//!   (for distinct chain points, the covering number just before `x_m`).

use serde::Serialize;

use crate::geom::{section_fraction, ConvexPolygon, OrientedLine, Point2, Side};
use crate::root::bisect;
use crate::sections::SearchConfig;
use crate::tol::EPS_CONTAIN_REL;
use crate::Error;

/// Boundary samples used for `k` and the boundary bounds.
pub const BOUNDARY_SAMPLES: usize = 512;
/// Quasi-random interior samples used for the interior bound.
pub const INTERIOR_SAMPLES: usize = 512;

/// A point of the boundary, located on an edge.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundaryPoint {
    pub edge_index: usize,
    /// Position along the edge, in `[0, 1)`.
    pub fraction: f64,
    pub point: Point2,
}

/// Arc-length parameterization of a polygon's boundary, starting at vertex 0
/// and running counterclockwise.
#[derive(Debug, Clone)]
pub struct Boundary<'a> {
    polygon: &'a ConvexPolygon,
    /// `starts[i]` is the arc position of vertex `i`.
    starts: Vec<f64>,
    perimeter: f64,
}

impl<'a> Boundary<'a> {
    pub fn new(polygon: &'a ConvexPolygon) -> Self {
        let mut starts = Vec::with_capacity(polygon.len());
        let mut s = 0.0;
        for (a, b) in polygon.edges() {
            starts.push(s);
            s += a.distance(b);
        }
        Boundary {
            polygon,
            starts,
            perimeter: s,
        }
    }

    pub fn perimeter(&self) -> f64 {
        self.perimeter
    }

    /// The boundary point at arc position `s` (taken modulo the perimeter).
    pub fn at(&self, s: f64) -> BoundaryPoint {
        let s = s.rem_euclid(self.perimeter);
        let edge_index = self.starts.partition_point(|&start| start <= s).saturating_sub(1);
        let (a, b) = self.polygon.edge(edge_index);
        let len = a.distance(b);
        let fraction = ((s - self.starts[edge_index]) / len).clamp(0.0, 1.0);
        if fraction >= 1.0 {
            let next = (edge_index + 1) % self.polygon.len();
            return BoundaryPoint {
                edge_index: next,
                fraction: 0.0,
                point: b,
            };
        }
        BoundaryPoint {
            edge_index,
            fraction,
            point: a.lerp(b, fraction),
        }
    }

    pub fn position(&self, p: &BoundaryPoint) -> f64 {
        let (a, b) = self.polygon.edge(p.edge_index);
        self.starts[p.edge_index] + p.fraction * a.distance(b)
    }

    /// Area between the chord from position `s` to `s + len` and the
    /// counterclockwise boundary arc joining them.
    pub fn cap_area(&self, s: f64, len: f64) -> f64 {
        let start = self.at(s);
        let end = self.at(s + len);
        let n = self.polygon.len();
        let verts = self.polygon.vertices();
        let origin = start.point;
        let mut sum = 0.0;
        let mut prev = Point2::ORIGIN;
        let mut push = |p: Point2| {
            let d = p - origin;
            sum += prev.cross(d);
            prev = d;
        };
        let s0 = self.position(&start);
        let mut i = (start.edge_index + 1) % n;
        for _ in 0..n {
            let offset = (self.starts[i] - s0).rem_euclid(self.perimeter);
            if offset >= len || offset == 0.0 {
                break;
            }
            push(verts[i]);
            i = (i + 1) % n;
        }
        push(end.point);
        0.5 * sum
    }
}

/// The boundary point at arc position `s` from vertex 0.
pub fn boundary_point_at(polygon: &ConvexPolygon, s: f64) -> BoundaryPoint {
    Boundary::new(polygon).at(s)
}

fn arc_step(boundary: &Boundary, area: f64, alpha: f64, from: f64, cfg: &SearchConfig) -> Result<f64, Error> {
    let p = boundary.perimeter();
    let residual = |len: f64| Ok::<_, Error>(boundary.cap_area(from, len) / area - alpha);
    let root = bisect(0.0, p, -alpha, 1.0 - alpha, 0.01 * cfg.eps_sec, cfg.max_iter, residual)?;
    if root.value.abs() > cfg.eps_sec {
        return Err(Error::NotConverged {
            what: "next chain point",
            residual: root.value.abs(),
            iterations: root.iterations,
        });
    }
    Ok(root.x)
}

fn check_chain_alpha(alpha: f64) -> Result<(), Error> {
    if alpha > 0.0 && alpha < 0.5 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "chain alpha must lie in (0, 1/2), got {alpha}"
        )))
    }
}

/// The point `y` following `x` counterclockwise on the boundary such that
/// the chord `x → y` cuts off area `α|A|` on its minus side, and that chord.
///
/// The cap area grows monotonically as `y` advances, so the arc length from
/// `x` to `y` is found by bisection.
pub fn next_chain_point(
    polygon: &ConvexPolygon,
    alpha: f64,
    x: &BoundaryPoint,
    cfg: &SearchConfig,
) -> Result<(BoundaryPoint, OrientedLine), Error> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidArgument(format!("alpha must lie in (0, 1), got {alpha}")));
    }
    let boundary = Boundary::new(polygon);
    let from = boundary.position(x);
    let len = arc_step(&boundary, polygon.area(), alpha, from, cfg)?;
    let y = boundary.at(from + len);
    Ok((y, OrientedLine::through(x.point, y.point)))
}

/// A cap `line⁻ ∩ A` together with the line that cuts it off.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Cap {
    pub line: OrientedLine,
    pub polygon: Option<ConvexPolygon>,
}

/// Number of caps whose minus half-plane contains `x`, counting points
/// within `tol` of a cap's line as inside.
pub fn covering_number(caps: &[Cap], x: Point2, tol: f64) -> usize {
    caps.iter().filter(|c| c.line.side_of(x) <= tol).count()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoverSample {
    pub point: Point2,
    pub count: usize,
}

/// Chain points on the closed arc `x_{m-1} → x_m`, and the number of caps
/// containing `x_m` other than the cap `D_{m+1}⁻` that starts there.
///
/// A chain that settles onto a periodic orbit puts several points within
/// rounding distance of each other, where membership of an arc end cannot be
/// decided. Each count is therefore a range: the low end leaves out points
/// within [`ARC_WINDOW_REL`]` · perimeter` of an arc end, the high end keeps them.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ArcCensus {
    pub points_min: usize,
    pub points_max: usize,
    pub cover_min: usize,
    pub cover_max: usize,
}

impl ArcCensus {
    /// Whether some resolution of the undecided points gives between
    /// `K + 1` and `K + 2` points on the arc.
    pub fn is_consistent(&self) -> bool {
        self.points_max > self.cover_min && self.points_min <= self.cover_max + 2
    }
}

pub const ARC_WINDOW_REL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChainReport {
    pub alpha: f64,
    /// `x₀ … x_n`.
    pub points: Vec<BoundaryPoint>,
    /// `D₁ … D_n`.
    pub lines: Vec<OrientedLine>,
    pub caps: Vec<Cap>,
    /// Minimum sampled covering number on the boundary.
    pub k: usize,
    /// Complete turns around the boundary made by `x₀ … x_n`.
    pub tours: usize,
    pub boundary_samples: Vec<CoverSample>,
    pub interior_samples: Vec<CoverSample>,
    pub arcs: Vec<ArcCensus>,
    pub area: f64,
    pub cap_area_sum: f64,
    /// `|x_n - x₀|`.
    pub closure_residual: f64,
    /// Largest `|fraction - α|` over the chain's lines.
    pub max_section_residual: f64,
    /// Largest distance from a line to its two defining points.
    pub max_incidence_residual: f64,
}

impl ChainReport {
    pub fn max_boundary_cover(&self) -> usize {
        self.boundary_samples.iter().map(|s| s.count).max().unwrap_or(0)
    }

    pub fn min_boundary_cover(&self) -> usize {
        self.boundary_samples.iter().map(|s| s.count).min().unwrap_or(0)
    }

    pub fn max_interior_cover(&self) -> usize {
        self.interior_samples.iter().map(|s| s.count).max().unwrap_or(0)
    }
}

/// Low-discrepancy points in the unit square (additive recurrence on the
/// plastic number).
fn r2_sequence() -> impl Iterator<Item = (f64, f64)> {
    const G: f64 = 1.324_717_957_244_746;
    let (a1, a2) = (1.0 / G, 1.0 / (G * G));
    (1u64..).map(move |i| ((0.5 + a1 * i as f64).fract(), (0.5 + a2 * i as f64).fract()))
}

/// `count` quasi-random points of the polygon's interior.
pub fn interior_points(polygon: &ConvexPolygon, count: usize) -> Vec<Point2> {
    let v = polygon.vertices();
    let (mut lo, mut hi) = (v[0], v[0]);
    for p in v {
        lo = Point2::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point2::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    r2_sequence()
        .map(|(u, w)| Point2::new(lo.x + u * (hi.x - lo.x), lo.y + w * (hi.y - lo.y)))
        .filter(|p| polygon.inner_distance(*p) > 0.0)
        .take(count)
        .collect()
}

/// Builds `x₀ … x_n` and the caps, and samples covering numbers on the
/// boundary and in the interior.
pub fn build_chain(
    polygon: &ConvexPolygon,
    alpha: f64,
    x0: &BoundaryPoint,
    n: usize,
    cfg: &SearchConfig,
) -> Result<ChainReport, Error> {
    check_chain_alpha(alpha)?;
    if n == 0 {
        return Err(Error::InvalidArgument("a chain needs at least one step".into()));
    }
    let boundary = Boundary::new(polygon);
    let perimeter = boundary.perimeter();
    let area = polygon.area();

    // unwrapped arc positions S_0 <= S_1 <= ... <= S_n
    let mut positions = vec![boundary.position(x0)];
    let mut points = vec![*x0];
    let mut lines = Vec::with_capacity(n);
    for _ in 0..n {
        let from = *positions.last().unwrap();
        let len = arc_step(&boundary, area, alpha, from, cfg)?;
        let y = boundary.at(from + len);
        lines.push(OrientedLine::through(points.last().unwrap().point, y.point));
        points.push(y);
        positions.push(from + len);
    }

    let caps: Vec<Cap> = lines
        .iter()
        .map(|line| Cap {
            line: *line,
            polygon: polygon.clip(line, Side::Minus),
        })
        .collect();

    let tol = EPS_CONTAIN_REL * polygon.extent();
    let boundary_samples: Vec<CoverSample> = (0..BOUNDARY_SAMPLES)
        .map(|j| {
            let point = boundary
                .at((j as f64 + 0.5) * perimeter / BOUNDARY_SAMPLES as f64)
                .point;
            CoverSample {
                point,
                count: covering_number(&caps, point, tol),
            }
        })
        .collect();
    let k = boundary_samples.iter().map(|s| s.count).min().unwrap_or(0);
    let interior_samples = interior_points(polygon, INTERIOR_SAMPLES)
        .into_iter()
        .map(|point| CoverSample {
            point,
            count: covering_number(&caps, point, tol),
        })
        .collect();

    let window = ARC_WINDOW_REL * perimeter;
    // (certainly on arc j, possibly on arc j) for a boundary position
    let on_arc = |p: f64, j: usize| {
        let len = positions[j] - positions[j - 1];
        let offset = (p - positions[j - 1]).rem_euclid(perimeter);
        let inside = offset >= window && offset <= len - window;
        (inside, inside || offset <= len + window || offset >= perimeter - window)
    };
    let arcs = (1..=n)
        .map(|m| {
            let mut census = ArcCensus {
                points_min: 2,
                points_max: 2,
                cover_min: 1,
                cover_max: 1,
            };
            for i in (0..=n).filter(|&i| i != m - 1 && i != m) {
                let (certain, possible) = on_arc(positions[i], m);
                census.points_min += certain as usize;
                census.points_max += possible as usize;
            }
            for j in (1..=n).filter(|&j| j != m && j != m + 1) {
                let (certain, possible) = on_arc(positions[m], j);
                census.cover_min += certain as usize;
                census.cover_max += possible as usize;
            }
            census
        })
        .collect();

    let max_section_residual = lines
        .iter()
        .map(|l| (section_fraction(l, polygon) - alpha).abs())
        .fold(0.0, f64::max);
    let max_incidence_residual = lines
        .iter()
        .zip(points.windows(2))
        .map(|(l, w)| l.side_of(w[0].point).abs().max(l.side_of(w[1].point).abs()))
        .fold(0.0, f64::max);
    let travelled = positions[n] - positions[0];

    Ok(ChainReport {
        alpha,
        closure_residual: points[n].point.distance(points[0].point),
        cap_area_sum: caps.iter().map(|c| c.polygon.as_ref().map_or(0.0, |p| p.area())).sum(),
        tours: (travelled / perimeter).floor() as usize,
        points,
        lines,
        caps,
        k,
        boundary_samples,
        interior_samples,
        arcs,
        area,
        max_section_residual,
        max_incidence_residual,
    })
}
