use std::f64::consts::TAU;

use serde::{Serialize, Serializer};

use super::{GeomError, OrientedLine, Point2, Side};
use crate::tol::{EPS_AREA_ABS, EPS_GEOM, EPS_MERGE_REL};

/// A convex polygon with strictly counterclockwise vertices.
///
/// Construction normalizes the vertex list (merges near-duplicate vertices,
/// drops collinear ones) and rejects anything that is not a non-degenerate
/// convex body.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Point2>,
}

impl Serialize for ConvexPolygon {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.vertices.serialize(serializer)
    }
}

/// Shoelace accumulator anchored at the first pushed vertex, which keeps
/// the products small for polygons far from the origin.
#[derive(Default)]
struct Shoelace {
    origin: Option<Point2>,
    prev: Point2,
    sum: f64,
}

impl Shoelace {
    #[inline]
    fn push(&mut self, p: Point2) {
        match self.origin {
            None => {
                self.origin = Some(p);
                self.prev = Point2::ORIGIN;
            }
            Some(o) => {
                let d = p - o;
                self.sum += self.prev.cross(d);
                self.prev = d;
            }
        }
    }

    fn area(&self) -> f64 {
        0.5 * self.sum
    }
}

fn signed_area(vertices: &[Point2]) -> f64 {
    let mut acc = Shoelace::default();
    for &v in vertices {
        acc.push(v);
    }
    acc.area()
}

fn extent_of(vertices: &[Point2]) -> f64 {
    let (mut lo, mut hi) = (vertices[0], vertices[0]);
    for v in vertices {
        lo.x = lo.x.min(v.x);
        lo.y = lo.y.min(v.y);
        hi.x = hi.x.max(v.x);
        hi.y = hi.y.max(v.y);
    }
    hi.distance(lo)
}

/// Merges near-duplicate vertices and removes vertices whose two edges are
/// parallel (turn sine within `EPS_GEOM`).
fn normalize(mut vertices: Vec<Point2>) -> Vec<Point2> {
    if vertices.len() < 3 {
        return vertices;
    }
    let merge = EPS_MERGE_REL * extent_of(&vertices);
    vertices.dedup_by(|b, a| a.distance(*b) <= merge);
    while vertices.len() > 1 && vertices[0].distance(vertices[vertices.len() - 1]) <= merge {
        vertices.pop();
    }

    loop {
        let n = vertices.len();
        if n < 3 {
            return vertices;
        }
        let flat = (0..n).find(|&i| {
            let prev = vertices[(i + n - 1) % n];
            let cur = vertices[i];
            let next = vertices[(i + 1) % n];
            let (e1, e2) = (cur - prev, next - cur);
            e1.cross(e2).abs() <= EPS_GEOM * e1.norm() * e2.norm()
        });
        match flat {
            Some(i) => {
                vertices.remove(i);
            }
            None => return vertices,
        }
    }
}

impl ConvexPolygon {
    /// Validates and normalizes a counterclockwise vertex list.
    pub fn new(vertices: Vec<Point2>) -> Result<Self, GeomError> {
        if vertices.len() < 3 {
            return Err(GeomError::TooFewVertices(vertices.len()));
        }
        if let Some(index) = vertices.iter().position(|v| !v.is_finite()) {
            return Err(GeomError::NonFinite { index });
        }
        let vertices = normalize(vertices);
        if vertices.len() < 3 {
            return Err(GeomError::Degenerate { area: 0.0 });
        }
        let area = signed_area(&vertices);
        if area.abs() <= EPS_AREA_ABS {
            return Err(GeomError::Degenerate { area: area.abs() });
        }
        if area < 0.0 {
            return Err(GeomError::Clockwise);
        }

        let n = vertices.len();
        let mut winding = 0.0;
        for i in 0..n {
            let prev = vertices[(i + n - 1) % n];
            let cur = vertices[i];
            let next = vertices[(i + 1) % n];
            let (e1, e2) = (cur - prev, next - cur);
            let cross = e1.cross(e2);
            if cross < -EPS_GEOM * e1.norm() * e2.norm() {
                return Err(GeomError::NotConvex { index: i });
            }
            winding += cross.atan2(e1.dot(e2));
        }
        // all left turns but wound more than once, e.g. a pentagram
        if (winding - TAU).abs() > 1e-6 {
            return Err(GeomError::NotSimple);
        }
        Ok(ConvexPolygon { vertices })
    }

    pub fn from_coords(coords: &[[f64; 2]]) -> Result<Self, GeomError> {
        ConvexPolygon::new(coords.iter().copied().map(Point2::from).collect())
    }

    /// Convex hull of a point set (Andrew's monotone chain).
    pub fn hull(points: &[Point2]) -> Result<Self, GeomError> {
        if let Some(index) = points.iter().position(|v| !v.is_finite()) {
            return Err(GeomError::NonFinite { index });
        }
        let mut pts = points.to_vec();
        pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
        pts.dedup();
        if pts.len() < 3 {
            return Err(GeomError::TooFewVertices(pts.len()));
        }
        let turn = |o: Point2, a: Point2, b: Point2| (a - o).cross(b - o);
        let mut hull: Vec<Point2> = Vec::with_capacity(2 * pts.len());
        for &p in &pts {
            while hull.len() >= 2 && turn(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
                hull.pop();
            }
            hull.push(p);
        }
        let lower_len = hull.len() + 1;
        for &p in pts.iter().rev().skip(1) {
            while hull.len() >= lower_len && turn(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
        ConvexPolygon::new(hull)
    }

    /// Regular `m`-gon inscribed in the circle of the given center and radius,
    /// with its first vertex at angle 0.
    pub fn regular(m: usize, center: Point2, radius: f64) -> Result<Self, GeomError> {
        let vertices = (0..m)
            .map(|i| {
                let a = TAU * i as f64 / m as f64;
                center + Point2::new(a.cos(), a.sin()) * radius
            })
            .collect();
        ConvexPolygon::new(vertices)
    }

    /// Axis-aligned rectangle `[min.x, max.x] x [min.y, max.y]`.
    pub fn rectangle(min: Point2, max: Point2) -> Result<Self, GeomError> {
        ConvexPolygon::new(vec![min, Point2::new(max.x, min.y), max, Point2::new(min.x, max.y)])
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edge `i`, from vertex `i` to vertex `i + 1`.
    pub fn edge(&self, i: usize) -> (Point2, Point2) {
        let n = self.vertices.len();
        (self.vertices[i % n], self.vertices[(i + 1) % n])
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point2, Point2)> + '_ {
        (0..self.len()).map(move |i| self.edge(i))
    }

    pub fn area(&self) -> f64 {
        signed_area(&self.vertices)
    }

    pub fn perimeter(&self) -> f64 {
        self.edges().map(|(a, b)| a.distance(b)).sum()
    }

    pub fn centroid(&self) -> Point2 {
        let o = self.vertices[0];
        let (mut cx, mut cy, mut twice_area) = (0.0, 0.0, 0.0);
        for (a, b) in self.edges() {
            let (a, b) = (a - o, b - o);
            let w = a.cross(b);
            cx += (a.x + b.x) * w;
            cy += (a.y + b.y) * w;
            twice_area += w;
        }
        o + Point2::new(cx, cy) * (1.0 / (3.0 * twice_area))
    }

    /// Diagonal of the bounding box; within a factor sqrt(2) of the diameter.
    pub fn extent(&self) -> f64 {
        extent_of(&self.vertices)
    }

    /// Largest distance between two vertices.
    pub fn diameter(&self) -> f64 {
        let v = &self.vertices;
        let mut best: f64 = 0.0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                best = best.max(v[i].distance(v[j]));
            }
        }
        best
    }

    /// Range of `<v, normal>` over the vertices.
    pub fn support_interval(&self, normal: Point2) -> (f64, f64) {
        self.vertices
            .iter()
            .map(|v| v.dot(normal))
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), s| (lo.min(s), hi.max(s)))
    }

    /// Signed distance from `p` to the boundary, positive inside.
    pub fn inner_distance(&self, p: Point2) -> f64 {
        self.edges()
            .map(|(a, b)| {
                let e = b - a;
                e.cross(p - a) / e.norm()
            })
            .fold(f64::INFINITY, f64::min)
    }

    pub fn contains(&self, p: Point2, tol: f64) -> bool {
        self.inner_distance(p) >= -tol
    }

    /// Area of `self ∩ side(line)` without building the clipped polygon.
    pub fn clipped_area(&self, line: &OrientedLine, side: Side) -> f64 {
        let normal = line.normal();
        let t = line.t();
        let sign = match side {
            Side::Plus => 1.0,
            Side::Minus => -1.0,
        };
        let mut acc = Shoelace::default();
        let v = &self.vertices;
        let mut prev = v[v.len() - 1];
        let mut s_prev = sign * (prev.dot(normal) - t);
        for &cur in v {
            let s_cur = sign * (cur.dot(normal) - t);
            if (s_prev > 0.0 && s_cur < 0.0) || (s_prev < 0.0 && s_cur > 0.0) {
                acc.push(prev.lerp(cur, s_prev / (s_prev - s_cur)));
            }
            if s_cur >= 0.0 {
                acc.push(cur);
            }
            prev = cur;
            s_prev = s_cur;
        }
        let area = acc.area();
        if area <= EPS_AREA_ABS {
            0.0
        } else {
            area
        }
    }

    /// Intersection with a closed half-plane; `None` when it has no area.
    pub fn clip(&self, line: &OrientedLine, side: Side) -> Option<ConvexPolygon> {
        let normal = line.normal();
        let t = line.t();
        let sign = match side {
            Side::Plus => 1.0,
            Side::Minus => -1.0,
        };
        let v = &self.vertices;
        let mut out = Vec::with_capacity(v.len() + 2);
        let mut prev = v[v.len() - 1];
        let mut s_prev = sign * (prev.dot(normal) - t);
        for &cur in v {
            let s_cur = sign * (cur.dot(normal) - t);
            if (s_prev > 0.0 && s_cur < 0.0) || (s_prev < 0.0 && s_cur > 0.0) {
                out.push(prev.lerp(cur, s_prev / (s_prev - s_cur)));
            }
            if s_cur >= 0.0 {
                out.push(cur);
            }
            prev = cur;
            s_prev = s_cur;
        }
        if out.len() < 3 || signed_area(&out) <= EPS_AREA_ABS {
            return None;
        }
        let out = normalize(out);
        if out.len() < 3 || signed_area(&out) <= EPS_AREA_ABS {
            return None;
        }
        Some(ConvexPolygon { vertices: out })
    }

    /// Both clips: `(plus, minus)`.
    pub fn split(&self, line: &OrientedLine) -> (Option<ConvexPolygon>, Option<ConvexPolygon>) {
        (self.clip(line, Side::Plus), self.clip(line, Side::Minus))
    }

    /// Endpoints of `line ∩ self`, ordered along the line's direction.
    pub fn chord(&self, line: &OrientedLine) -> Option<(Point2, Point2)> {
        let dir = line.direction();
        let mut hits: Vec<Point2> = Vec::new();
        for (a, b) in self.edges() {
            let (sa, sb) = (line.side_of(a), line.side_of(b));
            if sa == 0.0 {
                hits.push(a);
            }
            if (sa > 0.0 && sb < 0.0) || (sa < 0.0 && sb > 0.0) {
                hits.push(a.lerp(b, sa / (sa - sb)));
            }
        }
        let lo = hits.iter().copied().min_by(|p, q| p.dot(dir).total_cmp(&q.dot(dir)))?;
        let hi = hits.iter().copied().max_by(|p, q| p.dot(dir).total_cmp(&q.dot(dir)))?;
        Some((lo, hi))
    }
}

/// Area of a polygon (shoelace).
pub fn area(polygon: &ConvexPolygon) -> f64 {
    polygon.area()
}

/// `polygon ∩ side(line)`, or `None` if the intersection has no area.
pub fn clip(polygon: &ConvexPolygon, line: &OrientedLine, side: Side) -> Option<ConvexPolygon> {
    polygon.clip(line, side)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_PI_4, PI};

    fn unit_square() -> ConvexPolygon {
        ConvexPolygon::from_coords(&[[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]).unwrap()
    }

    #[test]
    fn area_examples() {
        assert_eq!(unit_square().area(), 1.0);
        let tri = ConvexPolygon::from_coords(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]).unwrap();
        assert_eq!(tri.area(), 0.5);
        // (64/2) sin(2pi/64), evaluated separately
        let gon = ConvexPolygon::regular(64, Point2::ORIGIN, 1.0).unwrap();
        assert_abs_diff_eq!(gon.area(), 3.1365484905459393, epsilon = 1e-13);
    }

    #[test]
    fn rejects_invalid_input() {
        assert!(matches!(
            ConvexPolygon::from_coords(&[[0.0, 0.0], [1.0, 0.0]]),
            Err(GeomError::TooFewVertices(2))
        ));
        assert!(matches!(
            ConvexPolygon::from_coords(&[[0.0, 0.0], [0.0, 1.0], [1.0, 1.0], [1.0, 0.0]]),
            Err(GeomError::Clockwise)
        ));
        assert!(matches!(
            ConvexPolygon::from_coords(&[[0.0, 0.0], [2.0, 0.0], [1.0, 0.2], [1.0, 1.0]]),
            Err(GeomError::NotConvex { .. })
        ));
        assert!(matches!(
            ConvexPolygon::from_coords(&[[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]]),
            Err(GeomError::Degenerate { .. })
        ));
        assert!(matches!(
            ConvexPolygon::from_coords(&[[0.0, 0.0], [f64::NAN, 0.0], [0.0, 1.0]]),
            Err(GeomError::NonFinite { index: 1 })
        ));
        let star: Vec<Point2> = (0..5)
            .map(|i| {
                let a = 4.0 * PI * i as f64 / 5.0;
                Point2::new(a.cos(), a.sin())
            })
            .collect();
        assert!(matches!(ConvexPolygon::new(star), Err(GeomError::NotSimple)));
    }

    #[test]
    fn normalization_drops_collinear_and_duplicate_vertices() {
        let p = ConvexPolygon::from_coords(&[[0.0, 0.0], [0.5, 0.0], [1.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])
            .unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.area(), 1.0);
    }

    #[test]
    fn clip_examples() {
        let sq = unit_square();
        let below = sq.clip(&OrientedLine::new(0.0, 0.5), Side::Minus).unwrap();
        assert_abs_diff_eq!(below.area(), 0.5, epsilon = 1e-15);
        let mut ys: Vec<f64> = below.vertices().iter().map(|v| v.y).collect();
        ys.sort_by(f64::total_cmp);
        assert_eq!(ys, vec![0.0, 0.0, 0.5, 0.5]);

        let all = sq.clip(&OrientedLine::new(0.0, 2.0), Side::Minus).unwrap();
        assert_eq!(all.area(), 1.0);
        assert!(sq.clip(&OrientedLine::new(0.0, 2.0), Side::Plus).is_none());

        let diagonal = OrientedLine::through(Point2::ORIGIN, Point2::new(1.0, 1.0));
        let (plus, minus) = sq.split(&diagonal);
        assert_abs_diff_eq!(plus.unwrap().area(), 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(minus.unwrap().area(), 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(diagonal.theta(), FRAC_PI_4, epsilon = 1e-15);
    }

    #[test]
    fn clipped_area_matches_clip() {
        let gon = ConvexPolygon::regular(7, Point2::new(3.0, -2.0), 1.5).unwrap();
        for i in 0..40 {
            let line = OrientedLine::new(0.37 * i as f64, -4.0 + 0.2 * i as f64);
            for side in [Side::Plus, Side::Minus] {
                let expected = gon.clip(&line, side).map_or(0.0, |p| p.area());
                assert_abs_diff_eq!(gon.clipped_area(&line, side), expected, epsilon = 1e-13);
            }
        }
    }

    #[test]
    fn hull_of_scattered_points() {
        let pts = [
            [0.0, 0.0],
            [2.0, 0.0],
            [1.0, 0.5],
            [2.0, 2.0],
            [0.3, 1.0],
            [0.0, 2.0],
            [1.0, 0.0],
        ]
        .map(Point2::from);
        let h = ConvexPolygon::hull(&pts).unwrap();
        assert_eq!(h.len(), 4);
        assert_eq!(h.area(), 4.0);
    }

    #[test]
    fn chord_endpoints() {
        let sq = unit_square();
        let (a, b) = sq.chord(&OrientedLine::new(0.0, 0.25)).unwrap();
        assert_abs_diff_eq!(a.x, 0.0);
        assert_abs_diff_eq!(b.x, 1.0);
        assert_abs_diff_eq!(a.y, 0.25);
        assert!(sq.chord(&OrientedLine::new(0.0, 3.0)).is_none());
    }

    #[test]
    fn centroid_and_containment() {
        let sq = unit_square();
        let c = sq.centroid();
        assert_abs_diff_eq!(c.x, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(c.y, 0.5, epsilon = 1e-15);
        assert!(sq.contains(c, 0.0));
        assert!(!sq.contains(Point2::new(1.1, 0.5), 1e-9));
        assert_abs_diff_eq!(sq.inner_distance(Point2::new(0.5, 0.1)), 0.1, epsilon = 1e-15);
    }
}
