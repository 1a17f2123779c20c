//! SVG 1.1 drawings. The view box is the dough's bounding box grown by 5%
//! of its larger side on every edge; y points up in the drawing.

use std::fmt::Write;

use pizza_core::chain::ChainReport;
use pizza_core::partition::PartitionTree;
use pizza_core::sections::SimultaneousSection;
use pizza_core::{ConvexPolygon, Pizza, Point2, Side};

const WIDTH_PX: f64 = 800.0;
const DOUGH_FILL: &str = "#f2d6a2";
const DOUGH_STROKE: &str = "#8a5a19";
const TOPPING_FILL: &str = "#c8372d";
const SLICE_TINTS: [&str; 8] = [
    "#4e79a7", "#f28e2b", "#59a14f", "#b07aa1", "#76b7b2", "#edc948", "#ff9da7", "#9c755f",
];

struct Canvas {
    out: String,
    stroke: f64,
}

impl Canvas {
    fn new(frame: &ConvexPolygon) -> Self {
        let (mut min, mut max) = (frame.vertices()[0], frame.vertices()[0]);
        for v in frame.vertices() {
            min = Point2::new(min.x.min(v.x), min.y.min(v.y));
            max = Point2::new(max.x.max(v.x), max.y.max(v.y));
        }
        let size = (max.x - min.x).max(max.y - min.y);
        let margin = 0.05 * size;
        let (w, h) = (max.x - min.x + 2.0 * margin, max.y - min.y + 2.0 * margin);
        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">",
            num(WIDTH_PX),
            num(WIDTH_PX * h / w),
            num(min.x - margin),
            num(-max.y - margin),
            num(w),
            num(h)
        );
        Canvas {
            out,
            stroke: 0.004 * size,
        }
    }

    fn polygon(&mut self, class: &str, poly: &ConvexPolygon, style: &str) {
        let points: Vec<String> = poly.vertices().iter().map(|p| coord(*p)).collect();
        let _ = writeln!(
            self.out,
            "  <polygon class=\"{class}\" points=\"{}\" {style}/>",
            points.join(" ")
        );
    }

    fn closed_path(&mut self, class: &str, poly: &ConvexPolygon, style: &str) {
        let mut d = String::new();
        for (i, p) in poly.vertices().iter().enumerate() {
            let _ = write!(d, "{}{} ", if i == 0 { "M" } else { "L" }, coord(*p));
        }
        d.push('Z');
        let _ = writeln!(self.out, "  <path class=\"{class}\" d=\"{d}\" {style}/>");
    }

    fn segment(&mut self, class: &str, a: Point2, b: Point2, style: &str) {
        let _ = writeln!(
            self.out,
            "  <path class=\"{class}\" d=\"M{} L{}\" {style}/>",
            coord(a),
            coord(b)
        );
    }

    fn dot(&mut self, p: Point2, fill: &str) {
        let _ = writeln!(
            self.out,
            "  <circle class=\"point\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{fill}\"/>",
            num(p.x),
            num(-p.y),
            num(1.5 * self.stroke)
        );
    }

    fn pizza(&mut self, pizza: &Pizza) {
        let w = num(self.stroke);
        self.polygon(
            "dough",
            pizza.dough(),
            &format!("fill=\"{DOUGH_FILL}\" stroke=\"{DOUGH_STROKE}\" stroke-width=\"{w}\""),
        );
        self.polygon(
            "topping",
            pizza.topping(),
            &format!("fill=\"{TOPPING_FILL}\" fill-opacity=\"0.55\" stroke=\"none\""),
        );
    }

    fn finish(mut self) -> String {
        self.out.push_str("</svg>\n");
        self.out
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    // avoid "-0.000000"
    if s.trim_start_matches('-').trim_start_matches(['0', '.']).is_empty() {
        "0.000000".to_string()
    } else {
        s
    }
}

fn coord(p: Point2) -> String {
    format!("{},{}", num(p.x), num(-p.y))
}

/// Dough, topping, one tinted `<path>` per slice and one `<path>` per cut.
pub fn partition(pizza: &Pizza, tree: &PartitionTree) -> String {
    let mut c = Canvas::new(pizza.dough());
    c.pizza(pizza);
    for (i, slice) in tree.slices().into_iter().enumerate() {
        let tint = SLICE_TINTS[i % SLICE_TINTS.len()];
        c.closed_path(
            "slice",
            slice,
            &format!("fill=\"{tint}\" fill-opacity=\"0.35\" stroke=\"none\""),
        );
    }
    let w = num(c.stroke);
    for (piece, cut) in tree.cuts() {
        // a cut always crosses its piece, so the chord exists; fall back to a
        // zero-length path to keep one element per cut
        let (a, b) = piece.chord(cut).unwrap_or((piece.centroid(), piece.centroid()));
        c.segment(
            "cut",
            a,
            b,
            &format!("fill=\"none\" stroke=\"#1b1b1b\" stroke-width=\"{w}\""),
        );
    }
    c.finish()
}

/// Pizza with the section line across the dough and the minus side of the
/// dough outlined.
pub fn section(pizza: &Pizza, section: &SimultaneousSection) -> String {
    let mut c = Canvas::new(pizza.dough());
    c.pizza(pizza);
    let w = num(c.stroke);
    if let Some(minus) = pizza.dough().clip(&section.line, Side::Minus) {
        c.closed_path(
            "minus-side",
            &minus,
            &format!("fill=\"#4e79a7\" fill-opacity=\"0.25\" stroke=\"#4e79a7\" stroke-width=\"{w}\""),
        );
    }
    if let Some((a, b)) = pizza.dough().chord(&section.line) {
        c.segment(
            "section",
            a,
            b,
            &format!("fill=\"none\" stroke=\"#1b1b1b\" stroke-width=\"{w}\""),
        );
    }
    c.finish()
}

/// Body with shaded caps, chords between consecutive chain points, and the
/// chain points themselves.
pub fn chain(body: &ConvexPolygon, report: &ChainReport) -> String {
    let mut c = Canvas::new(body);
    let w = num(c.stroke);
    c.polygon(
        "body",
        body,
        &format!("fill=\"{DOUGH_FILL}\" stroke=\"{DOUGH_STROKE}\" stroke-width=\"{w}\""),
    );
    for cap in &report.caps {
        if let Some(poly) = &cap.polygon {
            c.closed_path("cap", poly, "fill=\"#4e79a7\" fill-opacity=\"0.15\" stroke=\"none\"");
        }
    }
    for pair in report.points.windows(2) {
        c.segment(
            "chord",
            pair[0].point,
            pair[1].point,
            &format!("fill=\"none\" stroke=\"#1b1b1b\" stroke-width=\"{w}\""),
        );
    }
    for p in &report.points {
        c.dot(p.point, "#c8372d");
    }
    c.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_have_fixed_precision() {
        assert_eq!(num(1.0), "1.000000");
        assert_eq!(num(-1e-9), "0.000000");
        assert_eq!(num(-0.25), "-0.250000");
        assert_eq!(coord(Point2::new(1.0, 2.0)), "1.000000,-2.000000");
    }
}
