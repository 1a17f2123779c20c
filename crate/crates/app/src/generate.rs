//! Fixture pizzas.

use std::collections::BTreeMap;

use pizza_core::{ConvexPolygon, Pizza, Point2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::document::{Metadata, PizzaDocument};
use crate::error::AppError;

fn invalid(msg: String) -> AppError {
    AppError::InvalidInput(msg)
}

fn metadata(generator: &str, params: &[(&str, f64)], seed: Option<u64>) -> Metadata {
    Metadata {
        name: None,
        generator: Some(generator.to_string()),
        params: params
            .iter()
            .map(|(k, v)| (k.to_string(), *v))
            .collect::<BTreeMap<_, _>>(),
        seed,
    }
}

/// Concentric regular `m`-gons of circumradius `r` (topping) and `big_r`
/// (dough) centred at the origin.
pub fn disk_pair(r: f64, big_r: f64, m: usize) -> Result<PizzaDocument, AppError> {
    if !(r > 0.0 && r <= big_r && big_r.is_finite()) {
        return Err(invalid(format!("disk_pair needs 0 < r <= R, got r = {r}, R = {big_r}")));
    }
    if m < 64 {
        return Err(invalid(format!(
            "disk_pair needs at least 64 vertices per disk, got {m}"
        )));
    }
    let pizza = Pizza::new(
        ConvexPolygon::regular(m, Point2::ORIGIN, r)?,
        ConvexPolygon::regular(m, Point2::ORIGIN, big_r)?,
    )?;
    Ok(PizzaDocument::from_pizza(
        &pizza,
        Some(metadata("disk_pair", &[("r", r), ("R", big_r), ("m", m as f64)], None)),
    ))
}

/// Square of side `a` centred in the square `[0, b]²`.
pub fn square_pair(a: f64, b: f64) -> Result<PizzaDocument, AppError> {
    if !(a > 0.0 && a <= b && b.is_finite()) {
        return Err(invalid(format!("square_pair needs 0 < a <= b, got a = {a}, b = {b}")));
    }
    let lo = (b - a) / 2.0;
    let pizza = Pizza::new(
        ConvexPolygon::rectangle(Point2::new(lo, lo), Point2::new(lo + a, lo + a))?,
        ConvexPolygon::rectangle(Point2::ORIGIN, Point2::new(b, b))?,
    )?;
    Ok(PizzaDocument::from_pizza(
        &pizza,
        Some(metadata("square_pair", &[("a", a), ("b", b)], None)),
    ))
}

/// Square of side `a` with lower-left corner `(x, y)` inside `[0, b]²`.
pub fn offset_square(a: f64, b: f64, x: f64, y: f64) -> Result<PizzaDocument, AppError> {
    let fits = a > 0.0 && x >= 0.0 && y >= 0.0 && x + a <= b && y + a <= b && b.is_finite();
    if !fits {
        return Err(invalid(format!(
            "offset_square needs [x, x + a] x [y, y + a] inside [0, b]^2, got a = {a}, b = {b}, x = {x}, y = {y}"
        )));
    }
    let pizza = Pizza::new(
        ConvexPolygon::rectangle(Point2::new(x, y), Point2::new(x + a, y + a))?,
        ConvexPolygon::rectangle(Point2::ORIGIN, Point2::new(b, b))?,
    )?;
    Ok(PizzaDocument::from_pizza(
        &pizza,
        Some(metadata(
            "offset_square",
            &[("a", a), ("b", b), ("x", x), ("y", y)],
            None,
        )),
    ))
}

fn random_hull(
    rng: &mut ChaCha8Rng,
    min_vertices: usize,
    mut sample: impl FnMut(&mut ChaCha8Rng) -> Point2,
) -> ConvexPolygon {
    loop {
        let count = rng.gen_range(8..=24);
        let points: Vec<Point2> = (0..count).map(|_| sample(rng)).collect();
        if let Ok(hull) = ConvexPolygon::hull(&points) {
            if hull.len() >= min_vertices {
                return hull;
            }
        }
    }
}

/// Random nested pair. The dough is the hull of random points in the unit
/// disk, redrawn until it has at least 6 vertices. The topping is the hull
/// of random points of the dough, shrunk towards the dough's centroid.
pub fn random_pair(seed: u64) -> Result<PizzaDocument, AppError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let in_disk = |rng: &mut ChaCha8Rng| loop {
        let p = Point2::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        if p.norm() <= 1.0 {
            return p;
        }
    };
    let dough = random_hull(&mut rng, 6, in_disk);
    let c = dough.centroid();
    let in_dough = |rng: &mut ChaCha8Rng| loop {
        let p = Point2::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        if dough.contains(p, 0.0) {
            return p;
        }
    };
    let topping = loop {
        let hull = random_hull(&mut rng, 3, in_dough);
        let shrink: f64 = rng.gen_range(0.3..0.9);
        let shrunk: Vec<Point2> = hull.vertices().iter().map(|v| c.lerp(*v, shrink)).collect();
        if let Ok(t) = ConvexPolygon::new(shrunk) {
            if t.area() >= 0.01 * dough.area() {
                break t;
            }
        }
    };
    let pizza = Pizza::new(topping, dough)?;
    Ok(PizzaDocument::from_pizza(
        &pizza,
        Some(metadata("random_pair", &[], Some(seed))),
    ))
}
