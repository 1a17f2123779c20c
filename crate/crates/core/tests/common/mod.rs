#![allow(dead_code)]

use pizza_core::{ConvexPolygon, Pizza, Point2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Hull of uniform points in a disk, redrawn until it has at least 6 vertices.
pub fn random_convex(rng: &mut impl Rng, center: Point2, radius: f64) -> ConvexPolygon {
    loop {
        let count = rng.gen_range(8..24);
        let pts: Vec<Point2> = (0..count)
            .map(|_| {
                let r = radius * rng.gen::<f64>().sqrt();
                let a = rng.gen_range(0.0..std::f64::consts::TAU);
                center + Point2::new(a.cos(), a.sin()) * r
            })
            .collect();
        if let Ok(p) = ConvexPolygon::hull(&pts) {
            if p.len() >= 6 {
                return p;
            }
        }
    }
}

/// A random dough and a random topping drawn as the hull of points inside it.
pub fn random_pizza(seed: u64) -> Pizza {
    let mut rng = rng(seed);
    let center = Point2::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
    let radius = rng.gen_range(0.5..3.0);
    let dough = random_convex(&mut rng, center, radius);
    let (lo, hi) = dough.vertices().iter().fold(
        (
            Point2::new(f64::INFINITY, f64::INFINITY),
            Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
        ),
        |(lo, hi), v| {
            (
                Point2::new(lo.x.min(v.x), lo.y.min(v.y)),
                Point2::new(hi.x.max(v.x), hi.y.max(v.y)),
            )
        },
    );
    // points of a random disk centered in the dough, kept if inside the dough
    let c = loop {
        let c = Point2::new(rng.gen_range(lo.x..hi.x), rng.gen_range(lo.y..hi.y));
        if dough.inner_distance(c) > 0.0 {
            break c;
        }
    };
    let spread = rng.gen_range(0.2..1.0) * hi.distance(lo);
    loop {
        let mut pts = Vec::new();
        while pts.len() < 12 {
            let r = spread * rng.gen::<f64>().sqrt();
            let a = rng.gen_range(0.0..std::f64::consts::TAU);
            let p = c + Point2::new(a.cos(), a.sin()) * r;
            if dough.inner_distance(p) > 0.0 {
                pts.push(p);
            }
        }
        if let Ok(topping) = ConvexPolygon::hull(&pts) {
            if topping.len() >= 4 && topping.area() > 1e-3 * dough.area() {
                return Pizza::new(topping, dough).unwrap();
            }
        }
    }
}
