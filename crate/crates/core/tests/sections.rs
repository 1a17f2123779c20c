mod common;

use std::f64::consts::{PI, TAU};

use pizza_core::geom::section_fraction;
use pizza_core::sections::{
    find_corollary_section, find_halving_cut, find_simultaneous_section, halving_imbalance, profile, Body, SearchConfig,
};

const ALPHAS: [f64; 9] = [0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45];

#[test]
fn simultaneous_and_corollary_sections_on_random_pizzas() {
    let cfg = SearchConfig::default();
    for seed in 0..25 {
        let pizza = common::random_pizza(seed);
        for alpha in ALPHAS {
            let s = find_simultaneous_section(&pizza, alpha, &cfg).unwrap();
            assert!(s.beta >= alpha - 1e-6, "seed {seed}, alpha {alpha}: beta {}", s.beta);
            assert!(s.residual <= 1e-12);
            assert!((section_fraction(&s.line, pizza.dough()) - s.beta).abs() <= 1e-12);

            let c = find_corollary_section(&pizza, alpha, &cfg).unwrap();
            assert!(c.beta <= alpha + 1e-6, "seed {seed}, alpha {alpha}: beta {}", c.beta);
            assert!(c.residual <= 1e-12);
        }
    }
}

#[test]
fn halving_cut_on_random_pizzas() {
    let cfg = SearchConfig::default();
    for seed in 0..40 {
        let pizza = common::random_pizza(seed);
        let line = find_halving_cut(&pizza, &cfg).unwrap();
        assert!((section_fraction(&line, pizza.dough()) - 0.5).abs() <= 1e-9);
        assert!((section_fraction(&line, pizza.topping()) - 0.5).abs() <= 1e-9);
    }
}

#[test]
fn halving_imbalance_antisymmetry() {
    let cfg = SearchConfig::default();
    for seed in 0..5 {
        let pizza = common::random_pizza(seed);
        for j in 0..64 {
            let theta = TAU * j as f64 / 64.0;
            let g = halving_imbalance(&pizza, theta, &cfg).unwrap();
            let h = halving_imbalance(&pizza, theta + PI, &cfg).unwrap();
            assert!((g + h).abs() <= 1e-12, "seed {seed}, theta {theta}: {g} {h}");
        }
    }
}

#[test]
fn profile_continuity() {
    let cfg = SearchConfig::default();
    for seed in 0..10 {
        let pizza = common::random_pizza(seed);
        let b = pizza.dough();
        let bound = 10.0 * (TAU / 1024.0) * b.diameter().powi(2) / b.area();
        for body in [Body::Topping, Body::Dough] {
            let p = profile(&pizza, 0.3, body, 1024, &cfg).unwrap();
            assert!(p.fractions.iter().all(|f| (0.0..=1.0).contains(f)));
            assert!(p.max_jump() < bound, "seed {seed}: jump {} bound {bound}", p.max_jump());
        }
    }
}

#[test]
fn scan_is_independent_of_thread_count() {
    let cfg = SearchConfig::default();
    let pizza = common::random_pizza(3);
    let serial = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let a = serial.install(|| find_simultaneous_section(&pizza, 0.2, &cfg).unwrap());
    let b = find_simultaneous_section(&pizza, 0.2, &cfg).unwrap();
    assert_eq!(a, b);
}
