//! Searches over the circle of directions.
//!
//! For a fixed α and body `X`, every direction θ has exactly one α-section
//! `Δ(α, θ, X)`, and it moves continuously with θ. Evaluating the area
//! fraction of the *other* body on its minus side turns each question below
//! into a continuous function on the circle:
//!
//! * [`find_simultaneous_section`]: an α-section of the topping cutting at
//!   least α of the dough (α < ½).
//! * [`find_corollary_section`]: an α-section of the dough cutting at most α
//!   of the topping (α < ½).
//! * [`find_halving_cut`]: one line halving both bodies.
//!
//! Scans evaluate their samples in parallel and reduce in sample order, so
//! results do not depend on the thread count.

use std::f64::consts::{PI, TAU};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::geom::{alpha_section_with, section_fraction, ConvexPolygon, OrientedLine, Pizza};
use crate::root::{bisect, golden_max};
use crate::tol::{EPS_SEC, EPS_THM};
use crate::Error;

/// Sampling densities, tolerances and iteration budgets for the searches.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchConfig {
    /// Uniform samples of the full circle for argmax/argmin and sign scans.
    pub scan_samples: usize,
    /// Uniform samples of `[0, π]` when bracketing the halving cut.
    pub halving_samples: usize,
    pub eps_sec: f64,
    pub eps_thm: f64,
    /// Bisection budget for every root find.
    pub max_iter: usize,
    pub golden_iterations: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            scan_samples: 1024,
            halving_samples: 256,
            eps_sec: EPS_SEC,
            eps_thm: EPS_THM,
            max_iter: 80,
            golden_iterations: 60,
        }
    }
}

impl SearchConfig {
    pub(crate) fn section(&self, body: &ConvexPolygon, alpha: f64, theta: f64) -> Result<OrientedLine, Error> {
        alpha_section_with(body, alpha, theta, self.eps_sec, self.max_iter)
    }
}

/// Which body of the pizza is being sectioned.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Body {
    Topping,
    Dough,
}

/// Offsets of `Δ(α, θ, X)` over a uniform grid of directions, with the
/// fraction of the other body on each line's minus side.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SectionProfile {
    pub alpha: f64,
    pub body: Body,
    pub thetas: Vec<f64>,
    pub offsets: Vec<f64>,
    pub fractions: Vec<f64>,
}

impl SectionProfile {
    /// Largest difference between cyclically adjacent fraction samples.
    pub fn max_jump(&self) -> f64 {
        let n = self.fractions.len();
        (0..n)
            .map(|i| (self.fractions[(i + 1) % n] - self.fractions[i]).abs())
            .fold(0.0, f64::max)
    }
}

/// A line that is an α-section of one body and a β-section of the other.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SimultaneousSection {
    pub line: OrientedLine,
    /// Target fraction in the sectioned body.
    pub alpha: f64,
    /// Fraction of the companion body on the minus side.
    pub beta: f64,
    /// Achieved `|fraction - alpha|` in the sectioned body.
    pub residual: f64,
}

fn bodies(pizza: &Pizza, body: Body) -> (&ConvexPolygon, &ConvexPolygon) {
    match body {
        Body::Topping => (pizza.topping(), pizza.dough()),
        Body::Dough => (pizza.dough(), pizza.topping()),
    }
}

fn check_alpha(alpha: f64, upper: f64) -> Result<(), Error> {
    if alpha > 0.0 && alpha < upper {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "alpha must lie in (0, {upper}), got {alpha}"
        )))
    }
}

fn grid(samples: usize, span: f64) -> impl Fn(usize) -> f64 {
    move |i| span * i as f64 / samples as f64
}

/// Samples `Δ(α, θ, X)` at `samples` uniform directions of `[0, 2π)`.
pub fn profile(
    pizza: &Pizza,
    alpha: f64,
    body: Body,
    samples: usize,
    cfg: &SearchConfig,
) -> Result<SectionProfile, Error> {
    check_alpha(alpha, 1.0)?;
    if samples < 16 {
        return Err(Error::InvalidArgument(format!(
            "profile needs at least 16 samples, got {samples}"
        )));
    }
    let (sectioned, companion) = bodies(pizza, body);
    let theta_at = grid(samples, TAU);
    let rows = (0..samples)
        .into_par_iter()
        .map(|i| {
            let theta = theta_at(i);
            let line = cfg.section(sectioned, alpha, theta)?;
            Ok((theta, line.t(), section_fraction(&line, companion)))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let (thetas, rest): (Vec<f64>, Vec<(f64, f64)>) = rows.into_iter().map(|(a, b, c)| (a, (b, c))).unzip();
    let (offsets, fractions) = rest.into_iter().unzip();
    Ok(SectionProfile {
        alpha,
        body,
        thetas,
        offsets,
        fractions,
    })
}

/// Scans the companion fraction of `Δ(α, θ, sectioned)` and returns the
/// direction where it is largest (or smallest), refined by golden section.
fn extremal_section(
    sectioned: &ConvexPolygon,
    companion: &ConvexPolygon,
    alpha: f64,
    maximize: bool,
    cfg: &SearchConfig,
) -> Result<SimultaneousSection, Error> {
    let sign = if maximize { 1.0 } else { -1.0 };
    let score = |theta: f64| -> Result<f64, Error> {
        let line = cfg.section(sectioned, alpha, theta)?;
        Ok(sign * section_fraction(&line, companion))
    };
    let n = cfg.scan_samples.max(3);
    let step = TAU / n as f64;
    let scores = (0..n)
        .into_par_iter()
        .map(|i| score(i as f64 * step))
        .collect::<Result<Vec<f64>, Error>>()?;
    let top = scores.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    // near-ties go to the smallest sampled direction
    let best = scores.iter().position(|&s| s >= top - cfg.eps_sec).unwrap_or(0);

    let mut theta = best as f64 * step;
    let mut value = scores[best];
    let center = theta;
    let (refined, refined_value) = golden_max(center - step, center + step, cfg.golden_iterations, score)?;
    if refined_value > value + cfg.eps_sec {
        theta = refined;
        value = refined_value;
    }

    let line = cfg.section(sectioned, alpha, theta)?;
    let beta = sign * value;
    Ok(SimultaneousSection {
        line,
        alpha,
        beta,
        residual: (section_fraction(&line, sectioned) - alpha).abs(),
    })
}

/// An α-section of the topping that cuts at least α of the dough.
///
/// Such a line exists for every `0 < α < ½`; a search result below
/// `α - eps_thm` is reported as [`Error::TheoremViolation`].
pub fn find_simultaneous_section(pizza: &Pizza, alpha: f64, cfg: &SearchConfig) -> Result<SimultaneousSection, Error> {
    check_alpha(alpha, 0.5)?;
    let found = extremal_section(pizza.topping(), pizza.dough(), alpha, true, cfg)?;
    if found.beta < alpha - cfg.eps_thm {
        return Err(Error::TheoremViolation {
            kind: "simultaneous section",
            alpha,
            best: found.beta,
            slack: cfg.eps_thm,
        });
    }
    Ok(found)
}

/// An α-section of the dough that cuts at most α of the topping.
pub fn find_corollary_section(pizza: &Pizza, alpha: f64, cfg: &SearchConfig) -> Result<SimultaneousSection, Error> {
    check_alpha(alpha, 0.5)?;
    let found = extremal_section(pizza.dough(), pizza.topping(), alpha, false, cfg)?;
    if found.beta > alpha + cfg.eps_thm {
        return Err(Error::TheoremViolation {
            kind: "corollary section",
            alpha,
            best: found.beta,
            slack: cfg.eps_thm,
        });
    }
    Ok(found)
}

/// Topping fraction on the minus side of the dough's halving line of
/// direction `theta`, minus ½. Odd under `theta -> theta + π`.
pub fn halving_imbalance(pizza: &Pizza, theta: f64, cfg: &SearchConfig) -> Result<f64, Error> {
    let line = cfg.section(pizza.dough(), 0.5, theta)?;
    Ok(section_fraction(&line, pizza.topping()) - 0.5)
}

/// A line that halves both the dough and the topping.
///
/// The imbalance `g` satisfies `g(θ + π) = -g(θ)`, so it changes sign on
/// `[0, π]`; the first sign change on a uniform grid is refined by
/// bisection.
pub fn find_halving_cut(pizza: &Pizza, cfg: &SearchConfig) -> Result<OrientedLine, Error> {
    let n = cfg.halving_samples.max(2);
    let theta_at = grid(n, PI);
    let g = (0..=n)
        .into_par_iter()
        .map(|j| halving_imbalance(pizza, theta_at(j), cfg))
        .collect::<Result<Vec<f64>, Error>>()?;

    let tol = cfg.eps_sec;
    let mut theta = 0.0;
    for j in 0..n {
        if g[j].abs() <= tol {
            theta = theta_at(j);
            break;
        }
        if g[j + 1].abs() > tol && (g[j] < 0.0) != (g[j + 1] < 0.0) {
            let root = bisect(
                theta_at(j),
                theta_at(j + 1),
                g[j],
                g[j + 1],
                0.01 * tol,
                cfg.max_iter,
                |th| halving_imbalance(pizza, th, cfg),
            )?;
            if root.value.abs() > tol {
                return Err(Error::NotConverged {
                    what: "halving cut",
                    residual: root.value.abs(),
                    iterations: root.iterations,
                });
            }
            theta = root.x;
            break;
        }
    }
    cfg.section(pizza.dough(), 0.5, theta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{Point2, Side};
    use approx::assert_abs_diff_eq;

    fn square(lo: f64, hi: f64) -> ConvexPolygon {
        ConvexPolygon::rectangle(Point2::new(lo, lo), Point2::new(hi, hi)).unwrap()
    }

    fn corner_squares() -> Pizza {
        Pizza::new(square(0.0, 1.0), square(0.0, 2.0)).unwrap()
    }

    fn concentric_disks(m: usize) -> Pizza {
        Pizza::new(
            ConvexPolygon::regular(m, Point2::ORIGIN, 1.0).unwrap(),
            ConvexPolygon::regular(m, Point2::ORIGIN, 2.0).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn identical_bodies_have_flat_profile() {
        let pizza = Pizza::plain(square(0.0, 1.0));
        for alpha in [0.1, 0.3, 0.7] {
            let p = profile(&pizza, alpha, Body::Topping, 64, &SearchConfig::default()).unwrap();
            for f in &p.fractions {
                assert_abs_diff_eq!(*f, alpha, epsilon = 1e-11);
            }
        }
    }

    #[test]
    fn concentric_disk_profile() {
        // chord at d = 0.40397 in the unit disk, then the R = 2 segment fraction at d / 2
        let beta_oracle = 0.372291279091126;
        let p = profile(
            &concentric_disks(512),
            0.25,
            Body::Topping,
            64,
            &SearchConfig::default(),
        )
        .unwrap();
        for f in &p.fractions {
            assert_abs_diff_eq!(*f, beta_oracle, epsilon = 1e-4);
        }
        assert_eq!(p.thetas.len(), 64);
        assert!(p.thetas.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn corner_square_profile_at_zero() {
        let p = profile(&corner_squares(), 0.25, Body::Topping, 16, &SearchConfig::default()).unwrap();
        assert_eq!(p.thetas[0], 0.0);
        assert_abs_diff_eq!(p.offsets[0], 0.25, epsilon = 1e-11);
        assert_abs_diff_eq!(p.fractions[0], 0.125, epsilon = 1e-11);
    }

    #[test]
    fn profile_rejects_few_samples() {
        assert!(profile(&corner_squares(), 0.25, Body::Topping, 8, &SearchConfig::default()).is_err());
    }

    #[test]
    fn simultaneous_section_identical_bodies() {
        let pizza = Pizza::plain(square(0.0, 1.0));
        let s = find_simultaneous_section(&pizza, 0.3, &SearchConfig::default()).unwrap();
        assert_abs_diff_eq!(s.beta, 0.3, epsilon = 1e-11);
        // ties resolve to the first sample
        assert_eq!(s.line.theta(), 0.0);
        assert!(s.residual <= EPS_SEC);
    }

    #[test]
    fn simultaneous_section_disks() {
        let s = find_simultaneous_section(&concentric_disks(512), 0.25, &SearchConfig::default()).unwrap();
        assert_abs_diff_eq!(s.beta, 0.372291279091126, epsilon = 1e-4);
    }

    #[test]
    fn simultaneous_section_corner_squares() {
        let pizza = corner_squares();
        let cfg = SearchConfig::default();
        // at theta = pi the minus side of the topping's quarter section is y >= 0.75
        let line = cfg.section(pizza.topping(), 0.25, PI).unwrap();
        assert_abs_diff_eq!(line.t(), -0.75, epsilon = 1e-11);
        assert_abs_diff_eq!(section_fraction(&line, pizza.dough()), 0.625, epsilon = 1e-11);

        let s = find_simultaneous_section(&pizza, 0.25, &cfg).unwrap();
        assert!(s.beta >= 0.625);
        assert!(s.residual <= EPS_SEC);
    }

    #[test]
    fn corollary_section_examples() {
        let cfg = SearchConfig::default();
        let plain = find_corollary_section(&Pizza::plain(square(0.0, 1.0)), 0.3, &cfg).unwrap();
        assert_abs_diff_eq!(plain.beta, 0.3, epsilon = 1e-11);

        // A-fraction at the common chord of the R = 2 third-section, independent script
        let disks = find_corollary_section(&concentric_disks(512), 1.0 / 3.0, &cfg).unwrap();
        assert!(disks.beta < 1.0 / 3.0);
        assert_abs_diff_eq!(disks.beta, 0.1792044524700269, epsilon = 1e-3);

        let pizza = corner_squares();
        let below = cfg.section(pizza.dough(), 0.25, 0.0).unwrap();
        assert_abs_diff_eq!(below.t(), 0.5, epsilon = 1e-11);
        assert_abs_diff_eq!(section_fraction(&below, pizza.topping()), 0.5, epsilon = 1e-11);
        let s = find_corollary_section(&pizza, 0.25, &cfg).unwrap();
        assert_eq!(s.beta, 0.0);
        assert!(s.residual <= EPS_SEC);
        let flipped = cfg.section(pizza.dough(), 0.25, PI).unwrap();
        assert_eq!(section_fraction(&flipped, pizza.topping()), 0.0);
    }

    #[test]
    fn theorem_searches_reject_alpha_at_half() {
        let cfg = SearchConfig::default();
        assert!(matches!(
            find_simultaneous_section(&corner_squares(), 0.5, &cfg),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            find_corollary_section(&corner_squares(), 0.0, &cfg),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn halving_cut_examples() {
        let cfg = SearchConfig::default();
        for pizza in [concentric_disks(256), corner_squares(), Pizza::plain(square(0.0, 1.0))] {
            let line = find_halving_cut(&pizza, &cfg).unwrap();
            assert_abs_diff_eq!(section_fraction(&line, pizza.dough()), 0.5, epsilon = 1e-12);
            assert_abs_diff_eq!(section_fraction(&line, pizza.topping()), 0.5, epsilon = 1e-12);
        }

        // the only common halving line of the corner squares is the diagonal
        let line = find_halving_cut(&corner_squares(), &cfg).unwrap();
        assert_abs_diff_eq!(line.side_of(Point2::new(0.0, 0.0)), 0.0, epsilon = 1e-9);
        assert_abs_diff_eq!(line.side_of(Point2::new(2.0, 2.0)), 0.0, epsilon = 1e-9);

        // symmetric cases resolve to the first direction
        let line = find_halving_cut(&Pizza::plain(square(0.0, 1.0)), &cfg).unwrap();
        assert_eq!(line.theta(), 0.0);
        let halves = square(0.0, 1.0).split(&line);
        assert_abs_diff_eq!(halves.0.unwrap().area(), 0.5, epsilon = 1e-12);
        assert!(square(0.0, 1.0).clip(&line, Side::Minus).is_some());
    }

    #[test]
    fn halving_imbalance_is_odd() {
        let cfg = SearchConfig::default();
        let pizza = corner_squares();
        for i in 0..64 {
            let theta = TAU * i as f64 / 64.0;
            let g = halving_imbalance(&pizza, theta, &cfg).unwrap();
            let h = halving_imbalance(&pizza, theta + PI, &cfg).unwrap();
            assert_abs_diff_eq!(g + h, 0.0, epsilon = 1e-12);
        }
    }
}
