//! Fair partitions under the cutting rule: a piece is split by a full
//! straight line, then one of the current pieces is split again, until `n`
//! slices remain.
//!
//! For even `n` the construction recurses on sub-pizzas (dough piece plus
//! the topping clipped by the same cuts):
//!
//! * `n = 2`: one common halving line.
//! * `n = 4k`: a common halving line, then `2k` slices in each half.
//! * `n = 4k + 2`: with `α = 2k/n`, look for an α-section of the dough that is
//!   also an α-section of the topping. If one exists, its minus side takes
//!   `2k` slices and its plus side `2k + 2`. Otherwise every α-section of the
//!   dough carries less than α of the topping; halve the pizza, cut one fair
//!   slice off each half with [`fair_slice_from_half`], and split each
//!   remainder into `2k` slices.
//!
//! Odd `n` is refused: for concentric disks no fair partition exists, which
//! [`check_disk_deficiency`] demonstrates numerically.

use std::f64::consts::{PI, TAU};

use rayon::prelude::*;
use serde::Serialize;

use crate::geom::{normalize_angle, section_fraction, ConvexPolygon, OrientedLine, Pizza, Point2, Side};
use crate::root::{bisect, golden_max};
use crate::sections::{find_corollary_section, find_halving_cut, SearchConfig};
use crate::tol::{EPS_AREA_REL, EPS_FAIR};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartitionConfig {
    pub search: SearchConfig,
    /// Relative deviation accepted by the final fairness check.
    pub eps_fair: f64,
}

impl Default for PartitionConfig {
    fn default() -> Self {
        PartitionConfig {
            search: SearchConfig::default(),
            eps_fair: EPS_FAIR,
        }
    }
}

/// History of the cuts. `left` holds the plus side of `cut`, `right` the
/// minus side.
#[derive(Debug, Clone, PartialEq)]
pub enum PartitionTree {
    Cut {
        piece: ConvexPolygon,
        cut: OrientedLine,
        left: Box<PartitionTree>,
        right: Box<PartitionTree>,
    },
    Slice {
        slice: ConvexPolygon,
    },
}

impl PartitionTree {
    /// The region this node covers.
    pub fn piece(&self) -> &ConvexPolygon {
        match self {
            PartitionTree::Cut { piece, .. } => piece,
            PartitionTree::Slice { slice } => slice,
        }
    }

    /// Slices in left-to-right order.
    pub fn slices(&self) -> Vec<&ConvexPolygon> {
        let mut out = Vec::new();
        self.visit(&mut |node| {
            if let PartitionTree::Slice { slice } = node {
                out.push(slice);
            }
        });
        out
    }

    /// `(piece, cut)` for every internal node, in pre-order.
    pub fn cuts(&self) -> Vec<(&ConvexPolygon, &OrientedLine)> {
        let mut out = Vec::new();
        self.visit(&mut |node| {
            if let PartitionTree::Cut { piece, cut, .. } = node {
                out.push((piece, cut));
            }
        });
        out
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            PartitionTree::Cut { left, right, .. } => left.leaf_count() + right.leaf_count(),
            PartitionTree::Slice { .. } => 1,
        }
    }

    fn visit<'a>(&'a self, f: &mut impl FnMut(&'a PartitionTree)) {
        f(self);
        if let PartitionTree::Cut { left, right, .. } = self {
            left.visit(f);
            right.visit(f);
        }
    }
}

/// Per-slice areas recomputed from the root, and their deviations from the
/// fair shares `|B|/n` and `|A|/n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FairnessReport {
    pub n: usize,
    pub dough_areas: Vec<f64>,
    pub topping_areas: Vec<f64>,
    pub target_dough: f64,
    pub target_topping: f64,
    pub max_dough_deviation: f64,
    pub max_topping_deviation: f64,
    /// `|Σ dough - |B|| / |B|`.
    pub dough_sum_error: f64,
    pub topping_sum_error: f64,
    /// Largest relative area mismatch between a stored piece and the piece
    /// re-derived by clipping along the root-to-node path.
    pub max_structure_deviation: f64,
    pub tolerance: f64,
    pub fair: bool,
}

fn split(pizza: &Pizza, line: &OrientedLine) -> Result<(Pizza, Pizza), Error> {
    match (pizza.clip(line, Side::Plus), pizza.clip(line, Side::Minus)) {
        (Some(plus), Some(minus)) => Ok((plus, minus)),
        _ => Err(Error::NumericalFailure(format!(
            "cut (theta = {}, t = {}) leaves an empty piece",
            line.theta(),
            line.t()
        ))),
    }
}

/// Splits `pizza` into `n` slices of equal dough and equal topping.
pub fn fair_partition(pizza: &Pizza, n: usize, cfg: &PartitionConfig) -> Result<PartitionTree, Error> {
    if n % 2 == 1 {
        return Err(Error::OddN(n));
    }
    if n < 2 {
        return Err(Error::InvalidArgument(format!("need at least 2 slices, got {n}")));
    }
    build(pizza, n, cfg)
}

fn build(pizza: &Pizza, n: usize, cfg: &PartitionConfig) -> Result<PartitionTree, Error> {
    if n == 1 {
        return Ok(PartitionTree::Slice {
            slice: pizza.dough().clone(),
        });
    }
    if n.is_multiple_of(4) || n == 2 {
        let cut = find_halving_cut(pizza, &cfg.search)?;
        let (plus, minus) = split(pizza, &cut)?;
        let (left, right) = rayon::join(|| build(&plus, n / 2, cfg), || build(&minus, n / 2, cfg));
        return Ok(PartitionTree::Cut {
            piece: pizza.dough().clone(),
            cut,
            left: Box::new(left?),
            right: Box::new(right?),
        });
    }

    let k = (n - 2) / 4;
    let alpha = (2 * k) as f64 / n as f64;
    if let Some(cut) = common_alpha_section(pizza, alpha, &cfg.search)? {
        let (plus, minus) = split(pizza, &cut)?;
        let (left, right) = rayon::join(|| build(&plus, 2 * k + 2, cfg), || build(&minus, 2 * k, cfg));
        return Ok(PartitionTree::Cut {
            piece: pizza.dough().clone(),
            cut,
            left: Box::new(left?),
            right: Box::new(right?),
        });
    }

    let halving = find_halving_cut(pizza, &cfg.search)?;
    let (plus, minus) = split(pizza, &halving)?;
    let half_tree = |half: &Pizza| -> Result<PartitionTree, Error> {
        let taken = fair_slice_from_half(pizza, half.dough(), &halving, n, &cfg.search)?;
        Ok(PartitionTree::Cut {
            piece: half.dough().clone(),
            cut: taken.cut,
            left: Box::new(build(&taken.remainder, 2 * k, cfg)?),
            right: Box::new(PartitionTree::Slice {
                slice: taken.slice.dough().clone(),
            }),
        })
    };
    let (left, right) = rayon::join(|| half_tree(&plus), || half_tree(&minus));
    Ok(PartitionTree::Cut {
        piece: pizza.dough().clone(),
        cut: halving,
        left: Box::new(left?),
        right: Box::new(right?),
    })
}

/// Looks for an α-section of the dough carrying exactly α of the topping.
///
/// `h(θ)` is the topping fraction on the minus side of `Δ(α, θ, B)` minus α.
/// A sign change on the scan grid (or a sample within `eps_sec` of zero) is
/// refined by bisection; the sampled maximum is also refined, so a positive
/// excursion narrower than the grid is not missed.
fn common_alpha_section(pizza: &Pizza, alpha: f64, cfg: &SearchConfig) -> Result<Option<OrientedLine>, Error> {
    let h = |theta: f64| -> Result<f64, Error> {
        let line = cfg.section(pizza.dough(), alpha, theta)?;
        Ok(section_fraction(&line, pizza.topping()) - alpha)
    };
    let samples = cfg.scan_samples.max(3);
    let step = TAU / samples as f64;
    let values = (0..samples)
        .into_par_iter()
        .map(|i| h(i as f64 * step))
        .collect::<Result<Vec<f64>, Error>>()?;

    let tol = cfg.eps_sec;
    let mut bracket = None;
    for i in 0..samples {
        let (a, b) = (values[i], values[(i + 1) % samples]);
        if a.abs() <= tol {
            return cfg.section(pizza.dough(), alpha, i as f64 * step).map(Some);
        }
        if b.abs() > tol && (a < 0.0) != (b < 0.0) {
            bracket = Some((i as f64 * step, (i + 1) as f64 * step, a, b));
            break;
        }
    }

    if bracket.is_none() {
        let best = (0..samples)
            .max_by(|&i, &j| values[i].total_cmp(&values[j]))
            .unwrap_or(0);
        if values[best] > 0.0 {
            // positive everywhere: impossible for a nested pair
            return Err(Error::TheoremViolation {
                kind: "corollary section",
                alpha,
                best: values[best] + alpha,
                slack: 0.0,
            });
        }
        let center = best as f64 * step;
        let (peak, peak_value) = golden_max(center - step, center + step, cfg.golden_iterations, h)?;
        if peak_value.abs() <= tol {
            return cfg.section(pizza.dough(), alpha, peak).map(Some);
        }
        if peak_value > 0.0 {
            bracket = Some((center, peak, values[best], peak_value));
        }
    }

    let Some((lo, hi, h_lo, h_hi)) = bracket else {
        return Ok(None);
    };
    let root = bisect(lo, hi, h_lo, h_hi, 0.01 * tol, cfg.max_iter, h)?;
    if root.value.abs() > tol {
        return Err(Error::NotConverged {
            what: "common alpha-section",
            residual: root.value.abs(),
            iterations: root.iterations,
        });
    }
    cfg.section(pizza.dough(), alpha, root.x).map(Some)
}

/// One fair slice cut off a fair half, and what is left of the half.
#[derive(Debug, Clone, PartialEq)]
pub struct SliceCut {
    /// Minus side of `cut`: dough `|B|/n`, topping `|A|/n`.
    pub slice: Pizza,
    /// Plus side of `cut`.
    pub remainder: Pizza,
    pub cut: OrientedLine,
}

/// Cuts a slice with dough `|B|/n` and topping `|A|/n` off `half`, one of
/// the two pieces of `pizza` on either side of `halving_cut`, for
/// `n = 4k + 2` when no common `2k/n`-section of the whole pizza exists.
///
/// The slice is the minus side of a `2/n`-section of the half. Let `f(θ)` be
/// the topping it carries. Parallel to the halving cut, with the strip next
/// to the cut on the minus side, `f > |A|/n`; the least-topping
/// `2/n`-section of the half has `f <= |A|/n`. Bisection along the arc of
/// directions between the two finds `f = |A|/n`.
pub fn fair_slice_from_half(
    pizza: &Pizza,
    half: &ConvexPolygon,
    halving_cut: &OrientedLine,
    n: usize,
    cfg: &SearchConfig,
) -> Result<SliceCut, Error> {
    if n < 6 || n % 4 != 2 {
        return Err(Error::InvalidArgument(format!(
            "fair_slice_from_half needs n = 4k + 2 >= 6, got {n}"
        )));
    }
    let side = if halving_cut.side_of(half.centroid()) >= 0.0 {
        Side::Plus
    } else {
        Side::Minus
    };
    let topping = pizza
        .topping()
        .clip(halving_cut, side)
        .ok_or_else(|| Error::NumericalFailure("half carries no topping".into()))?;
    let sub = Pizza::new(topping, half.clone())?;

    let fraction = 2.0 / n as f64;
    let share = 1.0 / n as f64;
    let total = pizza.area_topping();
    let excess = |theta: f64| -> Result<f64, Error> {
        let line = cfg.section(half, fraction, theta)?;
        Ok(sub.topping().clipped_area(&line, Side::Minus) / total - share)
    };

    let strip = match side {
        Side::Plus => halving_cut.theta(),
        Side::Minus => halving_cut.theta() + PI,
    };
    let g_strip = excess(strip)?;
    let tol = cfg.eps_sec;
    let theta = if g_strip.abs() <= tol {
        strip
    } else {
        let lean = find_corollary_section(&sub, fraction, cfg)?.line.theta();
        let g_lean = excess(lean)?;
        if g_lean.abs() <= tol {
            lean
        } else {
            if !(g_strip > 0.0 && g_lean < 0.0) {
                return Err(Error::NumericalFailure(format!(
                    "slice bracket fails: topping excess {g_strip:e} at the strip (theta = {strip}) \
                     and {g_lean:e} at the least-topping section (theta = {lean})"
                )));
            }
            let arc = normalize_angle(lean - strip);
            let root = bisect(0.0, 1.0, g_strip, g_lean, 0.01 * tol, cfg.max_iter, |s| {
                excess(strip + s * arc)
            })?;
            if root.value.abs() > tol {
                return Err(Error::NotConverged {
                    what: "fair slice",
                    residual: root.value.abs(),
                    iterations: root.iterations,
                });
            }
            strip + root.x * arc
        }
    };

    let cut = cfg.section(half, fraction, theta)?;
    let (remainder, slice) = split(&sub, &cut)?;
    Ok(SliceCut { slice, remainder, cut })
}

/// Recomputes every slice from the root by clipping dough and topping along
/// the recorded cuts, and compares the areas with `|B|/n` and `|A|/n`.
pub fn verify_partition(pizza: &Pizza, tree: &PartitionTree, tol: f64) -> FairnessReport {
    struct Walk {
        dough: Vec<f64>,
        topping: Vec<f64>,
        structure: f64,
    }

    fn area(p: &Option<ConvexPolygon>) -> f64 {
        p.as_ref().map_or(0.0, ConvexPolygon::area)
    }

    fn mismatch(stored: &ConvexPolygon, derived: &Option<ConvexPolygon>) -> f64 {
        let s = stored.area();
        (s - area(derived)).abs() / s
    }

    fn walk(node: &PartitionTree, dough: Option<ConvexPolygon>, topping: Option<ConvexPolygon>, acc: &mut Walk) {
        match node {
            PartitionTree::Slice { slice } => {
                acc.structure = acc.structure.max(mismatch(slice, &dough));
                acc.dough.push(area(&dough));
                acc.topping.push(area(&topping));
            }
            PartitionTree::Cut {
                piece,
                cut,
                left,
                right,
            } => {
                acc.structure = acc.structure.max(mismatch(piece, &dough));
                let clip = |p: &Option<ConvexPolygon>, side| p.as_ref().and_then(|p| p.clip(cut, side));
                walk(left, clip(&dough, Side::Plus), clip(&topping, Side::Plus), acc);
                walk(right, clip(&dough, Side::Minus), clip(&topping, Side::Minus), acc);
            }
        }
    }

    let mut acc = Walk {
        dough: Vec::new(),
        topping: Vec::new(),
        structure: 0.0,
    };
    walk(
        tree,
        Some(pizza.dough().clone()),
        Some(pizza.topping().clone()),
        &mut acc,
    );

    let n = acc.dough.len();
    let target_dough = pizza.area_dough() / n as f64;
    let target_topping = pizza.area_topping() / n as f64;
    let max_dev = |areas: &[f64], target: f64| areas.iter().map(|a| (a - target).abs() / target).fold(0.0, f64::max);
    let max_dough_deviation = max_dev(&acc.dough, target_dough);
    let max_topping_deviation = max_dev(&acc.topping, target_topping);
    let dough_sum_error = (acc.dough.iter().sum::<f64>() - pizza.area_dough()).abs() / pizza.area_dough();
    let topping_sum_error = (acc.topping.iter().sum::<f64>() - pizza.area_topping()).abs() / pizza.area_topping();
    let fair = max_dough_deviation <= tol
        && max_topping_deviation <= tol
        && dough_sum_error <= EPS_AREA_REL
        && topping_sum_error <= EPS_AREA_REL
        && acc.structure <= tol;

    FairnessReport {
        n,
        dough_areas: acc.dough,
        topping_areas: acc.topping,
        target_dough,
        target_topping,
        max_dough_deviation,
        max_topping_deviation,
        dough_sum_error,
        topping_sum_error,
        max_structure_deviation: acc.structure,
        tolerance: tol,
        fair,
    }
}

/// Number of directions sampled per β by [`check_disk_deficiency`].
pub const DEFICIENCY_DIRECTIONS: usize = 256;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DeficiencyEntry {
    pub beta: f64,
    /// Smallest `β - topping fraction` over the sampled directions.
    pub min_slack: f64,
    pub theta_at_min: f64,
    /// Discretization allowance `10 (2π/m)² β`.
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DeficiencyReport {
    pub r: f64,
    pub big_r: f64,
    pub m: usize,
    pub directions: usize,
    pub entries: Vec<DeficiencyEntry>,
    /// Every sampled slack exceeds its margin.
    pub witness: bool,
}

/// Discretization allowance for `m`-gon disks at fraction `beta`.
pub fn disk_margin(m: usize, beta: f64) -> f64 {
    10.0 * (TAU / m as f64).powi(2) * beta
}

/// `β` minus the topping fraction on the minus side of the dough's
/// β-section in direction `theta`.
pub fn deficiency_slack(pizza: &Pizza, beta: f64, theta: f64, cfg: &SearchConfig) -> Result<f64, Error> {
    let line = cfg.section(pizza.dough(), beta, theta)?;
    Ok(beta - section_fraction(&line, pizza.topping()))
}

/// For concentric disks of radii `r <= R` (as regular `m`-gons), checks that
/// every β-section of the dough carries strictly less than β of the topping.
///
/// With β = j/n for odd n and j < n/2, this is why the first cut of any
/// partition into an odd number of slices leaves the smaller piece short of
/// topping. For `r < R` a slack at or below the margin is a
/// [`Error::WitnessFailure`]; for `r = R` the report is returned with zero
/// slack and `witness = false`.
pub fn check_disk_deficiency(
    r: f64,
    big_r: f64,
    m: usize,
    betas: &[f64],
    cfg: &SearchConfig,
) -> Result<DeficiencyReport, Error> {
    if !(r > 0.0 && r <= big_r && big_r.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "need 0 < r <= R, got r = {r}, R = {big_r}"
        )));
    }
    if m < 64 {
        return Err(Error::InvalidArgument(format!(
            "disk polygons need at least 64 vertices, got {m}"
        )));
    }
    if let Some(beta) = betas.iter().find(|b| !(**b > 0.0 && **b < 0.5)) {
        return Err(Error::InvalidArgument(format!("beta must lie in (0, 1/2), got {beta}")));
    }
    let pizza = Pizza::new(
        ConvexPolygon::regular(m, Point2::ORIGIN, r)?,
        ConvexPolygon::regular(m, Point2::ORIGIN, big_r)?,
    )?;

    let mut entries = Vec::with_capacity(betas.len());
    for &beta in betas {
        let slacks = (0..DEFICIENCY_DIRECTIONS)
            .into_par_iter()
            .map(|i| {
                let theta = TAU * i as f64 / DEFICIENCY_DIRECTIONS as f64;
                deficiency_slack(&pizza, beta, theta, cfg).map(|s| (theta, s))
            })
            .collect::<Result<Vec<_>, Error>>()?;
        let (theta_at_min, min_slack) =
            slacks.into_iter().fold(
                (0.0, f64::INFINITY),
                |best, cur| if cur.1 < best.1 { cur } else { best },
            );
        entries.push(DeficiencyEntry {
            beta,
            min_slack,
            theta_at_min,
            margin: disk_margin(m, beta),
        });
    }

    let witness = entries.iter().all(|e| e.min_slack > e.margin);
    if r < big_r {
        if let Some(e) = entries.iter().find(|e| e.min_slack <= e.margin) {
            return Err(Error::WitnessFailure {
                beta: e.beta,
                theta: e.theta_at_min,
                slack: e.min_slack,
                margin: e.margin,
            });
        }
    }
    Ok(DeficiencyReport {
        r,
        big_r,
        m,
        directions: DEFICIENCY_DIRECTIONS,
        entries,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn square(lo: f64, hi: f64) -> ConvexPolygon {
        ConvexPolygon::rectangle(Point2::new(lo, lo), Point2::new(hi, hi)).unwrap()
    }

    fn disks(m: usize) -> Pizza {
        Pizza::new(
            ConvexPolygon::regular(m, Point2::ORIGIN, 1.0).unwrap(),
            ConvexPolygon::regular(m, Point2::ORIGIN, 2.0).unwrap(),
        )
        .unwrap()
    }

    fn assert_fair(pizza: &Pizza, tree: &PartitionTree, n: usize) {
        assert_eq!(tree.leaf_count(), n);
        let report = verify_partition(pizza, tree, 1e-6);
        assert!(report.fair, "{report:#?}");
    }

    #[test]
    fn plain_square_in_two() {
        let pizza = Pizza::plain(square(0.0, 1.0));
        let tree = fair_partition(&pizza, 2, &PartitionConfig::default()).unwrap();
        for slice in tree.slices() {
            assert_abs_diff_eq!(slice.area(), 0.5, epsilon = 1e-12);
        }
        assert_fair(&pizza, &tree, 2);
    }

    #[test]
    fn odd_and_tiny_counts_are_refused() {
        let pizza = Pizza::plain(square(0.0, 1.0));
        assert_eq!(
            fair_partition(&pizza, 3, &PartitionConfig::default()),
            Err(Error::OddN(3))
        );
        assert_eq!(
            fair_partition(&pizza, 1, &PartitionConfig::default()),
            Err(Error::OddN(1))
        );
        assert!(matches!(
            fair_partition(&pizza, 0, &PartitionConfig::default()),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn disks_in_six() {
        let pizza = disks(512);
        let tree = fair_partition(&pizza, 6, &PartitionConfig::default()).unwrap();
        assert_fair(&pizza, &tree, 6);
        let report = verify_partition(&pizza, &tree, 1e-6);
        for (d, a) in report.dough_areas.iter().zip(&report.topping_areas) {
            assert_abs_diff_eq!(*d, pizza.area_dough() / 6.0, epsilon = 1e-6 * pizza.area_dough());
            assert_abs_diff_eq!(*a, pizza.area_topping() / 6.0, epsilon = 1e-6 * pizza.area_topping());
        }
    }

    #[test]
    fn concentric_squares_in_four() {
        let pizza = Pizza::new(square(0.5, 1.5), square(0.0, 2.0)).unwrap();
        let tree = fair_partition(&pizza, 4, &PartitionConfig::default()).unwrap();
        assert_fair(&pizza, &tree, 4);
    }

    #[test]
    fn multiple_of_four_starts_with_halving_cut() {
        let pizza = Pizza::new(square(0.0, 1.0), square(0.0, 2.0)).unwrap();
        let cfg = PartitionConfig::default();
        let tree = fair_partition(&pizza, 8, &cfg).unwrap();
        let first = *tree.cuts()[0].1;
        assert_eq!(first, find_halving_cut(&pizza, &cfg.search).unwrap());
        assert_fair(&pizza, &tree, 8);
    }

    #[test]
    fn children_are_clips_of_parent() {
        let pizza = Pizza::new(square(0.0, 1.0), square(0.0, 2.0)).unwrap();
        let tree = fair_partition(&pizza, 6, &PartitionConfig::default()).unwrap();
        fn check(node: &PartitionTree) {
            if let PartitionTree::Cut {
                piece,
                cut,
                left,
                right,
            } = node
            {
                let (plus, minus) = piece.split(cut);
                assert_eq!(plus.as_ref(), Some(left.piece()));
                assert_eq!(minus.as_ref(), Some(right.piece()));
                check(left);
                check(right);
            }
        }
        check(&tree);
    }

    #[test]
    fn verifier_flags_unfair_cut() {
        let sq = square(0.0, 1.0);
        let pizza = Pizza::plain(sq.clone());
        let tree_at = |x: f64| {
            let cut = OrientedLine::new(PI / 2.0, -x);
            let (plus, minus) = sq.split(&cut);
            PartitionTree::Cut {
                piece: sq.clone(),
                cut,
                left: Box::new(PartitionTree::Slice { slice: plus.unwrap() }),
                right: Box::new(PartitionTree::Slice { slice: minus.unwrap() }),
            }
        };

        let fair = verify_partition(&pizza, &tree_at(0.5), 1e-6);
        assert!(fair.fair);
        assert_abs_diff_eq!(fair.max_dough_deviation, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(fair.max_topping_deviation, 0.0, epsilon = 1e-15);

        let unfair = verify_partition(&pizza, &tree_at(0.3), 1e-6);
        assert!(!unfair.fair);
        assert_abs_diff_eq!(unfair.max_dough_deviation, 0.4, epsilon = 1e-12);
        assert_abs_diff_eq!(unfair.dough_sum_error, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn verifier_flags_tampered_slices() {
        let sq = square(0.0, 1.0);
        let pizza = Pizza::plain(sq.clone());
        let cut = OrientedLine::new(0.0, 0.5);
        let tree = PartitionTree::Cut {
            piece: sq.clone(),
            cut,
            left: Box::new(PartitionTree::Slice {
                slice: square(0.0, 0.5),
            }),
            right: Box::new(PartitionTree::Slice {
                slice: sq.clip(&cut, Side::Minus).unwrap(),
            }),
        };
        let report = verify_partition(&pizza, &tree, 1e-6);
        assert!(!report.fair);
        assert_abs_diff_eq!(report.max_structure_deviation, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn slice_from_half_on_plain_pizza_takes_the_strip() {
        let pizza = Pizza::plain(square(0.0, 1.0));
        let cfg = SearchConfig::default();
        let halving = OrientedLine::new(0.0, 0.5);
        let half = pizza.dough().clip(&halving, Side::Plus).unwrap();
        let taken = fair_slice_from_half(&pizza, &half, &halving, 6, &cfg).unwrap();
        assert_abs_diff_eq!(taken.cut.theta(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(taken.slice.area_dough(), 1.0 / 6.0, epsilon = 1e-12);
        assert_abs_diff_eq!(taken.slice.area_topping(), 1.0 / 6.0, epsilon = 1e-12);
    }

    #[test]
    fn slice_from_half_of_corner_squares() {
        let pizza = Pizza::new(square(0.0, 1.0), square(0.0, 2.0)).unwrap();
        let cfg = SearchConfig::default();
        let halving = find_halving_cut(&pizza, &cfg).unwrap();
        for side in [Side::Plus, Side::Minus] {
            let half = pizza.dough().clip(&halving, side).unwrap();
            let taken = fair_slice_from_half(&pizza, &half, &halving, 6, &cfg).unwrap();
            assert_abs_diff_eq!(taken.slice.area_dough(), 4.0 / 6.0, epsilon = 1e-6);
            assert_abs_diff_eq!(taken.slice.area_topping(), 1.0 / 6.0, epsilon = 1e-6);
            assert_abs_diff_eq!(
                taken.slice.area_dough() + taken.remainder.area_dough(),
                half.area(),
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn slice_from_half_of_disks() {
        let pizza = disks(512);
        let cfg = SearchConfig::default();
        let halving = find_halving_cut(&pizza, &cfg).unwrap();
        let half = pizza.dough().clip(&halving, Side::Minus).unwrap();
        let taken = fair_slice_from_half(&pizza, &half, &halving, 6, &cfg).unwrap();
        assert_abs_diff_eq!(taken.slice.area_dough(), pizza.area_dough() / 6.0, epsilon = 1e-9);
        assert_abs_diff_eq!(taken.slice.area_topping(), pizza.area_topping() / 6.0, epsilon = 1e-9);
    }

    #[test]
    fn slice_from_half_rejects_wrong_residue() {
        let pizza = Pizza::plain(square(0.0, 1.0));
        let halving = OrientedLine::new(0.0, 0.5);
        let half = pizza.dough().clip(&halving, Side::Plus).unwrap();
        assert!(fair_slice_from_half(&pizza, &half, &halving, 8, &SearchConfig::default()).is_err());
    }

    #[test]
    fn disk_deficiency_examples() {
        let cfg = SearchConfig::default();
        let report = check_disk_deficiency(1.0, 2.0, 512, &[1.0 / 3.0], &cfg).unwrap();
        assert!(report.witness);
        // segment formula at the common chord, independent script
        assert_abs_diff_eq!(report.entries[0].min_slack, 0.15412888086330642, epsilon = 1e-4);

        let same = check_disk_deficiency(1.0, 1.0, 128, &[0.2, 0.4], &cfg).unwrap();
        assert!(!same.witness);
        for e in &same.entries {
            assert_abs_diff_eq!(e.min_slack, 0.0, epsilon = 1e-11);
        }

        assert!(check_disk_deficiency(2.0, 1.0, 128, &[0.2], &cfg).is_err());
        assert!(check_disk_deficiency(1.0, 2.0, 32, &[0.2], &cfg).is_err());
        assert!(check_disk_deficiency(1.0, 2.0, 128, &[0.5], &cfg).is_err());
    }

    #[test]
    fn deficiency_vanishes_towards_half() {
        let cfg = SearchConfig::default();
        let pizza = disks(512);
        let mut last = f64::INFINITY;
        for beta in [0.4, 0.45, 0.49, 0.499] {
            let slack = deficiency_slack(&pizza, beta, 0.3, &cfg).unwrap();
            assert!(slack > 0.0 && slack < last);
            last = slack;
        }
        assert!(last < 2e-3);
    }

    #[test]
    fn tight_margin_is_a_witness_failure() {
        let cfg = SearchConfig::default();
        let err = check_disk_deficiency(1.0, 1.000001, 64, &[0.3], &cfg).unwrap_err();
        assert!(matches!(err, Error::WitnessFailure { .. }));
    }
}
