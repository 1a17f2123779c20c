//! Scalar root finding and maximization used by the section searches.

/// Best point found by [`bisect`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracketed {
    pub x: f64,
    pub value: f64,
    pub iterations: usize,
}

/// Bisection on `[lo, hi]` where `f(lo)` is `f_lo` and `f(hi)` has the
/// opposite sign.
///
/// Stops once `|f| <= tol`, when the midpoint no longer moves, or after
/// `max_iter` evaluations. Returns the evaluated point with the smallest
/// `|f|`; judging whether that is good enough is up to the caller.
pub fn bisect<E>(
    mut lo: f64,
    mut hi: f64,
    f_lo: f64,
    f_hi: f64,
    tol: f64,
    max_iter: usize,
    mut f: impl FnMut(f64) -> Result<f64, E>,
) -> Result<Bracketed, E> {
    let mut best = if f_lo.abs() <= f_hi.abs() {
        Bracketed {
            x: lo,
            value: f_lo,
            iterations: 0,
        }
    } else {
        Bracketed {
            x: hi,
            value: f_hi,
            iterations: 0,
        }
    };
    let lo_negative = f_lo < 0.0;
    for i in 1..=max_iter {
        if best.value.abs() <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo.min(hi) || mid >= hi.max(lo) {
            break;
        }
        let value = f(mid)?;
        if value.abs() < best.value.abs() {
            best = Bracketed {
                x: mid,
                value,
                iterations: i,
            };
        }
        best.iterations = i;
        if (value < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(best)
}

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section search for a maximum of a unimodal `f` on `[a, b]`.
/// Returns `(x, f(x))`.
pub fn golden_max<E>(
    mut a: f64,
    mut b: f64,
    iterations: usize,
    mut f: impl FnMut(f64) -> Result<f64, E>,
) -> Result<(f64, f64), E> {
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    for _ in 0..iterations {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d)?;
        }
    }
    Ok(if fc >= fd { (c, fc) } else { (d, fd) })
}
