//! Bracketing solvers for monotone scalar problems.

use crate::error::{Error, Result};

/// Width below which bisection on a type interval stops.
pub const TOL: f64 = 1e-12;
/// Iteration cap for every bisection in the crate.
pub const MAX_ITER: usize = 200;

/// Outcome of a bisection run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub x: f64,
    pub iterations: usize,
}

/// Finds a sign change of `f` on `[lo, hi]`.
///
/// Requires `f(lo)` and `f(hi)` to have opposite signs (a zero at either end
/// is returned immediately).
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64) -> Result<Root> {
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(Root { x: lo, iterations: 0 });
    }
    if fhi == 0.0 {
        return Ok(Root { x: hi, iterations: 0 });
    }
    if flo.is_nan() || fhi.is_nan() || flo.signum() == fhi.signum() {
        return Err(Error::Convergence(format!("no sign change on [{lo}, {hi}]: f = ({flo}, {fhi})")));
    }
    for it in 1..=MAX_ITER {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(Root { x: mid, iterations: it });
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        if hi - lo <= TOL {
            return Ok(Root { x: 0.5 * (lo + hi), iterations: it });
        }
    }
    Err(Error::Convergence(format!("bisection did not reach {TOL} in {MAX_ITER} steps")))
}

/// Generalized inverse `inf { x in [lo, hi] : g(x) >= target }` of a weakly
/// increasing `g`, to the last representable bit.
///
/// Returns `lo` if `g(lo) >= target` and `hi` if the set is empty.
pub fn lower_quantile<G: Fn(f64) -> f64>(g: G, target: f64, mut lo: f64, mut hi: f64) -> f64 {
    if g(lo) >= target {
        return lo;
    }
    if g(hi) < target {
        return hi;
    }
    // invariant: g(lo) < target <= g(hi)
    for _ in 0..MAX_ITER {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if g(mid) >= target {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisect_sqrt_two() {
        let r = bisect(|x| x * x - 2.0, 0.0, 2.0).unwrap();
        assert!((r.x - 2f64.sqrt()).abs() < 1e-12);
        assert!(r.iterations <= MAX_ITER);
    }

    #[test]
    fn bisect_rejects_bad_bracket() {
        assert!(bisect(|x| x * x + 1.0, -1.0, 1.0).is_err());
    }

    #[test]
    fn quantile_of_step() {
        let step = |x: f64| if x < 0.3 { 0.0 } else { 1.0 };
        assert!((lower_quantile(step, 0.5, 0.0, 1.0) - 0.3).abs() < 1e-15);
        assert_eq!(lower_quantile(step, 0.0, 0.0, 1.0), 0.0);
        assert_eq!(lower_quantile(|_| 0.2, 0.5, 0.0, 1.0), 1.0);
    }
}
