//! Actual and perceived ex-ante utilities in `(χ₁, χ₂)`-cursed equilibria.
//!
//! All formulas are in quantile space (uniform reference CDF). Both `U` and
//! `V` are invariant under the quantile transform, so a non-uniform reference
//! CDF only changes the thresholds, not the utilities.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::equilibria::partial_quantiles;
use crate::error::{unit, Result};

/// Utilities of both players at one cursedness profile.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WelfareReport {
    pub chi1: f64,
    pub chi2: f64,
    pub u1: f64,
    pub u2: f64,
    pub v1: f64,
    pub v2: f64,
    /// Equilibrium thresholds, `None` for the trivial equilibrium.
    pub thresholds: Option<(f64, f64)>,
}

/// Actual ex-ante utilities `(U₁, U₂)`; they always sum to one.
///
/// With thresholds `t₁, t₂`, player 1 gains `min(t₁, t₂)(t₂ − t₁)` over the
/// no-trade payoff `½`.
pub fn actual_utility(chi1: f64, chi2: f64) -> Result<(f64, f64)> {
    Ok(match partial_quantiles(chi1, chi2)? {
        None => (0.5, 0.5),
        Some((t1, t2)) => {
            let u1 = 0.5 + t1.min(t2) * (t2 - t1);
            (u1, 1.0 - u1)
        }
    })
}

/// Perceived utility of player 1 in the non-trivial equilibrium, which
/// requires `max(χ₁, χ₂) > ½`.
fn perceived_v1(c1: f64, c2: f64) -> f64 {
    if c1 <= c2 {
        (1.0 - 4.0 * (1.0 + c1 - 3.0 * c2) * c2) / (8.0 * (2.0 * c2 - c1) * c2)
    } else {
        let bracket = c1 * (1.0 + 2.0 * c1).powi(2) - (3.0 + 2.0 * c1 + 4.0 * c1 * c1) * c2 + 2.0 * c2 * c2;
        (c2 + 2.0 * c1 * bracket) / (8.0 * c1 * (2.0 * c1 - c2).powi(2))
    }
}

/// `χ`-perceived ex-ante utilities `(V₁, V₂)`; `(½, ½)` when no trade happens.
pub fn perceived_utility(chi1: f64, chi2: f64) -> Result<(f64, f64)> {
    let (c1, c2) = (unit("chi1", chi1)?, unit("chi2", chi2)?);
    if c1.max(c2) <= 0.5 {
        return Ok((0.5, 0.5));
    }
    Ok((perceived_v1(c1, c2), perceived_v1(c2, c1)))
}

pub fn welfare_report(chi1: f64, chi2: f64) -> Result<WelfareReport> {
    let (u1, u2) = actual_utility(chi1, chi2)?;
    let (v1, v2) = perceived_utility(chi1, chi2)?;
    Ok(WelfareReport { chi1, chi2, u1, u2, v1, v2, thresholds: partial_quantiles(chi1, chi2)? })
}

/// Polynomial whose sign gives the sign of `∂V₁/∂χ₁` when `χ₁ > χ₂`.
pub fn h0(c1: f64, c2: f64) -> f64 {
    4.0 * c1.powi(3) * (1.0 + 2.0 * c1) - 2.0 * c1 * (-3.0 + c1 * (5.0 + 6.0 * c1)) * c2
        + (-1.0 + 2.0 * c1) * (1.0 + 4.0 * c1) * c2 * c2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WelfareProperty {
    /// `U₁ + U₂ = 1`.
    ConstantSum,
    /// `U_k` strictly decreasing in `χ_k`.
    ActualDecreasingOwn,
    /// `U_k` strictly increasing in `χ₋k`.
    ActualIncreasingOpponent,
    /// The less cursed player gets `U > ½`.
    LessCursedGains,
    /// `V_k > U_k`.
    PerceivedAboveActual,
    /// `V_k > ½`.
    PerceivedAboveHalf,
    /// `V_k` strictly increasing in `χ_k`.
    PerceivedIncreasingOwn,
    /// `h₀ > 0` for `χ₁ > χ₂`, `χ₁ > ½`.
    H0Positive,
    /// `V₁ < V₂` for `χ₁ > χ₂`.
    MoreCursedPerceivesLess,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub chi1: f64,
    pub chi2: f64,
    /// Player index (1 or 2) the property was checked for; 0 if symmetric.
    pub player: u8,
    pub property: WelfareProperty,
    /// The quantity that should have been positive.
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub lattice: usize,
    pub trivial_cells: usize,
    pub non_trivial_cells: usize,
    pub violations: Vec<Violation>,
}

impl ScanReport {
    pub fn count(&self, property: WelfareProperty) -> usize {
        self.violations.iter().filter(|v| v.property == property).count()
    }
}

/// Finite-difference step of the monotonicity checks.
pub const FD_STEP: f64 = 1e-4;

/// Signed slopes of `f` at `x`: one central difference, or both one-sided
/// differences at a kink or lattice edge.
fn slopes<F: Fn(f64) -> f64>(f: F, x: f64, kink: bool) -> Vec<f64> {
    let h = FD_STEP;
    let (fx, up, down) = (f(x), x + h <= 1.0, x - h >= 0.0);
    match (kink, up, down) {
        (false, true, true) => vec![(f(x + h) - f(x - h)) / (2.0 * h)],
        _ => {
            let mut out = Vec::new();
            if up {
                out.push((f(x + h) - fx) / h);
            }
            if down {
                out.push((fx - f(x - h)) / h);
            }
            out
        }
    }
}

fn check_cell(c1: f64, c2: f64) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut flag = |player: u8, property: WelfareProperty, margin: f64| {
        if margin.is_nan() || margin <= 0.0 {
            out.push(Violation { chi1: c1, chi2: c2, player, property, margin });
        }
    };
    let u = |a: f64, b: f64| actual_utility(a, b).expect("lattice inside unit square");
    let v = |a: f64, b: f64| perceived_utility(a, b).expect("lattice inside unit square");
    let (u1, u2) = u(c1, c2);
    let (v1, v2) = v(c1, c2);
    let ridge = c1 == c2;

    flag(0, WelfareProperty::ConstantSum, 1e-12 - (u1 + u2 - 1.0).abs());
    if c1 != c2 {
        let less = if c1 < c2 { u1 } else { u2 };
        flag(if c1 < c2 { 1 } else { 2 }, WelfareProperty::LessCursedGains, less - 0.5);
    }
    for (k, uk, vk) in [(1u8, u1, v1), (2u8, u2, v2)] {
        flag(k, WelfareProperty::PerceivedAboveActual, vk - uk);
        flag(k, WelfareProperty::PerceivedAboveHalf, vk - 0.5);
    }
    for s in slopes(|x| u(x, c2).0, c1, ridge) {
        flag(1, WelfareProperty::ActualDecreasingOwn, -s);
    }
    for s in slopes(|x| u(c1, x).1, c2, ridge) {
        flag(2, WelfareProperty::ActualDecreasingOwn, -s);
    }
    for s in slopes(|x| u(c1, x).0, c2, ridge) {
        flag(1, WelfareProperty::ActualIncreasingOpponent, s);
    }
    for s in slopes(|x| u(x, c2).1, c1, ridge) {
        flag(2, WelfareProperty::ActualIncreasingOpponent, s);
    }
    for s in slopes(|x| v(x, c2).0, c1, ridge) {
        flag(1, WelfareProperty::PerceivedIncreasingOwn, s);
    }
    for s in slopes(|x| v(c1, x).1, c2, ridge) {
        flag(2, WelfareProperty::PerceivedIncreasingOwn, s);
    }
    if c1 > c2 && c1 > 0.5 {
        flag(0, WelfareProperty::H0Positive, h0(c1, c2));
    }
    if c1 > c2 {
        flag(0, WelfareProperty::MoreCursedPerceivesLess, v2 - v1);
    }
    if c2 > c1 {
        flag(0, WelfareProperty::MoreCursedPerceivesLess, v1 - v2);
    }
    out
}

/// Checks the welfare properties on every cell of an `n × n` lattice of
/// `[0, 1]²` where a non-trivial equilibrium exists.
pub fn welfare_property_scan(n: usize) -> ScanReport {
    let n = n.max(2);
    let axis: Vec<f64> = (0..n).map(|i| i as f64 / (n - 1) as f64).collect();
    let cells: Vec<(f64, f64)> = axis.iter().flat_map(|&a| axis.iter().map(move |&b| (a, b))).collect();
    let trivial_cells = cells.iter().filter(|(a, b)| a.max(*b) <= 0.5).count();
    let violations: Vec<Violation> =
        cells.par_iter().filter(|(a, b)| a.max(*b) > 0.5).flat_map_iter(|&(a, b)| check_cell(a, b)).collect();
    ScanReport { lattice: n, trivial_cells, non_trivial_cells: cells.len() - trivial_cells, violations }
}
