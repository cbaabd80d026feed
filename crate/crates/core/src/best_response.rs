//! Best-response thresholds against a cut-off opponent.
//!
//! Every concept in the crate has a cut-off best response to a cut-off
//! opponent. The functions here return that threshold; an opponent threshold of
//! 0 (never offers) makes every strategy optimal and is flagged as degenerate.

use serde::{Deserialize, Serialize};

use crate::band::DistributionBand;
use crate::error::{unit, Result};
use crate::roots;
use crate::valuation::{ambiguous_trade, Concept};

/// Best-response threshold plus solver diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BestResponse {
    pub threshold: f64,
    /// Set when the opponent never offers, so every strategy is a best response.
    pub degenerate: bool,
}

impl BestResponse {
    fn at(threshold: f64) -> Self {
        Self { threshold: threshold.clamp(0.0, 1.0), degenerate: false }
    }

    fn degenerate() -> Self {
        Self { threshold: 0.0, degenerate: true }
    }
}

/// Best response of a `χ`-cursed player under the band's reference CDF `F`.
///
/// With `s = F(θ̂)`, the threshold is `F⁻¹(s / (2(1 − χ + χ s)))`, except that
/// for `χ > ½` it never falls below `F⁻¹((2χ − 1)/(2χ))`.
pub fn br_partial(chi: f64, hat: f64, band: &DistributionBand) -> Result<BestResponse> {
    let chi = unit("chi", chi)?;
    if unit("opponent threshold", hat)? == 0.0 {
        return Ok(BestResponse::degenerate());
    }
    let f = band.center();
    let s = f.eval(hat);
    let interior = s / (2.0 * (1.0 - chi + chi * s));
    let p = if chi > 0.5 {
        let floor = (2.0 * chi - 1.0) / (2.0 * chi);
        if s <= floor {
            floor
        } else {
            interior
        }
    } else {
        interior
    };
    Ok(BestResponse::at(f.inv(p)))
}

/// Maxmin rational best response `(F_l + F_h)⁻¹(F_l(θ̂))`, strictly below `θ̂`.
pub fn br_maxmin_rational(hat: f64, band: &DistributionBand) -> Result<BestResponse> {
    band.require_normalized()?;
    if unit("opponent threshold", hat)? == 0.0 {
        return Ok(BestResponse::degenerate());
    }
    let (lo, hi) = (band.lower(), band.upper());
    let target = lo.eval_left(hat);
    let t = roots::lower_quantile(|x| lo.eval(x) + hi.eval(x), target, 0.0, hat);
    Ok(BestResponse::at(t))
}

/// Maxmin cursed best response with the opponent's trade probability `θ̂`:
/// `F_l⁻¹(½)` when `θ̂ ≤ ½`, otherwise the root of `F_l(θ) = (1 − 2θ̂)F_h(θ) + θ̂`.
pub fn br_maxmin_cursed_under_fstar(hat: f64, band: &DistributionBand) -> Result<BestResponse> {
    band.require_normalized()?;
    if unit("opponent threshold", hat)? == 0.0 {
        return Ok(BestResponse::degenerate());
    }
    if hat <= 0.5 {
        return Ok(BestResponse::at(band.lower_median()));
    }
    let (lo, hi) = (band.lower(), band.upper());
    let gap = |t: f64| lo.eval(t) - (1.0 - 2.0 * hat) * hi.eval(t) - hat;
    let t = roots::lower_quantile(gap, 0.0, band.upper_median(), 1.0);
    Ok(BestResponse::at(t))
}

/// Ambiguous cursed best response.
///
/// For `θ̂ < F_h⁻¹(½)` this is `F_l⁻¹(½)`. Otherwise the trade gain is
/// positive at `max(F_h⁻¹(½), 1 − θ̂)`, non-positive at `F_l⁻¹(½)` and
/// decreasing in between, so the threshold is found by bisection on the gain
/// itself without committing to one closed form for the trade value.
pub fn br_ambiguous_cursed(hat: f64, band: &DistributionBand) -> Result<BestResponse> {
    band.require_normalized()?;
    if unit("opponent threshold", hat)? == 0.0 {
        return Ok(BestResponse::degenerate());
    }
    let hi_end = band.lower_median();
    let lo_end = band.upper_median().max(1.0 - hat);
    if lo_end >= hi_end {
        return Ok(BestResponse::at(hi_end));
    }
    let loss = |t: f64| band.lower().eval(t) - ambiguous_trade(band, t, hat);
    let t = roots::lower_quantile(loss, 0.0, lo_end, hi_end);
    Ok(BestResponse::at(t))
}

/// Best response under `concept`.
pub fn best_response(concept: Concept, hat: f64, band: &DistributionBand) -> Result<BestResponse> {
    match concept {
        Concept::Rational => br_partial(0.0, hat, band),
        Concept::Cursed => br_partial(1.0, hat, band),
        Concept::Partial(chi) => br_partial(chi, hat, band),
        Concept::MaxminRational => br_maxmin_rational(hat, band),
        Concept::MaxminCursedUnderFstar => br_maxmin_cursed_under_fstar(hat, band),
        Concept::AmbiguousCursed => br_ambiguous_cursed(hat, band),
    }
}
