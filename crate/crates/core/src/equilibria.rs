//! Equilibrium solvers for every concept in the crate.
//!
//! Each solver returns an [`EquilibriumResult`] whose profile list starts with
//! the trivial no-trade profile `(0, 0)` whenever that profile is an
//! equilibrium. `(0, 0)` stands for the whole class of profiles that almost
//! surely never trade.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::band::{CdfCurve, DistributionBand};
use crate::best_response::{br_maxmin_cursed_under_fstar, br_maxmin_rational};
use crate::error::{unit, Error, Result};
use crate::roots;
use crate::valuation::{trade_gain, Concept};

/// Tolerance on the indifference residuals of a reported profile.
pub const RESIDUAL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ClosedForm,
    Bisection,
    FixedPoint,
    GridPolish,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolutionConcept {
    BayesNash,
    Cursed,
    KnightNash,
    SymmetricCkne,
    AllCkne,
    CursedUncursed,
    AmbiguousCkne,
    AmbiguousCursedUncursed,
    Partial { chi1: f64, chi2: f64 },
}

impl SolutionConcept {
    /// Value concepts used by player 1 and player 2.
    pub fn player_concepts(self) -> (Concept, Concept) {
        match self {
            SolutionConcept::BayesNash => (Concept::Rational, Concept::Rational),
            SolutionConcept::Cursed => (Concept::Cursed, Concept::Cursed),
            SolutionConcept::KnightNash => (Concept::MaxminRational, Concept::MaxminRational),
            SolutionConcept::SymmetricCkne | SolutionConcept::AllCkne => {
                (Concept::MaxminCursedUnderFstar, Concept::MaxminCursedUnderFstar)
            }
            SolutionConcept::CursedUncursed => (Concept::MaxminCursedUnderFstar, Concept::MaxminRational),
            SolutionConcept::AmbiguousCkne => (Concept::AmbiguousCursed, Concept::AmbiguousCursed),
            SolutionConcept::AmbiguousCursedUncursed => (Concept::AmbiguousCursed, Concept::MaxminRational),
            SolutionConcept::Partial { chi1, chi2 } => (Concept::Partial(chi1), Concept::Partial(chi2)),
        }
    }
}

/// Equilibrium profiles `(θ₁, θ₂)` with their indifference residuals.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EquilibriumResult {
    pub concept: SolutionConcept,
    pub profiles: Vec<(f64, f64)>,
    /// Largest absolute trade gain of the two players at their thresholds,
    /// one entry per profile (0 for the trivial profile).
    pub residuals: Vec<f64>,
    pub method: Method,
    pub trivial_included: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl EquilibriumResult {
    /// Profiles other than the trivial one.
    pub fn non_trivial(&self) -> &[(f64, f64)] {
        if self.trivial_included {
            &self.profiles[1..]
        } else {
            &self.profiles
        }
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}

/// Indifference residual of a non-trivial profile.
pub fn profile_residual(concept: SolutionConcept, band: &DistributionBand, (t1, t2): (f64, f64)) -> Result<f64> {
    let (c1, c2) = concept.player_concepts();
    let r1 = trade_gain(c1, band, t1, t2)?.abs();
    let r2 = trade_gain(c2, band, t2, t1)?.abs();
    Ok(r1.max(r2))
}

fn assemble(
    concept: SolutionConcept,
    band: &DistributionBand,
    trivial: bool,
    non_trivial: Vec<(f64, f64)>,
    method: Method,
) -> Result<EquilibriumResult> {
    let mut profiles = Vec::new();
    let mut residuals = Vec::new();
    if trivial {
        profiles.push((0.0, 0.0));
        residuals.push(0.0);
    }
    let mut warnings = Vec::new();
    for p in non_trivial {
        let r = profile_residual(concept, band, p)?;
        if r >= RESIDUAL_TOL {
            warnings.push(format!("profile ({}, {}) has residual {r:e}", p.0, p.1));
        }
        profiles.push(p);
        residuals.push(r);
    }
    Ok(EquilibriumResult { concept, profiles, residuals, method, trivial_included: trivial, warnings })
}

/// Rational players never trade with positive probability.
pub fn solve_bne() -> EquilibriumResult {
    EquilibriumResult {
        concept: SolutionConcept::BayesNash,
        profiles: vec![(0.0, 0.0)],
        residuals: vec![0.0],
        method: Method::ClosedForm,
        trivial_included: true,
        warnings: Vec::new(),
    }
}

/// Fully cursed players without ambiguity trade below the median `F⁻¹(½)`.
pub fn solve_cursed_no_uncertainty(center: &CdfCurve) -> Result<EquilibriumResult> {
    if !center.is_strictly_increasing() {
        return Err(Error::Parameter("reference CDF must be strictly increasing".into()));
    }
    let band = DistributionBand::certain(center.clone());
    let m = center.inv(0.5);
    assemble(SolutionConcept::Cursed, &band, true, vec![(m, m)], Method::ClosedForm)
}

/// Maxmin rational players only have the trivial cut-off equilibrium.
pub fn solve_knight_nash_cutoff(band: &DistributionBand) -> Result<EquilibriumResult> {
    band.require_normalized()?;
    assemble(SolutionConcept::KnightNash, band, true, Vec::new(), Method::ClosedForm)
}

/// Iterates the maxmin rational best response starting from `θ̂ = 1` and
/// returns the visited thresholds, stopping at 0 or after `max_iter` steps.
pub fn knight_nash_iteration(band: &DistributionBand, max_iter: usize) -> Result<Vec<f64>> {
    let mut path = vec![1.0];
    let mut hat = 1.0;
    for _ in 0..max_iter {
        let br = br_maxmin_rational(hat, band)?;
        if br.degenerate {
            break;
        }
        hat = br.threshold;
        path.push(hat);
        if hat == 0.0 {
            break;
        }
    }
    Ok(path)
}

/// Unique symmetric cursed Knight-Nash threshold `θ*`, the root of
/// `F_l(θ) = (1 − 2θ)F_h(θ) + θ` on `[½, F_l⁻¹(½)]` (equivalently the fixed
/// point of `(F_h − F_l)/(2F_h − 1)`). Falls back to `½` when all members of
/// the band share the median.
pub fn symmetric_ckne_threshold(band: &DistributionBand) -> Result<(f64, Method)> {
    band.require_normalized()?;
    if band.has_certain_median() {
        return Ok((0.5, Method::ClosedForm));
    }
    let (lo, hi) = (band.lower(), band.upper());
    let h = |t: f64| lo.eval(t) - (1.0 - 2.0 * t) * hi.eval(t) - t;
    let root = roots::bisect(h, 0.5, band.lower_median())?;
    Ok((root.x, Method::Bisection))
}

pub fn solve_symmetric_ckne(band: &DistributionBand) -> Result<EquilibriumResult> {
    let (t, method) = symmetric_ckne_threshold(band)?;
    assemble(SolutionConcept::SymmetricCkne, band, true, vec![(t, t)], method)
}

/// All cut-off cursed Knight-Nash profiles, symmetric or not, at grid
/// resolution.
///
/// A profile `(θ₁, θ₂)` solves both indifference equations iff
/// `θ₂ = B(θ₁)` and `θ₁ = B(θ₂)`, where `B` is the maxmin cursed best
/// response. The scan therefore looks for sign changes of `B(B(t)) − t` on
/// `grid_n` points of `[½, F_l⁻¹(½)]` and polishes each by bisection.
pub fn solve_all_ckne(band: &DistributionBand, grid_n: usize) -> Result<EquilibriumResult> {
    band.require_normalized()?;
    if grid_n < 64 {
        return Err(Error::Parameter(format!("grid_n = {grid_n} is below 64")));
    }
    if band.has_certain_median() {
        let mut r = solve_symmetric_ckne(band)?;
        r.concept = SolutionConcept::AllCkne;
        return Ok(r);
    }
    let br = |t: f64| br_maxmin_cursed_under_fstar(t, band).map(|b| b.threshold);
    let phi = |t: f64| -> Result<f64> { Ok(br(br(t)?)? - t) };
    let (a, b) = (0.5, band.lower_median());
    let ts: Vec<f64> = (0..grid_n).map(|i| a + (b - a) * i as f64 / (grid_n - 1) as f64).collect();
    let vals: Vec<f64> = ts.par_iter().map(|&t| phi(t)).collect::<Result<_>>()?;

    let mut roots_found = Vec::new();
    let mut warnings = Vec::new();
    let scale = vals.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    for i in 0..grid_n {
        if vals[i] == 0.0 {
            roots_found.push(ts[i]);
            continue;
        }
        if i + 1 < grid_n && vals[i + 1] != 0.0 && vals[i].signum() != vals[i + 1].signum() {
            let f = |t: f64| phi(t).unwrap_or(f64::NAN);
            roots_found.push(roots::bisect(f, ts[i], ts[i + 1])?.x);
        }
        let interior = i > 0 && i + 1 < grid_n;
        if interior
            && vals[i].signum() == vals[i - 1].signum()
            && vals[i].signum() == vals[i + 1].signum()
            && vals[i].abs() < vals[i - 1].abs()
            && vals[i].abs() < vals[i + 1].abs()
            && vals[i].abs() < 1e-3 * scale
        {
            warnings.push(format!("near-tangency at t = {:.6}; grid may be too coarse to separate close roots", ts[i]));
        }
    }

    let mut profiles: Vec<(f64, f64)> = Vec::new();
    let push = |p: (f64, f64), profiles: &mut Vec<(f64, f64)>| {
        if !profiles.iter().any(|q| (q.0 - p.0).abs() < 1e-8 && (q.1 - p.1).abs() < 1e-8) {
            profiles.push(p);
        }
    };
    for t in roots_found {
        push((t, br(t)?), &mut profiles);
    }
    for p in profiles.clone() {
        if !profiles.iter().any(|q| (q.0 - p.1).abs() < 1e-8 && (q.1 - p.0).abs() < 1e-8) {
            warnings.push(format!("mirror of ({}, {}) was not resolved by the scan", p.0, p.1));
            push((p.1, p.0), &mut profiles);
        }
    }
    let (sym, _) = symmetric_ckne_threshold(band)?;
    if !profiles.iter().any(|q| (q.0 - sym).abs() < 1e-8 && (q.1 - sym).abs() < 1e-8) {
        warnings.push("symmetric profile was not resolved by the scan".into());
        push((sym, sym), &mut profiles);
    }
    profiles.sort_by(|p, q| p.0.total_cmp(&q.0));

    let mut result = assemble(SolutionConcept::AllCkne, band, true, profiles, Method::GridPolish)?;
    result.warnings.extend(warnings);
    Ok(result)
}

/// Cursed player 1 against maxmin rational player 2:
/// `(F_l⁻¹(½), (F_l + F_h)⁻¹(½))`.
pub fn solve_cursed_uncursed(band: &DistributionBand) -> Result<EquilibriumResult> {
    band.require_normalized()?;
    assemble(SolutionConcept::CursedUncursed, band, true, vec![cursed_uncursed_profile(band)], Method::ClosedForm)
}

fn cursed_uncursed_profile(band: &DistributionBand) -> (f64, f64) {
    let (lo, hi) = (band.lower(), band.upper());
    let t2 = roots::lower_quantile(|t| lo.eval(t) + hi.eval(t), 0.5, 0.0, 1.0);
    (band.lower_median(), t2)
}

/// Symmetric ambiguous cursed threshold `ϑ*`, the root of
/// `2(F_h − F_h²) = F_l` on `[½, F_l⁻¹(½)]`.
pub fn ambiguous_ckne_threshold(band: &DistributionBand) -> Result<(f64, Method)> {
    band.require_normalized()?;
    if band.has_certain_median() {
        return Ok((0.5, Method::ClosedForm));
    }
    let (lo, hi) = (band.lower(), band.upper());
    let f = |t: f64| {
        let h = hi.eval(t);
        2.0 * (h - h * h) - lo.eval(t)
    };
    let root = roots::bisect(f, 0.5, band.lower_median())?;
    Ok((root.x, Method::Bisection))
}

pub fn solve_ambiguous_ckne(band: &DistributionBand) -> Result<EquilibriumResult> {
    let (t, method) = ambiguous_ckne_threshold(band)?;
    assemble(SolutionConcept::AmbiguousCkne, band, true, vec![(t, t)], method)
}

/// Ambiguous cursed player 1 against maxmin rational player 2; the thresholds
/// coincide with [`solve_cursed_uncursed`].
pub fn solve_ambiguous_cursed_uncursed(band: &DistributionBand) -> Result<EquilibriumResult> {
    band.require_normalized()?;
    assemble(
        SolutionConcept::AmbiguousCursedUncursed,
        band,
        true,
        vec![cursed_uncursed_profile(band)],
        Method::ClosedForm,
    )
}

/// Thresholds of the non-trivial `(χ₁, χ₂)`-cursed equilibrium in quantile
/// space, or `None` when `max(χ₁, χ₂) ≤ ½`.
///
/// The more cursed player (ties included) trades below
/// `(2χ_max − 1)/(2χ_max)`, the other below `(2χ_max − 1)/(2(2χ_max − χ_min))`.
pub fn partial_quantiles(chi1: f64, chi2: f64) -> Result<Option<(f64, f64)>> {
    let (c1, c2) = (unit("chi1", chi1)?, unit("chi2", chi2)?);
    let (hi, lo) = (c1.max(c2), c1.min(c2));
    if hi <= 0.5 {
        return Ok(None);
    }
    let more = (2.0 * hi - 1.0) / (2.0 * hi);
    let less = (2.0 * hi - 1.0) / (2.0 * (2.0 * hi - lo));
    Ok(Some(if c1 >= c2 { (more, less) } else { (less, more) }))
}

pub fn solve_partial(chi1: f64, chi2: f64, center: &CdfCurve) -> Result<EquilibriumResult> {
    let band = DistributionBand::certain(center.clone());
    let concept = SolutionConcept::Partial { chi1, chi2 };
    let profiles = match partial_quantiles(chi1, chi2)? {
        Some((p1, p2)) => vec![(center.inv(p1), center.inv(p2))],
        None => Vec::new(),
    };
    assemble(concept, &band, true, profiles, Method::ClosedForm)
}

/// Envelope values at the symmetric thresholds of two nested bands.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnvelopeOrdering {
    pub threshold_inner: f64,
    pub threshold_outer: f64,
    /// `F_l(θ_F)` and `G_l(θ_G)`.
    pub lower_inner: f64,
    pub lower_outer: f64,
    /// `F_h(θ_F)` and `G_h(θ_G)`.
    pub upper_inner: f64,
    pub upper_outer: f64,
    /// `G_l(θ_G) < F_l(θ_F)`.
    pub lower_ordered: bool,
    /// `G_h(θ_G) > F_h(θ_F)`.
    pub upper_ordered: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StaticsReport {
    pub ckne: EnvelopeOrdering,
    pub ambiguous: EnvelopeOrdering,
}

/// Compares the symmetric equilibria of `inner` and of a band `outer` that
/// strictly encloses it.
pub fn comparative_statics_check(inner: &DistributionBand, outer: &DistributionBand) -> Result<StaticsReport> {
    inner.require_normalized()?;
    outer.require_normalized()?;
    inner.strictly_enclosed_by(outer)?;
    let ordering = |tf: f64, tg: f64| {
        let (lf, hf) = (inner.lower().eval(tf), inner.upper().eval(tf));
        let (lg, hg) = (outer.lower().eval(tg), outer.upper().eval(tg));
        EnvelopeOrdering {
            threshold_inner: tf,
            threshold_outer: tg,
            lower_inner: lf,
            lower_outer: lg,
            upper_inner: hf,
            upper_outer: hg,
            lower_ordered: lg < lf,
            upper_ordered: hg > hf,
        }
    };
    Ok(StaticsReport {
        ckne: ordering(symmetric_ckne_threshold(inner)?.0, symmetric_ckne_threshold(outer)?.0),
        ambiguous: ordering(ambiguous_ckne_threshold(inner)?.0, ambiguous_ckne_threshold(outer)?.0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_grid_rejected() {
        let b = DistributionBand::contamination(0.5).unwrap();
        assert!(solve_all_ckne(&b, 10).is_err());
    }

    #[test]
    fn partial_assignment() {
        assert_eq!(partial_quantiles(0.5, 0.5).unwrap(), None);
        let (a, b) = partial_quantiles(0.6, 0.9).unwrap().unwrap();
        assert!((a - 1.0 / 3.0).abs() < 1e-15 && (b - 4.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn identical_bands_do_not_enclose() {
        let b = DistributionBand::contamination(0.3).unwrap();
        assert!(matches!(comparative_statics_check(&b, &b), Err(Error::Enclosure(_))));
    }
}
