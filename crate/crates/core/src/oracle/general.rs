//! Exact interim values against opponents who need not use cut-offs.
//!
//! The opponent's strategy splits `[0, 1]` into pieces of constant trade
//! probability. Every value functional then depends on a CDF only through
//! its values at the piece boundaries and at the own type, so the worst case
//! over the band is a small linear programme over a monotone chain
//! `0 ≤ z₀ ≤ z₁ ≤ … ≤ z_K` with box bounds from the envelopes. That
//! programme is solved exactly by dynamic programming over the finite set of
//! envelope values, which contains an optimal vertex.

use crate::band::DistributionBand;
use crate::error::Result;
use crate::oracle::strategy::GeneralStrategy;
use crate::valuation::{maxmin_cursed_trade, value, Action, Concept, ValueQuery};

/// Chain nodes for own type `t`: node 0 is type 0 (carrying the atom at 0),
/// the rest are piece boundaries and `t`. Returns the node types, the
/// opponent's trade probability on the piece ending at each node, and the
/// index of `t`.
fn nodes(t: f64, opp: &GeneralStrategy) -> (Vec<f64>, Vec<f64>, usize) {
    let mut qs: Vec<f64> = vec![0.0, t, 1.0];
    qs.extend(opp.segments().iter().map(|s| s.hi));
    qs.sort_by(f64::total_cmp);
    qs.dedup();
    let probs: Vec<f64> = qs
        .iter()
        .enumerate()
        .map(|(k, &q)| if k == 0 { opp.trade_prob(0.0) } else { opp.trade_prob(0.5 * (qs[k - 1] + q)) })
        .collect();
    let j = qs.iter().position(|&q| q == t).expect("own type is a node");
    (qs, probs, j)
}

/// Minimum of `Σ w_k (z_k − z_{k−1})` with `z_{−1} = 0`, `z` non-decreasing
/// and `z_k ∈ bounds[k]`.
pub(crate) fn chain_min(bounds: &[(f64, f64)], weights: &[f64]) -> f64 {
    let mut levels: Vec<f64> = bounds.iter().flat_map(|&(a, b)| [a, b]).chain([0.0, 1.0]).collect();
    levels.sort_by(f64::total_cmp);
    levels.dedup();
    let feasible = |k: usize, l: f64| bounds[k].0 <= l && l <= bounds[k].1;
    let mut dp: Vec<f64> =
        levels.iter().map(|&l| if feasible(0, l) { weights[0] * l } else { f64::INFINITY }).collect();
    for (k, &w) in weights.iter().enumerate().take(bounds.len()).skip(1) {
        let mut running = f64::INFINITY;
        for (i, &l) in levels.iter().enumerate() {
            running = running.min(dp[i] - w * l);
            dp[i] = if feasible(k, l) { w * l + running } else { f64::INFINITY };
        }
    }
    dp.into_iter().fold(f64::INFINITY, f64::min)
}

fn envelope_bounds(band: &DistributionBand, qs: &[f64]) -> Vec<(f64, f64)> {
    qs.iter().map(|&q| (band.lower().eval(q), band.upper().eval(q))).collect()
}

/// Mass each piece receives under the reference CDF.
fn center_masses(band: &DistributionBand, qs: &[f64]) -> Vec<f64> {
    let f = band.center();
    let mut prev = 0.0;
    qs.iter()
        .map(|&q| {
            let v = f.eval(q);
            let m = v - prev;
            prev = v;
            m
        })
        .collect()
}

/// Weight of each piece in the rational trade value: the opponent's keep
/// probability below the own type, their offer probability above it.
fn rational_weights(qs: &[f64], probs: &[f64], t: f64) -> Vec<f64> {
    qs.iter().zip(probs).map(|(&q, &p)| if q <= t { 1.0 - p } else { p }).collect()
}

/// Minimum over the band of `x + (1 − 2x)σ̄`, where `x` is the CDF at node
/// `j` and `σ̄ = Σ p_k · mass_k` the opponent's offer probability.
fn ambiguous_min(bounds: &[(f64, f64)], probs: &[f64], j: usize) -> f64 {
    let neg: Vec<f64> = probs.iter().map(|p| -p).collect();
    let sigma_at = |x: f64| {
        let mut b = bounds.to_vec();
        b[j] = (x, x);
        if x <= 0.5 {
            chain_min(&b, probs)
        } else {
            -chain_min(&b, &neg)
        }
    };
    let phi = |x: f64, s: f64| x + (1.0 - 2.0 * x) * s;
    let (xlo, xhi) = bounds[j];
    let mut cuts: Vec<f64> =
        bounds.iter().flat_map(|&(a, b)| [a, b]).chain([xlo, xhi, 0.5]).filter(|&x| xlo <= x && x <= xhi).collect();
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    let mut best = f64::INFINITY;
    for &x in &cuts {
        best = best.min(phi(x, sigma_at(x)));
    }
    let mut stack: Vec<(f64, f64, u32)> = cuts.windows(2).map(|w| (w[0], w[1], 0)).collect();
    while let Some((a, b, depth)) = stack.pop() {
        let (sa, sb) = (sigma_at(a), sigma_at(b));
        let m = 0.5 * (a + b);
        let sm = sigma_at(m);
        if (sm - 0.5 * (sa + sb)).abs() > 1e-13 && depth < 30 {
            best = best.min(phi(m, sm));
            stack.push((a, m, depth + 1));
            stack.push((m, b, depth + 1));
            continue;
        }
        // σ̄ is linear on [a, b], so φ is a quadratic with one stationary point.
        let beta = (sb - sa) / (b - a);
        let alpha = sa - beta * a;
        if beta != 0.0 {
            let x = (1.0 - 2.0 * alpha + beta) / (4.0 * beta);
            if a < x && x < b {
                best = best.min(phi(x, alpha + beta * x));
            }
        }
    }
    best
}

/// Values of offering and keeping at own type `t` against `opp`.
///
/// Cut-off opponents are delegated to the closed forms of
/// [`crate::valuation`].
pub fn general_values(concept: Concept, band: &DistributionBand, t: f64, opp: &GeneralStrategy) -> Result<(f64, f64)> {
    if let Some(c) = opp.as_cutoff() {
        let q = ValueQuery::new(band, t, Action::Trade, c)?;
        return Ok((value(concept, &q)?, value(concept, &q.with_action(Action::NoTrade))?));
    }
    let (qs, probs, j) = nodes(t, opp);
    let masses = center_masses(band, &qs);
    let rational = || {
        let w = rational_weights(&qs, &probs, t);
        w.iter().zip(&masses).map(|(w, m)| w * m).sum::<f64>()
    };
    let sigma = || probs.iter().zip(&masses).map(|(p, m)| p * m).sum::<f64>();
    let partial = |chi: f64| {
        let x = band.center().eval(t);
        let s = sigma();
        (chi * (s * (1.0 - x) + (1.0 - s) * x) + (1.0 - chi) * rational(), x)
    };
    Ok(match concept {
        Concept::Rational => partial(0.0),
        Concept::Cursed => partial(1.0),
        Concept::Partial(chi) => partial(crate::error::unit("chi", chi)?),
        Concept::MaxminRational => {
            band.require_normalized()?;
            let w = rational_weights(&qs, &probs, t);
            (chain_min(&envelope_bounds(band, &qs), &w), band.lower().eval(t))
        }
        Concept::MaxminCursedUnderFstar => {
            band.require_normalized()?;
            (maxmin_cursed_trade(band, t, sigma()), band.lower().eval(t))
        }
        Concept::AmbiguousCursed => {
            band.require_normalized()?;
            (ambiguous_min(&envelope_bounds(band, &qs), &probs, j), band.lower().eval(t))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_matches_cutoff_closed_forms() {
        let band = DistributionBand::contamination(0.6).unwrap();
        for &(t, hat) in &[(0.2, 0.7), (0.8, 0.3), (0.45, 0.55), (0.9, 0.95)] {
            let cut = GeneralStrategy::cutoff(hat).unwrap();
            // The same cut-off written as an interval takes the chain route.
            let iv = GeneralStrategy::intervals(vec![(0.0, hat)]).unwrap();
            for concept in [
                Concept::Rational,
                Concept::Cursed,
                Concept::MaxminRational,
                Concept::MaxminCursedUnderFstar,
                Concept::AmbiguousCursed,
            ] {
                let a = general_values(concept, &band, t, &cut).unwrap();
                let b = general_values(concept, &band, t, &iv).unwrap();
                assert!((a.0 - b.0).abs() < 1e-12, "{concept} {t} {hat}: {a:?} {b:?}");
                assert_eq!(a.1, b.1);
            }
        }
    }
}
