//! Ex-ante utilities by direct integration over types.

use crate::band::DistributionBand;
use crate::equilibria::partial_quantiles;
use crate::error::Result;
use crate::valuation::{value, Action, Concept, CutoffStrategy, ValueQuery};

const GL_NODES: [f64; 5] =
    [-0.906_179_845_938_664, -0.538_469_310_105_683, 0.0, 0.538_469_310_105_683, 0.906_179_845_938_664];
const GL_WEIGHTS: [f64; 5] =
    [0.236_926_885_056_189, 0.478_628_670_499_366, 0.568_888_888_888_889, 0.478_628_670_499_366, 0.236_926_885_056_189];

/// `∫₀¹ f`, exact for piecewise polynomials of degree ≤ 9 with kinks in `breaks`.
fn integrate(mut f: impl FnMut(f64) -> f64, breaks: &[f64]) -> f64 {
    let mut pts: Vec<f64> = breaks.iter().copied().chain([0.0, 1.0]).collect();
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    let mut total = 0.0;
    for w in pts.windows(2) {
        let (m, r) = (0.5 * (w[0] + w[1]), 0.5 * (w[1] - w[0]));
        for (x, wt) in GL_NODES.iter().zip(GL_WEIGHTS) {
            total += r * wt * f(m + r * x);
        }
    }
    total
}

/// Ex-ante value under `concept` of the cut-off `own` against the cut-off `opp`,
/// with uniform types.
pub fn ex_ante_value(concept: Concept, own: f64, opp: f64) -> Result<f64> {
    let band = DistributionBand::uniform();
    let opponent = CutoffStrategy::new(opp)?;
    let own = CutoffStrategy::new(own)?;
    let mut err = None;
    let v = integrate(
        |t| {
            let action = if own.trades(t) { Action::Trade } else { Action::NoTrade };
            match ValueQuery::new(&band, t, action, opponent).and_then(|q| value(concept, &q)) {
                Ok(v) => v,
                Err(e) => {
                    err = Some(e);
                    f64::NAN
                }
            }
        },
        &[own.threshold(), opp],
    );
    err.map_or(Ok(v), Err)
}

fn equilibrium(chi1: f64, chi2: f64) -> Result<(f64, f64)> {
    Ok(partial_quantiles(chi1, chi2)?.unwrap_or((0.0, 0.0)))
}

/// `(U₁, U₂)` by integrating the rational interim value.
pub fn actual_by_quadrature(chi1: f64, chi2: f64) -> Result<(f64, f64)> {
    let (t1, t2) = equilibrium(chi1, chi2)?;
    Ok((ex_ante_value(Concept::Rational, t1, t2)?, ex_ante_value(Concept::Rational, t2, t1)?))
}

/// `(V₁, V₂)` by integrating each player's `χ`-cursed interim value.
pub fn perceived_by_quadrature(chi1: f64, chi2: f64) -> Result<(f64, f64)> {
    let (t1, t2) = equilibrium(chi1, chi2)?;
    Ok((ex_ante_value(Concept::Partial(chi1), t1, t2)?, ex_ante_value(Concept::Partial(chi2), t2, t1)?))
}
