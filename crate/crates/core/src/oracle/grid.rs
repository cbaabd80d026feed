//! Best responses and equilibrium certificates on a type grid.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::band::DistributionBand;
use crate::error::{Error, Result};
use crate::oracle::general::general_values;
use crate::oracle::strategy::GeneralStrategy;
use crate::valuation::Concept;

/// A type offers only if offering beats keeping by more than this.
pub const TIE_TOL: f64 = 1e-12;
/// Largest per-type improvement a certified equilibrium may leave.
pub const CERTIFY_TOL: f64 = 1e-6;
pub const MIN_GRID: usize = 1000;

fn grid(grid_n: usize) -> Result<Vec<f64>> {
    if grid_n < MIN_GRID {
        return Err(Error::Parameter(format!("grid needs at least {MIN_GRID} points, got {grid_n}")));
    }
    Ok((0..grid_n).map(|i| i as f64 / (grid_n - 1) as f64).collect())
}

fn grid_response(
    concept: Concept,
    opponent: &GeneralStrategy,
    band: &DistributionBand,
    grid_n: usize,
    offer_on_tie: bool,
) -> Result<GeneralStrategy> {
    let types = grid(grid_n)?;
    let offers: Vec<bool> = types
        .par_iter()
        .map(|&t| {
            general_values(concept, band, t, opponent).map(|(tr, nt)| {
                let gain = tr - nt;
                if offer_on_tie {
                    gain >= -TIE_TOL
                } else {
                    gain > TIE_TOL
                }
            })
        })
        .collect::<Result<_>>()?;
    let mut intervals: Vec<(f64, f64)> = Vec::new();
    let mut start: Option<f64> = None;
    for (i, &o) in offers.iter().enumerate() {
        match (o, start) {
            (true, None) => start = Some(types[i]),
            (false, Some(s)) => {
                intervals.push((s, types[i - 1]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        intervals.push((s, 1.0));
    }
    GeneralStrategy::intervals(intervals)
}

/// Pure best response at each grid type, returned as the union of the
/// maximal runs of offering types. Indifferent types keep.
pub fn grid_best_response(
    concept: Concept,
    opponent: &GeneralStrategy,
    band: &DistributionBand,
    grid_n: usize,
) -> Result<GeneralStrategy> {
    grid_response(concept, opponent, band, grid_n, false)
}

/// Like [`grid_best_response`], but indifferent types offer. Together the two
/// bracket every pure best response at grid resolution.
pub fn grid_weak_best_response(
    concept: Concept,
    opponent: &GeneralStrategy,
    band: &DistributionBand,
    grid_n: usize,
) -> Result<GeneralStrategy> {
    grid_response(concept, opponent, band, grid_n, true)
}

/// Threshold of a strategy that offers exactly on `[0, θ]`, or 0 for a
/// strategy that never offers. `None` for anything else.
pub fn as_threshold(s: &GeneralStrategy) -> Option<f64> {
    match s {
        GeneralStrategy::Cutoff(c) => Some(c.threshold()),
        GeneralStrategy::Intervals(iv) => match iv.as_slice() {
            [] => Some(0.0),
            [(a, b)] if *a == 0.0 => Some(*b),
            _ => None,
        },
        GeneralStrategy::Tabulated { .. } => None,
    }
}

/// Largest gain any grid type of either player could get by deviating.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub max_improvement: [f64; 2],
    /// Type at which each player's largest improvement occurs.
    pub worst_type: [f64; 2],
    pub certified: bool,
    pub grid_n: usize,
}

pub fn verify_equilibrium(
    profile: (&GeneralStrategy, &GeneralStrategy),
    concepts: (Concept, Concept),
    band: &DistributionBand,
    grid_n: usize,
) -> Result<Certificate> {
    let types = grid(grid_n)?;
    let sides = [(profile.0, profile.1, concepts.0), (profile.1, profile.0, concepts.1)];
    let mut max_improvement = [0.0; 2];
    let mut worst_type = [0.0; 2];
    for (k, &(own, opp, concept)) in sides.iter().enumerate() {
        let (gain, at) = types
            .par_iter()
            .map(|&t| {
                let (tr, nt) = general_values(concept, band, t, opp)?;
                let p = own.trade_prob(t);
                Ok((tr.max(nt) - (p * tr + (1.0 - p) * nt), t))
            })
            .collect::<Result<Vec<(f64, f64)>>>()?
            .into_iter()
            .fold((0.0, 0.0), |best, x| if x.0 > best.0 { x } else { best });
        max_improvement[k] = gain;
        worst_type[k] = at;
    }
    Ok(Certificate {
        max_improvement,
        worst_type,
        certified: max_improvement.iter().all(|&g| g <= CERTIFY_TOL),
        grid_n,
    })
}
