//! Monte Carlo play of the trading game.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::band::CdfCurve;
use crate::error::{Error, Result};
use crate::oracle::strategy::GeneralStrategy;

/// Games simulated per random stream.
pub const BATCH: u64 = 1 << 16;

/// Player 1's empirical winning frequency (ties count one half).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimulationResult {
    pub games: u64,
    pub mean: f64,
    pub std_error: f64,
}

/// Plays `n` games with both types drawn independently from `f`.
///
/// Batch `b` uses stream `b` of a ChaCha8 generator seeded with `seed`, so
/// the result does not depend on the thread count.
pub fn simulate_game(
    s1: &GeneralStrategy,
    s2: &GeneralStrategy,
    f: &CdfCurve,
    n: u64,
    seed: u64,
) -> Result<SimulationResult> {
    if n < 2 {
        return Err(Error::Parameter(format!("need at least 2 games, got {n}")));
    }
    let batches = n.div_ceil(BATCH);
    // Scores are counted in half points: 2 for a win, 1 for a tie.
    let (sum, sum_sq) = (0..batches)
        .into_par_iter()
        .map(|b| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(b);
            let games = BATCH.min(n - b * BATCH);
            let (mut sum, mut sum_sq) = (0u64, 0u64);
            for _ in 0..games {
                let t1 = f.inv(rng.random::<f64>());
                let t2 = f.inv(rng.random::<f64>());
                let a1 = rng.random::<f64>() < s1.trade_prob(t1);
                let a2 = rng.random::<f64>() < s2.trade_prob(t2);
                let score = if t1 == t2 {
                    1
                } else if (a1 && a2) == (t1 < t2) {
                    2
                } else {
                    0
                };
                sum += score;
                sum_sq += score * score;
            }
            (sum, sum_sq)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    let nf = n as f64;
    let mean = sum as f64 / (2.0 * nf);
    let var = (sum_sq as f64 / (4.0 * nf) - mean * mean).max(0.0) * nf / (nf - 1.0);
    Ok(SimulationResult { games: n, mean, std_error: (var / nf).sqrt() })
}
