//! Random CDFs inside a band and a brute-force minimiser over them.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::band::DistributionBand;
use crate::error::{Error, Result};
use crate::valuation::{Action, Concept, ValueQuery};

/// Clamp that tolerates envelopes crossing by rounding.
fn squeeze(y: f64, lo: f64, hi: f64) -> f64 {
    y.max(lo).min(hi.max(lo))
}

/// A monotone piecewise-linear curve, clamped into a band when evaluated.
#[derive(Debug, Clone, PartialEq)]
pub struct BandSample {
    xs: Vec<f64>,
    ys: Vec<f64>,
}

impl BandSample {
    /// Draws `knots` random interior knots plus the `anchors`, 0 and 1.
    ///
    /// Knot heights are sorted uniforms projected into the band; at anchors
    /// the height snaps to an envelope with probability 2/3 so that the
    /// extreme values there are hit often.
    pub fn draw<R: Rng>(band: &DistributionBand, anchors: &[f64], knots: usize, rng: &mut R) -> Self {
        let mut xs: Vec<f64> = (0..knots).map(|_| rng.random::<f64>()).collect();
        xs.extend(anchors.iter().copied().filter(|a| (0.0..=1.0).contains(a)));
        xs.extend([0.0, 1.0]);
        xs.sort_by(f64::total_cmp);
        xs.dedup();
        let mut heights: Vec<f64> = xs.iter().map(|_| rng.random::<f64>()).collect();
        heights.sort_by(f64::total_cmp);
        let mut ys = Vec::with_capacity(xs.len());
        let mut running = 0.0_f64;
        for (&x, &h) in xs.iter().zip(&heights) {
            let (lo, hi) = (band.lower().eval(x), band.upper().eval(x));
            let y = if anchors.contains(&x) {
                match rng.random_range(0..3) {
                    0 => lo,
                    1 => hi,
                    _ => h,
                }
            } else {
                h
            };
            running = running.max(squeeze(y, lo, hi));
            ys.push(running);
        }
        Self { xs, ys }
    }

    fn interp(&self, t: f64) -> f64 {
        let i = self.xs.partition_point(|&x| x <= t);
        if i == 0 {
            return self.ys[0];
        }
        if i == self.xs.len() {
            return *self.ys.last().unwrap();
        }
        let (x0, x1, y0, y1) = (self.xs[i - 1], self.xs[i], self.ys[i - 1], self.ys[i]);
        y0 + (y1 - y0) * (t - x0) / (x1 - x0)
    }

    /// Value at `t`, clamped into the band (which keeps it a CDF in the band).
    pub fn eval(&self, band: &DistributionBand, t: f64) -> f64 {
        squeeze(self.interp(t), band.lower().eval(t), band.upper().eval(t))
    }

    /// Copy made constant on `[a, b]`, at the value at `a` (`forward`) or at `b`.
    pub fn flatten(&self, band: &DistributionBand, a: f64, b: f64, forward: bool) -> Self {
        let mut xs = self.xs.clone();
        xs.extend([a, b]);
        xs.sort_by(f64::total_cmp);
        xs.dedup();
        let level = self.eval(band, if forward { a } else { b });
        let ys = xs.iter().map(|&x| if a <= x && x <= b { level } else { self.eval(band, x) }).collect();
        Self { xs, ys }
    }
}

/// The value functional of a maxmin concept under one CDF `f`.
fn single_value(concept: Concept, action: Action, t: f64, hat: f64, f: impl Fn(f64) -> f64) -> f64 {
    let x = f(t);
    match (action, concept) {
        (Action::NoTrade, _) => x,
        (Action::Trade, Concept::MaxminRational) => (x - f(hat)).abs(),
        (Action::Trade, Concept::MaxminCursedUnderFstar) => (1.0 - 2.0 * hat) * x + hat,
        (Action::Trade, _) => {
            let y = f(hat);
            x + y - 2.0 * x * y
        }
    }
}

/// Minimum of a maxmin concept's value functional over the two envelopes and
/// `samples` random CDFs in the band (each with two flattened variants).
///
/// Sample `i` is drawn from stream `i` of a ChaCha8 generator seeded with
/// `seed`, so the result is reproducible and non-increasing in `samples`.
pub fn bruteforce_min_value(concept: Concept, q: &ValueQuery, samples: usize, knots: usize, seed: u64) -> Result<f64> {
    if !concept.is_maxmin() {
        return Err(Error::Parameter(format!("brute force needs a maxmin concept, got {concept}")));
    }
    let band = q.band;
    band.require_normalized()?;
    let (t, hat, action) = (q.own_type, q.opponent.threshold(), q.action);
    let envelopes = single_value(concept, action, t, hat, |x| band.lower().eval(x)).min(single_value(
        concept,
        action,
        t,
        hat,
        |x| band.upper().eval(x),
    ));
    let anchors = [t, hat];
    let sampled = (0..samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            let s = BandSample::draw(band, &anchors, knots, &mut rng);
            let pool = [t, hat, rng.random::<f64>(), rng.random::<f64>()];
            let ends: Vec<f64> = pool.choose_multiple(&mut rng, 2).copied().collect();
            let (a, b) = (ends[0].min(ends[1]), ends[0].max(ends[1]));
            let mut best = single_value(concept, action, t, hat, |x| s.eval(band, x));
            if a < b {
                for forward in [true, false] {
                    let g = s.flatten(band, a, b, forward);
                    best = best.min(single_value(concept, action, t, hat, |x| g.eval(band, x)));
                }
            }
            best
        })
        .reduce(|| f64::INFINITY, f64::min);
    Ok(envelopes.min(sampled))
}
