//! Strategies that need not be cut-offs.

use serde::{Deserialize, Serialize};

use crate::error::{unit, Error, Result};
use crate::valuation::CutoffStrategy;

/// A (possibly mixed) map from own type to the probability of offering.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GeneralStrategy {
    Cutoff(CutoffStrategy),
    /// Offer on a union of disjoint closed intervals, sorted left to right.
    Intervals(Vec<(f64, f64)>),
    /// `probs[i]` applies on `[grid[i], grid[i + 1])`, the last entry up to 1.
    Tabulated {
        grid: Vec<f64>,
        probs: Vec<f64>,
    },
}

/// A piece `(lo, hi]` of `[0, 1]` on which the trade probability is constant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub lo: f64,
    pub hi: f64,
    pub prob: f64,
}

impl GeneralStrategy {
    pub fn cutoff(threshold: f64) -> Result<Self> {
        Ok(Self::Cutoff(CutoffStrategy::new(threshold)?))
    }

    pub fn intervals(intervals: Vec<(f64, f64)>) -> Result<Self> {
        let mut prev = f64::NEG_INFINITY;
        for &(a, b) in &intervals {
            unit("interval end", a)?;
            unit("interval end", b)?;
            if a > b || a <= prev {
                return Err(Error::Validation(format!("intervals must be disjoint and sorted, got ({a}, {b})")));
            }
            prev = b;
        }
        Ok(Self::Intervals(intervals))
    }

    pub fn tabulated(grid: Vec<f64>, probs: Vec<f64>) -> Result<Self> {
        if grid.is_empty() || grid.len() != probs.len() || grid[0] != 0.0 {
            return Err(Error::Validation("tabulated strategy needs matching grids starting at 0".into()));
        }
        if grid.windows(2).any(|w| w[0] >= w[1]) || *grid.last().unwrap() > 1.0 {
            return Err(Error::Validation("tabulated grid must be strictly increasing in [0, 1]".into()));
        }
        for &p in &probs {
            unit("trade probability", p)?;
        }
        Ok(Self::Tabulated { grid, probs })
    }

    pub fn as_cutoff(&self) -> Option<CutoffStrategy> {
        match self {
            Self::Cutoff(c) => Some(*c),
            _ => None,
        }
    }

    /// Probability of offering at type `t`.
    pub fn trade_prob(&self, t: f64) -> f64 {
        match self {
            Self::Cutoff(c) => f64::from(u8::from(c.trades(t))),
            Self::Intervals(iv) => f64::from(u8::from(iv.iter().any(|&(a, b)| a <= t && t <= b))),
            Self::Tabulated { grid, probs } => {
                let i = grid.partition_point(|&g| g <= t).saturating_sub(1);
                probs[i]
            }
        }
    }

    /// Partition of `[0, 1]` into maximal pieces of constant trade probability.
    /// Measure-zero pieces are dropped.
    pub fn segments(&self) -> Vec<Segment> {
        let mut raw: Vec<Segment> = Vec::new();
        match self {
            Self::Cutoff(c) => {
                raw.push(Segment { lo: 0.0, hi: c.threshold(), prob: 1.0 });
                raw.push(Segment { lo: c.threshold(), hi: 1.0, prob: 0.0 });
            }
            Self::Intervals(iv) => {
                let mut at = 0.0;
                for &(a, b) in iv {
                    raw.push(Segment { lo: at, hi: a, prob: 0.0 });
                    raw.push(Segment { lo: a, hi: b, prob: 1.0 });
                    at = b;
                }
                raw.push(Segment { lo: at, hi: 1.0, prob: 0.0 });
            }
            Self::Tabulated { grid, probs } => {
                for (i, &p) in probs.iter().enumerate() {
                    let hi = grid.get(i + 1).copied().unwrap_or(1.0);
                    raw.push(Segment { lo: grid[i], hi, prob: p });
                }
            }
        }
        let mut out: Vec<Segment> = Vec::new();
        for s in raw.into_iter().filter(|s| s.hi > s.lo) {
            match out.last_mut() {
                Some(last) if last.prob == s.prob => last.hi = s.hi,
                _ => out.push(s),
            }
        }
        if out.is_empty() {
            out.push(Segment { lo: 0.0, hi: 1.0, prob: 0.0 });
        }
        out
    }
}

impl From<CutoffStrategy> for GeneralStrategy {
    fn from(c: CutoffStrategy) -> Self {
        Self::Cutoff(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segments_merge_and_cover() {
        let s = GeneralStrategy::intervals(vec![(0.0, 0.2), (0.5, 0.7)]).unwrap();
        let segs = s.segments();
        assert_eq!(segs.len(), 4);
        assert_eq!(segs[0], Segment { lo: 0.0, hi: 0.2, prob: 1.0 });
        assert_eq!(segs[3].hi, 1.0);
        assert_eq!(s.trade_prob(0.6), 1.0);
        assert_eq!(s.trade_prob(0.3), 0.0);
        let never = GeneralStrategy::cutoff(0.0).unwrap();
        assert_eq!(never.segments(), vec![Segment { lo: 0.0, hi: 1.0, prob: 0.0 }]);
        let t = GeneralStrategy::tabulated(vec![0.0, 0.5], vec![0.25, 0.25]).unwrap();
        assert_eq!(t.segments().len(), 1);
        assert!(GeneralStrategy::intervals(vec![(0.5, 0.7), (0.1, 0.2)]).is_err());
    }
}
