//! Interim expected utilities of a player facing a cut-off opponent.
//!
//! Player `k` of type `θ` wins the object of higher type. Trading swaps the
//! objects and only happens when both players offer. Against an opponent who
//! offers iff their type is at most `θ̂`, each functional below returns the
//! value of offering (`Trade`) or keeping (`NoTrade`).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::band::DistributionBand;
use crate::error::{unit, Error, Result};

/// Offer to trade iff the own type is at most `threshold`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct CutoffStrategy {
    threshold: f64,
}

impl CutoffStrategy {
    pub fn new(threshold: f64) -> Result<Self> {
        Ok(Self { threshold: unit("threshold", threshold)? })
    }

    /// The strategy that (almost surely) never offers.
    pub fn never() -> Self {
        Self { threshold: 0.0 }
    }

    pub fn threshold(self) -> f64 {
        self.threshold
    }

    pub fn trades(self, t: f64) -> bool {
        t <= self.threshold
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Action {
    Trade,
    NoTrade,
}

/// A way of evaluating interim utilities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Concept {
    /// Correct beliefs under the reference CDF.
    Rational,
    /// Worst case over the band, with correct type-contingent beliefs.
    MaxminRational,
    /// Opponent's action treated as independent of their type.
    Cursed,
    /// Worst case over the band for the opponent's type, with the opponent's
    /// trade probability fixed by the reference CDF.
    MaxminCursedUnderFstar,
    /// Worst case over the band for both the type and the trade probability.
    AmbiguousCursed,
    /// Convex mixture `χ · cursed + (1 − χ) · rational`.
    Partial(f64),
}

impl Concept {
    /// True for the concepts whose value depends on the band envelopes.
    pub fn is_maxmin(self) -> bool {
        matches!(self, Concept::MaxminRational | Concept::MaxminCursedUnderFstar | Concept::AmbiguousCursed)
    }

    /// True for the concepts in which the opponent's action is at least partly
    /// decoupled from their type.
    pub fn is_cursed_type(self) -> bool {
        match self {
            Concept::Cursed | Concept::MaxminCursedUnderFstar | Concept::AmbiguousCursed => true,
            Concept::Partial(chi) => chi > 0.0,
            _ => false,
        }
    }
}

impl fmt::Display for Concept {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Concept::Rational => write!(f, "rational"),
            Concept::MaxminRational => write!(f, "maxmin-rational"),
            Concept::Cursed => write!(f, "cursed"),
            Concept::MaxminCursedUnderFstar => write!(f, "maxmin-cursed-under-fstar"),
            Concept::AmbiguousCursed => write!(f, "ambiguous-cursed"),
            Concept::Partial(chi) => write!(f, "partial({chi})"),
        }
    }
}

impl FromStr for Concept {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rational" => Ok(Concept::Rational),
            "maxmin-rational" => Ok(Concept::MaxminRational),
            "cursed" => Ok(Concept::Cursed),
            "maxmin-cursed-under-fstar" => Ok(Concept::MaxminCursedUnderFstar),
            "ambiguous-cursed" => Ok(Concept::AmbiguousCursed),
            _ => {
                let chi = s
                    .strip_prefix("partial(")
                    .and_then(|r| r.strip_suffix(')'))
                    .and_then(|c| c.parse::<f64>().ok())
                    .ok_or_else(|| Error::Parameter(format!("unknown concept `{s}`")))?;
                Ok(Concept::Partial(unit("chi", chi)?))
            }
        }
    }
}

/// Inputs shared by all value functionals.
#[derive(Debug, Clone, Copy)]
pub struct ValueQuery<'a> {
    pub own_type: f64,
    pub action: Action,
    pub opponent: CutoffStrategy,
    pub band: &'a DistributionBand,
    /// Degree of cursedness, read only by [`value_partial_cursed`].
    pub chi: f64,
}

impl<'a> ValueQuery<'a> {
    pub fn new(band: &'a DistributionBand, own_type: f64, action: Action, opponent: CutoffStrategy) -> Result<Self> {
        Ok(Self { own_type: unit("own type", own_type)?, action, opponent, band, chi: 0.0 })
    }

    pub fn with_chi(mut self, chi: f64) -> Result<Self> {
        self.chi = unit("chi", chi)?;
        Ok(self)
    }

    /// Same query with the other action.
    pub fn with_action(mut self, action: Action) -> Self {
        self.action = action;
        self
    }

    fn hat(&self) -> f64 {
        self.opponent.threshold()
    }
}

/// Expected utility under the reference CDF `F`:
/// `F(θ)` for keeping, `|F(θ) − F(θ̂)|` for offering.
pub fn value_rational(q: &ValueQuery) -> f64 {
    let f = q.band.center();
    let x = f.eval(q.own_type);
    match q.action {
        Action::NoTrade => x,
        Action::Trade => (x - f.eval(q.hat())).abs(),
    }
}

/// Cursed expected utility under `F`: the opponent offers with probability
/// `s = F(θ̂)` independently of type, so offering is worth `s(1 − F(θ)) + (1 − s)F(θ)`.
pub fn value_cursed(q: &ValueQuery) -> f64 {
    let f = q.band.center();
    let x = f.eval(q.own_type);
    match q.action {
        Action::NoTrade => x,
        Action::Trade => {
            let s = f.eval(q.hat());
            s * (1.0 - x) + (1.0 - s) * x
        }
    }
}

/// `χ · value_cursed + (1 − χ) · value_rational`.
pub fn value_partial_cursed(q: &ValueQuery) -> f64 {
    q.chi * value_cursed(q) + (1.0 - q.chi) * value_rational(q)
}

/// Infimum over the band of the rational expected utility.
///
/// Keeping is worth `F_l(θ)`. Offering is worth `F_l(θ̂) − F_h(θ)` when even
/// the most favourable CDF puts `θ` below the opponent's threshold,
/// `F_l(θ) − F_h(θ̂)` in the mirrored case, and `0` when some CDF in the band
/// is flat between `θ` and `θ̂`. `F_l(θ̂)` is taken as a left limit so that the
/// lower `ε` envelope's jump at 1 is not seen by a cut-off at 1.
pub fn value_maxmin_rational(q: &ValueQuery) -> Result<f64> {
    q.band.require_normalized()?;
    let (lo, hi) = (q.band.lower(), q.band.upper());
    let t = q.own_type;
    Ok(match q.action {
        Action::NoTrade => lo.eval(t),
        Action::Trade => {
            let (l_hat, h_hat) = (lo.eval_left(q.hat()), hi.eval(q.hat()));
            let (l, h) = (lo.eval(t), hi.eval(t));
            if h <= l_hat {
                l_hat - h
            } else if h_hat <= l {
                l - h_hat
            } else {
                0.0
            }
        }
    })
}

/// Trade value of a cursed player who knows the opponent's trade probability `s`
/// but not the type distribution: `min_F (1 − 2s)F(θ) + s`.
pub fn maxmin_cursed_trade(band: &DistributionBand, t: f64, s: f64) -> f64 {
    let x = if s <= 0.5 { band.lower().eval(t) } else { band.upper().eval(t) };
    (1.0 - 2.0 * s) * x + s
}

/// Infimum over the band of the cursed utility with the opponent's trade
/// probability fixed at `F*(θ̂) = θ̂`.
pub fn value_maxmin_cursed_under_fstar(q: &ValueQuery) -> Result<f64> {
    q.band.require_normalized()?;
    Ok(match q.action {
        Action::NoTrade => q.band.lower().eval(q.own_type),
        Action::Trade => maxmin_cursed_trade(q.band, q.own_type, q.hat()),
    })
}

/// `min_F F(θ) + F(θ̂) − 2 F(θ) F(θ̂)` over the band.
///
/// The objective is bilinear in `(x, y) = (F(θ), F(θ̂))`, and the attainable
/// pairs form the box `[F_l(θ), F_h(θ)] × [F_l(θ̂), F_h(θ̂)]` cut by the
/// monotonicity constraint (`x ≤ y` when `θ < θ̂`). The minimum sits at a
/// vertex: a feasible envelope combination `(G(θ), H(θ̂))`, or an end of the
/// diagonal `x = y`, which corresponds to a CDF that is flat between the two types.
pub fn ambiguous_trade(band: &DistributionBand, t: f64, hat: f64) -> f64 {
    let (lo, hi) = (band.lower(), band.upper());
    let (xl, xh) = (lo.eval(t), hi.eval(t));
    let (yl, yh) = (lo.eval(hat), hi.eval(hat));
    let phi = |x: f64, y: f64| x + y - 2.0 * x * y;
    let feasible = |x: f64, y: f64| {
        if t < hat {
            x <= y
        } else if t > hat {
            x >= y
        } else {
            x == y
        }
    };
    let mut best = f64::INFINITY;
    for (x, y) in [(xl, yl), (xl, yh), (xh, yl), (xh, yh)] {
        if feasible(x, y) {
            best = best.min(phi(x, y));
        }
    }
    let (d0, d1) = (xl.max(yl), xh.min(yh));
    if d0 <= d1 {
        best = best.min(phi(d0, d0)).min(phi(d1, d1));
    }
    best
}

/// Ambiguous cursed value: both the opponent's type distribution and their
/// trade probability are evaluated at the worst CDF of the band.
pub fn value_ambiguous_cursed(q: &ValueQuery) -> Result<f64> {
    q.band.require_normalized()?;
    Ok(match q.action {
        Action::NoTrade => q.band.lower().eval(q.own_type),
        Action::Trade => ambiguous_trade(q.band, q.own_type, q.hat()),
    })
}

/// Dispatches to the functional of `concept` (using `concept`'s own `χ` for
/// [`Concept::Partial`]).
pub fn value(concept: Concept, q: &ValueQuery) -> Result<f64> {
    match concept {
        Concept::Rational => Ok(value_rational(q)),
        Concept::Cursed => Ok(value_cursed(q)),
        Concept::Partial(chi) => Ok(value_partial_cursed(&q.with_chi(chi)?)),
        Concept::MaxminRational => value_maxmin_rational(q),
        Concept::MaxminCursedUnderFstar => value_maxmin_cursed_under_fstar(q),
        Concept::AmbiguousCursed => value_ambiguous_cursed(q),
    }
}

/// `value(Trade) − value(NoTrade)`.
pub fn trade_gain(concept: Concept, band: &DistributionBand, t: f64, hat: f64) -> Result<f64> {
    let q = ValueQuery::new(band, t, Action::Trade, CutoffStrategy::new(hat)?)?;
    Ok(value(concept, &q)? - value(concept, &q.with_action(Action::NoTrade))?)
}
