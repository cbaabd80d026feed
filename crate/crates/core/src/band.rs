//! CDF curves on `[0, 1]` and distribution bands `(F_l, F*, F_h)`.
//!
//! A band describes the ambiguity set of all continuous CDFs squeezed between
//! a lower envelope `F_l` and an upper envelope `F_h`, around a reference
//! distribution `F*`. Most of the crate works with *normalized* bands, where
//! `F*` is the identity and types are quantiles; [`DistributionBand::normalize`]
//! performs that change of variables.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{unit, Error, Result};
use crate::roots;

/// Number of points in the validation grid (`i / (GRID - 1)`).
pub const VALIDATION_GRID: usize = 1025;
/// Knots used when a composition has to be tabulated.
pub const COMPOSE_KNOTS: usize = 2049;
const ORDER_TOL: f64 = 1e-10;
const SYMMETRY_TOL: f64 = 1e-9;

/// Which side of a band a curve bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Envelope {
    Lower,
    Upper,
}

impl Envelope {
    pub fn flip(self) -> Self {
        match self {
            Envelope::Lower => Envelope::Upper,
            Envelope::Upper => Envelope::Lower,
        }
    }
}

/// The three one-parameter band families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `κ`-contamination of the uniform distribution, `κ ∈ [0, 1)`.
    Contamination,
    /// Triangle band with slope ratio `a ∈ [1, ∞)`.
    Triangle,
    /// Horizontal `ε`-band, `ε ∈ [0, ½)`.
    Epsilon,
}

impl Family {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "contamination" | "kappa" => Ok(Family::Contamination),
            "triangle" | "a" => Ok(Family::Triangle),
            "epsilon" | "eps" => Ok(Family::Epsilon),
            other => Err(Error::Parameter(format!("unknown band family `{other}`"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Contamination => "contamination",
            Family::Triangle => "triangle",
            Family::Epsilon => "epsilon",
        }
    }

    /// Checks the admissible parameter range of the family.
    pub fn check_param(self, p: f64) -> Result<f64> {
        let ok = match self {
            Family::Contamination => (0.0..1.0).contains(&p),
            Family::Triangle => p >= 1.0 && p.is_finite(),
            Family::Epsilon => (0.0..0.5).contains(&p),
        };
        if ok {
            Ok(p)
        } else {
            let range = match self {
                Family::Contamination => "[0, 1)",
                Family::Triangle => "[1, inf)",
                Family::Epsilon => "[0, 0.5)",
            };
            Err(Error::Parameter(format!("{} parameter {p} outside {range}", self.name())))
        }
    }
}

/// Hand-built bands defined by a formula on `[½, 1]` and mirrored below `½`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    /// Quadratic upper envelope with a sine-perturbed lower envelope; its
    /// cursed Knight-Nash equation has two asymmetric solutions besides the
    /// symmetric one.
    SineWave,
    /// Linear lower envelope with a tenth-root upper envelope.
    SteepRoot,
}

impl Construction {
    pub fn name(self) -> &'static str {
        match self {
            Construction::SineWave => "sine-wave",
            Construction::SteepRoot => "steep-root",
        }
    }

    /// Sine perturbation shared by both envelopes of [`Construction::SineWave`].
    pub fn sine_g(t: f64) -> f64 {
        let s = (4.0 * std::f64::consts::PI * t).sin() / 16.0 + t - 0.5;
        1.0 - 4.0 * s * s
    }

    fn upper_half(self, side: Envelope, t: f64) -> f64 {
        match (self, side) {
            (Construction::SineWave, Envelope::Upper) => 0.8 * (t - 0.5).powi(2) + 0.8,
            (Construction::SineWave, Envelope::Lower) => {
                let h = 0.8 * (t - 0.5).powi(2) + 0.8;
                (1.0 - 2.0 * h) * Self::sine_g(t) + h
            }
            (Construction::SteepRoot, Envelope::Upper) => {
                17.0 / 40.0 * (2.0 * t - 1.0).max(0.0).powf(0.1) + 23.0 / 40.0
            }
            (Construction::SteepRoot, Envelope::Lower) => 23.0 / 20.0 * t - 3.0 / 20.0,
        }
    }

    fn eval(self, side: Envelope, t: f64) -> f64 {
        if t >= 0.5 {
            self.upper_half(side, t)
        } else {
            1.0 - self.upper_half(side.flip(), 1.0 - t)
        }
    }
}

/// Monotone piecewise-linear curve through ordered knots.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseLinear {
    xs: Vec<f64>,
    ys: Vec<f64>,
}

impl PiecewiseLinear {
    /// Builds a curve from knots with strictly increasing `x` and weakly
    /// increasing `y`, all inside the unit square. Outside the knot range the
    /// curve is extended by constants.
    pub fn new(knots: &[(f64, f64)]) -> Result<Self> {
        if knots.len() < 2 {
            return Err(Error::Validation("need at least two knots".into()));
        }
        for (i, &(x, y)) in knots.iter().enumerate() {
            unit("knot x", x)?;
            unit("knot y", y)?;
            if i > 0 {
                let (px, py) = knots[i - 1];
                if x <= px {
                    return Err(Error::Validation(format!("knot x not increasing at {x}")));
                }
                if y < py {
                    return Err(Error::Validation(format!("knot y decreasing at x = {x}")));
                }
            }
        }
        Ok(Self { xs: knots.iter().map(|k| k.0).collect(), ys: knots.iter().map(|k| k.1).collect() })
    }

    /// Tabulates `f` on `n` equally spaced knots, enforcing monotonicity with a
    /// running maximum and clamping into `[0, 1]`.
    pub fn tabulate<F: Fn(f64) -> f64>(f: F, n: usize) -> Self {
        let n = n.max(2);
        let xs: Vec<f64> = (0..n).map(|i| i as f64 / (n - 1) as f64).collect();
        let mut ys = Vec::with_capacity(n);
        let mut run = 0.0f64;
        for &x in &xs {
            run = run.max(f(x).clamp(0.0, 1.0));
            ys.push(run);
        }
        Self { xs, ys }
    }

    pub fn knots(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.xs.iter().copied().zip(self.ys.iter().copied())
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    fn eval(&self, t: f64) -> f64 {
        let n = self.xs.len();
        if t <= self.xs[0] {
            return self.ys[0];
        }
        if t >= self.xs[n - 1] {
            return self.ys[n - 1];
        }
        let i = self.xs.partition_point(|&x| x <= t);
        let (x0, x1, y0, y1) = (self.xs[i - 1], self.xs[i], self.ys[i - 1], self.ys[i]);
        y0 + (y1 - y0) * (t - x0) / (x1 - x0)
    }

    fn inverse(&self, p: f64) -> f64 {
        let i = self.ys.partition_point(|&y| y < p);
        if i == 0 {
            return 0.0;
        }
        if i == self.ys.len() {
            return 1.0;
        }
        let (x0, x1, y0, y1) = (self.xs[i - 1], self.xs[i], self.ys[i - 1], self.ys[i]);
        x0 + (x1 - x0) * (p - y0) / (y1 - y0)
    }

    fn strictly_increasing(&self) -> bool {
        self.ys.windows(2).all(|w| w[1] > w[0])
    }

    fn is_identity(&self) -> bool {
        self.knots().all(|(x, y)| x == y) && self.xs[0] == 0.0 && self.xs[self.len() - 1] == 1.0
    }
}

/// A weakly increasing CDF on `[0, 1]` with a generalized inverse.
#[derive(Debug, Clone, PartialEq)]
pub enum CdfCurve {
    /// The uniform CDF `F(θ) = θ`.
    Identity,
    Contamination {
        kappa: f64,
        side: Envelope,
    },
    Triangle {
        a: f64,
        side: Envelope,
    },
    /// `F_l(θ) = max(θ − ε, 0)` for `θ < 1` with `F_l(1) = 1` (right-continuous
    /// at the jump), and `F_h(θ) = min(θ + ε, 1)`.
    Epsilon {
        eps: f64,
        side: Envelope,
    },
    /// `F(θ) = θ^p`.
    Power(f64),
    Constructed {
        construction: Construction,
        side: Envelope,
    },
    PiecewiseLinear(PiecewiseLinear),
}

impl CdfCurve {
    pub fn family(family: Family, param: f64, side: Envelope) -> Result<Self> {
        let p = family.check_param(param)?;
        Ok(match family {
            Family::Contamination => CdfCurve::Contamination { kappa: p, side },
            Family::Triangle => CdfCurve::Triangle { a: p, side },
            Family::Epsilon => CdfCurve::Epsilon { eps: p, side },
        })
    }

    /// Curve through the given knots; the diagonal `[(0,0), (1,1)]` is
    /// recognised as the identity.
    pub fn from_knots(knots: &[(f64, f64)]) -> Result<Self> {
        let pl = PiecewiseLinear::new(knots)?;
        if pl.is_identity() {
            Ok(CdfCurve::Identity)
        } else {
            Ok(CdfCurve::PiecewiseLinear(pl))
        }
    }

    /// Checked evaluation.
    pub fn evaluate(&self, t: f64) -> Result<f64> {
        Ok(self.eval(unit("theta", t)?))
    }

    /// Checked generalized inverse `inf { θ : F(θ) ≥ p }`.
    pub fn inverse(&self, p: f64) -> Result<f64> {
        Ok(self.inv(unit("p", p)?))
    }

    /// Evaluates `F(θ)`; arguments outside `[0, 1]` are clamped.
    pub fn eval(&self, t: f64) -> f64 {
        let t = t.clamp(0.0, 1.0);
        let y = match *self {
            CdfCurve::Identity => t,
            CdfCurve::Contamination { kappa: k, side } => match side {
                Envelope::Lower if t <= 0.5 => (1.0 - k) * t,
                Envelope::Lower => 1.0 - (1.0 + k) * (1.0 - t),
                Envelope::Upper if t <= 0.5 => (1.0 + k) * t,
                Envelope::Upper => 1.0 - (1.0 - k) * (1.0 - t),
            },
            CdfCurve::Triangle { a, side } => match side {
                Envelope::Lower if t <= a / (a + 1.0) => t / a,
                Envelope::Lower => 1.0 - a * (1.0 - t),
                Envelope::Upper if t <= 1.0 / (a + 1.0) => a * t,
                Envelope::Upper => 1.0 - (1.0 - t) / a,
            },
            CdfCurve::Epsilon { eps, side } => match side {
                Envelope::Lower if t >= 1.0 => 1.0,
                Envelope::Lower => (t - eps).max(0.0),
                Envelope::Upper => (t + eps).min(1.0),
            },
            CdfCurve::Power(p) => t.powf(p),
            CdfCurve::Constructed { construction, side } => construction.eval(side, t),
            CdfCurve::PiecewiseLinear(ref pl) => pl.eval(t),
        };
        y.clamp(0.0, 1.0)
    }

    /// Left limit `F(θ−)`. Differs from [`CdfCurve::eval`] only at the jump of
    /// the lower `ε`-envelope at `θ = 1`.
    pub fn eval_left(&self, t: f64) -> f64 {
        match *self {
            CdfCurve::Epsilon { eps, side: Envelope::Lower } if t >= 1.0 => 1.0 - eps,
            _ => self.eval(t),
        }
    }

    /// Generalized inverse `inf { θ : F(θ) ≥ p }`; `p` is clamped to `[0, 1]`.
    pub fn inv(&self, p: f64) -> f64 {
        let p = p.clamp(0.0, 1.0);
        match *self {
            CdfCurve::Identity => p,
            CdfCurve::Contamination { kappa: k, side } => match side {
                Envelope::Lower if p <= 0.5 * (1.0 - k) => p / (1.0 - k),
                Envelope::Lower => (p + k) / (1.0 + k),
                Envelope::Upper if p <= 0.5 * (1.0 + k) => p / (1.0 + k),
                Envelope::Upper => (p - k) / (1.0 - k),
            },
            CdfCurve::Triangle { a, side } => match side {
                Envelope::Lower if p <= 1.0 / (a + 1.0) => a * p,
                Envelope::Lower => (p - 1.0 + a) / a,
                Envelope::Upper if p <= a / (a + 1.0) => p / a,
                Envelope::Upper => a * p - a + 1.0,
            },
            CdfCurve::Epsilon { eps, side } => match side {
                Envelope::Lower if p == 0.0 => 0.0,
                Envelope::Lower if p <= 1.0 - eps => p + eps,
                Envelope::Lower => 1.0,
                Envelope::Upper if p <= eps => 0.0,
                Envelope::Upper => p - eps,
            },
            CdfCurve::Power(e) => p.powf(1.0 / e),
            CdfCurve::PiecewiseLinear(ref pl) => pl.inverse(p),
            CdfCurve::Constructed { .. } => roots::lower_quantile(|t| self.eval(t), p, 0.0, 1.0),
        }
    }

    /// Whether the curve is strictly increasing on `[0, 1]`.
    pub fn is_strictly_increasing(&self) -> bool {
        match *self {
            CdfCurve::Identity | CdfCurve::Triangle { .. } | CdfCurve::Constructed { .. } => true,
            CdfCurve::Contamination { kappa, .. } => kappa < 1.0,
            CdfCurve::Epsilon { eps, .. } => eps == 0.0,
            CdfCurve::Power(p) => p > 0.0,
            CdfCurve::PiecewiseLinear(ref pl) => pl.strictly_increasing(),
        }
    }

    pub fn is_identity(&self) -> bool {
        match *self {
            CdfCurve::Identity => true,
            CdfCurve::Contamination { kappa, .. } => kappa == 0.0,
            CdfCurve::Triangle { a, .. } => a == 1.0,
            CdfCurve::Epsilon { eps, .. } => eps == 0.0,
            CdfCurve::Power(p) => p == 1.0,
            CdfCurve::Constructed { .. } => false,
            CdfCurve::PiecewiseLinear(ref pl) => pl.is_identity(),
        }
    }

    /// `F ∘ G⁻¹`, exact where a closed form exists and tabulated otherwise.
    pub fn compose_inverse(&self, g: &CdfCurve) -> CdfCurve {
        if g.is_identity() {
            return self.clone();
        }
        if self == g {
            return CdfCurve::Identity;
        }
        if let (CdfCurve::Power(a), CdfCurve::Power(b)) = (self, g) {
            return CdfCurve::Power(a / b);
        }
        CdfCurve::PiecewiseLinear(PiecewiseLinear::tabulate(|p| self.eval(g.inv(p)), COMPOSE_KNOTS))
    }
}

impl fmt::Display for CdfCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |s: &Envelope| match s {
            Envelope::Lower => "lower",
            Envelope::Upper => "upper",
        };
        match self {
            CdfCurve::Identity => write!(f, "identity"),
            CdfCurve::Contamination { kappa, side: s } => {
                write!(f, "contamination-{}(kappa={kappa})", side(s))
            }
            CdfCurve::Triangle { a, side: s } => write!(f, "triangle-{}(a={a})", side(s)),
            CdfCurve::Epsilon { eps, side: s } => write!(f, "epsilon-{}(eps={eps})", side(s)),
            CdfCurve::Power(p) => write!(f, "power({p})"),
            CdfCurve::Constructed { construction, side: s } => {
                write!(f, "{construction:?}-{}", side(s))
            }
            CdfCurve::PiecewiseLinear(pl) => write!(f, "piecewise-linear({} knots)", pl.len()),
        }
    }
}

/// Lower envelope, reference CDF and upper envelope of an ambiguity set.
#[derive(Debug, Clone, PartialEq)]
pub struct DistributionBand {
    lower: CdfCurve,
    center: CdfCurve,
    upper: CdfCurve,
    normalized: bool,
    label: String,
}

fn grid(n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| i as f64 / (n - 1) as f64)
}

impl DistributionBand {
    /// Builds a band after checking `F_l ≤ F* ≤ F_h` on the validation grid.
    pub fn new(lower: CdfCurve, center: CdfCurve, upper: CdfCurve) -> Result<Self> {
        let label = format!("band[{lower} | {center} | {upper}]");
        Self::with_label(lower, center, upper, label)
    }

    fn with_label(lower: CdfCurve, center: CdfCurve, upper: CdfCurve, label: String) -> Result<Self> {
        for t in grid(VALIDATION_GRID) {
            let (l, c, h) = (lower.eval(t), center.eval(t), upper.eval(t));
            if l > c + ORDER_TOL || c > h + ORDER_TOL {
                return Err(Error::Validation(format!(
                    "ordering F_l <= F* <= F_h fails at theta = {t}: ({l}, {c}, {h})"
                )));
            }
        }
        let normalized = center.is_identity();
        let center = if normalized { CdfCurve::Identity } else { center };
        Ok(Self { lower, center, upper, normalized, label })
    }

    /// Band without ambiguity around the uniform distribution.
    pub fn uniform() -> Self {
        Self {
            lower: CdfCurve::Identity,
            center: CdfCurve::Identity,
            upper: CdfCurve::Identity,
            normalized: true,
            label: "uniform".into(),
        }
    }

    /// Band without ambiguity around an arbitrary reference CDF.
    pub fn certain(center: CdfCurve) -> Self {
        let normalized = center.is_identity();
        Self { label: format!("certain({center})"), lower: center.clone(), upper: center.clone(), center, normalized }
    }

    /// Normalized band of one of the parametric families.
    pub fn parametrized(family: Family, param: f64) -> Result<Self> {
        let lower = CdfCurve::family(family, param, Envelope::Lower)?;
        let upper = CdfCurve::family(family, param, Envelope::Upper)?;
        let label = format!("{}({param})", family.name());
        Self::with_label(lower, CdfCurve::Identity, upper, label)
    }

    pub fn contamination(kappa: f64) -> Result<Self> {
        Self::parametrized(Family::Contamination, kappa)
    }

    pub fn triangle(a: f64) -> Result<Self> {
        Self::parametrized(Family::Triangle, a)
    }

    pub fn epsilon(eps: f64) -> Result<Self> {
        Self::parametrized(Family::Epsilon, eps)
    }

    /// Band built from a mirrored construction.
    pub fn constructed(construction: Construction) -> Self {
        let curve = |side| CdfCurve::Constructed { construction, side };
        Self {
            lower: curve(Envelope::Lower),
            center: CdfCurve::Identity,
            upper: curve(Envelope::Upper),
            normalized: true,
            label: construction.name().into(),
        }
    }

    /// The sine-wave band with three cursed Knight-Nash profiles.
    pub fn sine_wave() -> Self {
        Self::constructed(Construction::SineWave)
    }

    /// The tenth-root band, which strictly encloses [`Self::kinked_linear`].
    pub fn steep_root() -> Self {
        Self::constructed(Construction::SteepRoot)
    }

    /// `F_l = 1.1θ − 0.1`, `F_h = 0.9θ + 0.1` on `[½, 1]`, mirrored below.
    pub fn kinked_linear() -> Self {
        let lower = PiecewiseLinear::new(&[(0.0, 0.0), (0.5, 0.45), (1.0, 1.0)]).unwrap();
        let upper = PiecewiseLinear::new(&[(0.0, 0.0), (0.5, 0.55), (1.0, 1.0)]).unwrap();
        Self {
            lower: CdfCurve::PiecewiseLinear(lower),
            center: CdfCurve::Identity,
            upper: CdfCurve::PiecewiseLinear(upper),
            normalized: true,
            label: "kinked-linear".into(),
        }
    }

    pub fn lower(&self) -> &CdfCurve {
        &self.lower
    }

    pub fn center(&self) -> &CdfCurve {
        &self.center
    }

    pub fn upper(&self) -> &CdfCurve {
        &self.upper
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    /// Human-readable description used in logs and reports.
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn require_normalized(&self) -> Result<()> {
        if self.normalized {
            Ok(())
        } else {
            Err(Error::NotNormalized)
        }
    }

    /// `F_l⁻¹(½)`, the right end of the interval where equilibrium thresholds live.
    pub fn lower_median(&self) -> f64 {
        self.lower.inv(0.5)
    }

    /// `F_h⁻¹(½)`.
    pub fn upper_median(&self) -> f64 {
        self.upper.inv(0.5)
    }

    /// True when every member of the band has the same median.
    pub fn has_certain_median(&self) -> bool {
        (self.lower_median() - self.upper_median()).abs() < 1e-12
    }

    /// Whether either envelope belongs to the `ε` family (which is allowed to
    /// be flat near the ends).
    pub fn is_epsilon_family(&self) -> bool {
        matches!(self.lower, CdfCurve::Epsilon { .. }) || matches!(self.upper, CdfCurve::Epsilon { .. })
    }

    /// Maximum violation of `F_l(1 − θ) = 1 − F_h(θ)` over the interior grid.
    pub fn symmetry_defect(&self) -> f64 {
        grid(VALIDATION_GRID)
            .filter(|&t| t > 0.0 && t < 1.0)
            .map(|t| (self.lower.eval(1.0 - t) - (1.0 - self.upper.eval(t))).abs())
            .fold(0.0, f64::max)
    }

    /// Checks symmetry around the identity and strict monotonicity of the
    /// envelopes (waived for the `ε` family).
    pub fn check_assumption(&self) -> Result<()> {
        self.require_normalized()?;
        let defect = self.symmetry_defect();
        if defect > SYMMETRY_TOL {
            return Err(Error::Validation(format!("envelopes not symmetric (defect {defect:e})")));
        }
        if !self.is_epsilon_family() {
            let strict = |c: &CdfCurve| {
                c.is_strictly_increasing()
                    && grid(VALIDATION_GRID).collect::<Vec<_>>().windows(2).all(|w| c.eval(w[1]) > c.eval(w[0]))
            };
            if !strict(&self.lower) || !strict(&self.upper) {
                return Err(Error::Validation("envelopes must be strictly increasing".into()));
            }
        }
        Ok(())
    }

    /// Quantile normalization: replaces `(F_l, F*, F_h)` with
    /// `(F_l ∘ F*⁻¹, Id, F_h ∘ F*⁻¹)`.
    pub fn normalize(&self) -> Result<Self> {
        if self.normalized {
            return Ok(self.clone());
        }
        let lower = self.lower.compose_inverse(&self.center);
        let upper = self.upper.compose_inverse(&self.center);
        let label = format!("normalized({})", self.label);
        Self::with_label(lower, CdfCurve::Identity, upper, label)
    }

    /// Checks that `other` strictly encloses `self` on the interior of the
    /// validation grid: `G_l < F_l` and `G_h > F_h`.
    pub fn strictly_enclosed_by(&self, other: &DistributionBand) -> Result<()> {
        for t in grid(VALIDATION_GRID).filter(|&t| t > 0.0 && t < 1.0) {
            if other.lower.eval(t) >= self.lower.eval(t) || other.upper.eval(t) <= self.upper.eval(t) {
                return Err(Error::Enclosure(format!("at theta = {t}")));
            }
        }
        Ok(())
    }
}

/// JSON description of a band.
///
/// Either `{"family": "contamination", "param": 0.75}` or
/// `{"custom": {"lower": [[x, y], ...], "center": [...], "upper": [...]}}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BandSpec {
    Family {
        family: String,
        #[serde(default)]
        param: Option<f64>,
    },
    Custom {
        custom: CustomKnots,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CustomKnots {
    pub lower: Vec<[f64; 2]>,
    pub center: Vec<[f64; 2]>,
    pub upper: Vec<[f64; 2]>,
}

impl BandSpec {
    /// Builds the band; custom bands are validated but not normalized.
    pub fn build(&self) -> Result<DistributionBand> {
        match self {
            BandSpec::Family { family, param } => {
                let need = || param.ok_or_else(|| Error::Parameter(format!("family `{family}` needs a param")));
                match family.as_str() {
                    "uniform" => Ok(DistributionBand::uniform()),
                    "sine-wave" => Ok(DistributionBand::sine_wave()),
                    "steep-root" => Ok(DistributionBand::steep_root()),
                    "kinked-linear" => Ok(DistributionBand::kinked_linear()),
                    name => DistributionBand::parametrized(Family::parse(name)?, need()?),
                }
            }
            BandSpec::Custom { custom } => {
                let curve =
                    |k: &Vec<[f64; 2]>| CdfCurve::from_knots(&k.iter().map(|p| (p[0], p[1])).collect::<Vec<_>>());
                DistributionBand::new(curve(&custom.lower)?, curve(&custom.center)?, curve(&custom.upper)?)
            }
        }
    }
}
