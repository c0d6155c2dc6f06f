//! Frontier of risk-adjusted performance for losing sequences.
//!
//! For a per-period loss bound B, the frontier is the supremum of the
//! Sharpe (or Sortino) ratio over all finite sequences whose wealth
//! multiple stays below 1, with returns in [-B, inf) (one-sided) or
//! [-B, B] (two-sided). The supremum is approached by sequences taking
//! only two values, a loss level -B and a gain level c, with the
//! losing constraint binding. In that limit the per-period log drift
//! vanishes,
//!
//! ```text
//! alpha * ln(1 + c) + (1 - alpha) * ln(1 - B) = 0,
//! ```
//!
//! which pins the gain fraction alpha for a given (B, c) and reduces
//! each frontier value to a 1-D maximization over the gain level. The
//! search runs in t = ln(1 + c), where the landscape stays well scaled
//! even for the enormous optimal gains of the one-sided Sortino case.
//!
//! The four families are named F1 (Sharpe, one-sided), F2 (Sharpe,
//! two-sided), G1 (Sortino, one-sided), and G2 (Sortino, two-sided).
//! For the two-sided families the maximum over c in (0, B] sits at
//! c = B; the `oracle` module and the test suite carry the numerical
//! evidence for that and for the two-level reduction itself.

use std::fmt;

use crate::error::{Error, Result};
use crate::exec::map_indexed;
use crate::search::{maximize_expanding, Maximum};

/// Which ratio a frontier or oracle computation targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatioKind {
    Sharpe,
    Sortino,
}

/// Whether returns are bounded only below (by -B) or on both sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    OneSided,
    TwoSided,
}

impl fmt::Display for RatioKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RatioKind::Sharpe => write!(f, "sharpe"),
            RatioKind::Sortino => write!(f, "sortino"),
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundKind::OneSided => write!(f, "one-sided"),
            BoundKind::TwoSided => write!(f, "two-sided"),
        }
    }
}

/// Conventional short label of a frontier family: F1, F2, G1 or G2.
pub fn family_label(ratio: RatioKind, bounds: BoundKind) -> &'static str {
    match (ratio, bounds) {
        (RatioKind::Sharpe, BoundKind::OneSided) => "F1",
        (RatioKind::Sharpe, BoundKind::TwoSided) => "F2",
        (RatioKind::Sortino, BoundKind::OneSided) => "G1",
        (RatioKind::Sortino, BoundKind::TwoSided) => "G2",
    }
}

/// Continuum two-level return distribution: a fraction `alpha` of
/// periods return `gain` (the level c > 0) and the rest return
/// `-bound`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoLevelMix {
    bound: f64,
    gain: f64,
    alpha: f64,
}

impl TwoLevelMix {
    pub fn new(bound: f64, gain: f64, alpha: f64) -> Result<Self> {
        if !(bound > 0.0 && bound < 1.0) {
            return Err(Error::BoundOutOfRange(bound));
        }
        if !(gain > 0.0) || !gain.is_finite() {
            return Err(Error::GainNotPositive(gain));
        }
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::FractionOutOfRange(alpha));
        }
        Ok(Self { bound, gain, alpha })
    }

    /// Like [`TwoLevelMix::new`] but additionally enforces the
    /// two-sided cap `gain <= bound`.
    pub fn new_two_sided(bound: f64, gain: f64, alpha: f64) -> Result<Self> {
        let mix = Self::new(bound, gain, alpha)?;
        if gain > bound {
            return Err(Error::GainAboveBound { gain, bound });
        }
        Ok(mix)
    }

    pub fn bound(&self) -> f64 {
        self.bound
    }

    pub fn gain(&self) -> f64 {
        self.gain
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
}

/// Limiting mean, volatility and downside deviation of a two-level mix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixMoments {
    pub mean: f64,
    pub volatility: f64,
    pub downside_deviation: f64,
}

/// Moments of the two-level distribution, i.e. the large-N limits of
/// the sample statistics of a sequence with a fraction `alpha` of
/// returns at `gain` and the rest at `-bound`:
///
/// ```text
/// mean = alpha*c - (1-alpha)*B
/// vol  = sqrt(alpha*(1-alpha)) * (c + B)
/// down = alpha*sqrt(1-alpha) * (c + B)
/// ```
///
/// The downside form holds because the only below-mean level is -B
/// whenever 0 < alpha < 1.
pub fn mix_moments(mix: &TwoLevelMix) -> MixMoments {
    let TwoLevelMix { bound, gain, alpha } = *mix;
    let spread = gain + bound;
    let one_minus = 1.0 - alpha;
    MixMoments {
        mean: alpha * gain - one_minus * bound,
        volatility: (alpha * one_minus).sqrt() * spread,
        downside_deviation: alpha * one_minus.sqrt() * spread,
    }
}

/// The gain fraction at which the losing constraint binds:
/// `alpha = ln(1/(1-B)) / ln((1+c)/(1-B))`, the unique alpha with zero
/// per-period log-wealth drift.
pub fn binding_alpha(bound: f64, gain: f64) -> Result<f64> {
    if !(bound > 0.0 && bound < 1.0) {
        return Err(Error::BoundOutOfRange(bound));
    }
    if !(gain > 0.0) || !gain.is_finite() {
        return Err(Error::GainNotPositive(gain));
    }
    let loss_log = -(-bound).ln_1p(); // ln(1/(1-B)) > 0
    let gain_log = gain.ln_1p();
    Ok(loss_log / (gain_log + loss_log))
}

/// Sharpe or Sortino ratio of a two-level mix.
///
/// Both ratios share the numerator `alpha - B/(c+B)`; the Sortino
/// denominator replaces sqrt(alpha) by alpha, so Sortino equals
/// Sharpe / sqrt(alpha). Always finite: the mix invariants keep both
/// deviations positive.
pub fn ratio_of_mix(mix: &TwoLevelMix, ratio: RatioKind) -> f64 {
    let TwoLevelMix { bound, gain, alpha } = *mix;
    ratio_from_parts(bound, gain, alpha, 1.0 - alpha, ratio)
}

fn ratio_from_parts(bound: f64, gain: f64, alpha: f64, one_minus: f64, ratio: RatioKind) -> f64 {
    let centered = alpha - bound / (gain + bound);
    match ratio {
        RatioKind::Sharpe => centered / (alpha * one_minus).sqrt(),
        RatioKind::Sortino => centered / (alpha * one_minus.sqrt()),
    }
}

/// One frontier evaluation: the supremum `value` at a given bound,
/// together with the gain level and fraction attaining it.
///
/// `value` is the tightly converged quantity; `c_star` and
/// `alpha_star` sit on a flat optimum and carry looser accuracy. For
/// two-sided families `c_star` equals the bound exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrontierPoint {
    pub bound: f64,
    pub ratio_kind: RatioKind,
    pub bound_kind: BoundKind,
    pub value: f64,
    pub c_star: f64,
    pub alpha_star: f64,
}

/// Tuning knobs of the 1-D search over t = ln(1 + c).
#[derive(Debug, Clone, Copy)]
pub(crate) struct SearchOpts {
    pub(crate) t_hi_initial: f64,
    pub(crate) t_hi_max: f64,
    pub(crate) coarse_points: usize,
    pub(crate) rel_tol: f64,
}

impl Default for SearchOpts {
    fn default() -> Self {
        Self {
            t_hi_initial: 10f64.ln_1p(),
            t_hi_max: 1e12f64.ln_1p(),
            coarse_points: 64,
            rel_tol: 1e-12,
        }
    }
}

/// Frontier value F1/F2/G1/G2 at a single bound.
///
/// One-sided requests with B >= 1 fail with [`Error::Divergent`]: once
/// total loss is allowed, losing sequences reach any ratio.
pub fn frontier_value(bound: f64, ratio: RatioKind, bounds: BoundKind) -> Result<FrontierPoint> {
    frontier_value_tuned(bound, ratio, bounds, &SearchOpts::default())
}

pub(crate) fn frontier_value_tuned(
    bound: f64,
    ratio: RatioKind,
    bounds: BoundKind,
    opts: &SearchOpts,
) -> Result<FrontierPoint> {
    if !(bound > 0.0) || !bound.is_finite() {
        return Err(Error::BoundOutOfRange(bound));
    }
    if bound >= 1.0 {
        return match bounds {
            BoundKind::OneSided => Err(Error::Divergent(bound)),
            BoundKind::TwoSided => Err(Error::BoundOutOfRange(bound)),
        };
    }
    let loss_log = -(-bound).ln_1p();
    let objective = |t: f64| {
        let alpha = loss_log / (t + loss_log);
        let one_minus = t / (t + loss_log);
        ratio_from_parts(bound, t.exp_m1(), alpha, one_minus, ratio)
    };
    let (t_star, value) = match bounds {
        BoundKind::OneSided => {
            let Maximum { x, value } = maximize_expanding(
                objective,
                1e-6f64.ln_1p(),
                opts.t_hi_initial,
                opts.t_hi_max,
                opts.coarse_points,
                opts.rel_tol,
            );
            (x, value)
        }
        BoundKind::TwoSided => {
            let t = bound.ln_1p();
            (t, objective(t))
        }
    };
    let c_star = match bounds {
        BoundKind::OneSided => t_star.exp_m1(),
        BoundKind::TwoSided => bound,
    };
    Ok(FrontierPoint {
        bound,
        ratio_kind: ratio,
        bound_kind: bounds,
        value,
        c_star,
        alpha_star: loss_log / (t_star + loss_log),
    })
}

/// Grid metadata for a frontier sweep: `points` evenly spaced bounds
/// from `start` to `end`, both inclusive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub start: f64,
    pub end: f64,
    pub points: usize,
}

impl GridSpec {
    pub fn values(&self) -> Vec<f64> {
        if self.points == 1 {
            return vec![self.start];
        }
        let step = (self.end - self.start) / (self.points - 1) as f64;
        (0..self.points)
            .map(|i| {
                if i + 1 == self.points {
                    self.end
                } else {
                    self.start + step * i as f64
                }
            })
            .collect()
    }
}

/// A frontier family sampled over a bound grid.
#[derive(Debug, Clone, PartialEq)]
pub struct FrontierCurve {
    pub grid: GridSpec,
    pub ratio_kind: RatioKind,
    pub bound_kind: BoundKind,
    pub points: Vec<FrontierPoint>,
}

/// Samples a frontier family on a linear grid of bounds.
///
/// Grid points are evaluated in parallel when the `parallel` feature
/// is on; ordering and values do not depend on the thread count. A
/// single-point grid (`points == 1`) requires `from == to`.
pub fn frontier_curve(
    from: f64,
    to: f64,
    points: usize,
    ratio: RatioKind,
    bounds: BoundKind,
) -> Result<FrontierCurve> {
    if points == 0 {
        return Err(Error::InvalidGrid("need at least one grid point".into()));
    }
    if points == 1 && from != to {
        return Err(Error::InvalidGrid(
            "a single-point grid needs equal endpoints".into(),
        ));
    }
    if points > 1 && !(from < to) {
        return Err(Error::InvalidGrid(format!(
            "grid start {from} must be below grid end {to}"
        )));
    }
    let grid = GridSpec {
        start: from,
        end: to,
        points,
    };
    let bs = grid.values();
    let results = map_indexed(bs.len(), |i| frontier_value(bs[i], ratio, bounds));
    let mut curve_points = Vec::with_capacity(results.len());
    for r in results {
        curve_points.push(r?);
    }
    Ok(FrontierCurve {
        grid,
        ratio_kind: ratio,
        bound_kind: bounds,
        points: curve_points,
    })
}
