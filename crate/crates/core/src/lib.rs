//! Extremal risk-adjusted performance of losing portfolios.
//!
//! A return sequence can lose money and still post an arbitrarily high
//! Sharpe ratio, provided some one-period return sits close to -100%.
//! This crate quantifies the effect: it computes the best Sharpe and
//! Sortino ratios achievable by sequences whose wealth product stays
//! below 1, when per-period returns are bounded below by -B (one-sided)
//! or confined to [-B, B] (two-sided).
//!
//! - [`metrics`] evaluates the ratios on concrete finite sequences.
//! - [`frontier`] computes the four frontier functions F1, F2, G1, G2
//!   through a two-level mixture reduction and a 1-D search.
//! - [`oracle`] cross-checks the frontier by exhaustive small-N search,
//!   discrete two-level optimization, and randomized sampling.
//! - [`anomaly`] reproduces the "high Sharpe while losing everything"
//!   demonstrations, deterministic and i.i.d.
//! - [`reference`] holds the published table values the frontier is
//!   verified against.
//!
//! Grid sweeps and enumerations run on rayon when the default
//! `parallel` feature is enabled; disabling it yields a sequential
//! build with identical outputs.

pub mod anomaly;
mod error;
mod exec;
pub mod frontier;
pub mod metrics;
pub mod oracle;
pub mod reference;
pub mod rng;
mod search;
mod sum;

pub use error::{Error, Result};
pub use frontier::{BoundKind, FrontierCurve, FrontierPoint, RatioKind, TwoLevelMix};
pub use metrics::{Convention, RatioReport, ReturnSeries};
