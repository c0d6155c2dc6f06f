//! Published reference values for the four frontier families.
//!
//! The tables live as checked-in data files under `data/` so that
//! regression tests diff the computation against the published numbers
//! rather than against the code's own earlier output. Tolerances for
//! the comparison are pinned here as well: the published values carry
//! three decimals, the gain levels two, and the optimum is flat in the
//! gain direction.

use crate::frontier::{BoundKind, RatioKind};

/// One row of a reference table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceRow {
    pub bound: f64,
    pub value: f64,
    /// Attaining gain level, where the source table prints one.
    pub c: Option<f64>,
    pub alpha: f64,
}

/// A reference table for one frontier family.
#[derive(Debug, Clone)]
pub struct ReferenceTable {
    pub label: &'static str,
    pub ratio_kind: RatioKind,
    pub bound_kind: BoundKind,
    pub rows: Vec<ReferenceRow>,
}

/// Comparison tolerances against a reference table.
#[derive(Debug, Clone, Copy)]
pub struct Tolerances {
    pub value: f64,
    pub alpha: f64,
    /// Gain tolerance for bounds at or below 0.9.
    pub c_low: f64,
    /// Gain tolerance for bounds at or above 0.99, where the printed
    /// values carry an extra digit.
    pub c_high: f64,
}

impl Tolerances {
    pub fn table() -> Self {
        Self {
            value: 0.002,
            alpha: 0.005,
            c_low: 0.1,
            c_high: 0.05,
        }
    }

    pub fn c_for_bound(&self, bound: f64) -> f64 {
        if bound >= 0.99 {
            self.c_high
        } else {
            self.c_low
        }
    }
}

fn parse(label: &'static str, ratio: RatioKind, bounds: BoundKind, text: &str) -> ReferenceTable {
    let mut rows = Vec::new();
    let mut lines = text.lines().filter(|l| !l.trim_start().starts_with('#'));
    let header = lines.next().expect("reference table has a header");
    let has_c = header.split(',').any(|h| h.trim() == "c");
    for line in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split(',').map(|f| {
            f.trim()
                .parse::<f64>()
                .unwrap_or_else(|_| panic!("bad reference field `{f}` in {label}"))
        });
        let bound = fields.next().expect("bound column");
        let value = fields.next().expect("value column");
        let c = has_c.then(|| fields.next().expect("c column"));
        let alpha = fields.next().expect("alpha column");
        rows.push(ReferenceRow {
            bound,
            value,
            c,
            alpha,
        });
    }
    ReferenceTable {
        label,
        ratio_kind: ratio,
        bound_kind: bounds,
        rows,
    }
}

/// One-sided Sharpe frontier reference (14 rows, B from 0.1 to
/// 0.999999).
pub fn f1() -> ReferenceTable {
    parse(
        "F1",
        RatioKind::Sharpe,
        BoundKind::OneSided,
        include_str!("../data/f1_reference.csv"),
    )
}

/// Two-sided Sharpe frontier reference (6 rows, B from 0.1 to 0.6).
pub fn f2() -> ReferenceTable {
    parse(
        "F2",
        RatioKind::Sharpe,
        BoundKind::TwoSided,
        include_str!("../data/f2_reference.csv"),
    )
}

/// One-sided Sortino frontier reference (6 rows).
pub fn g1() -> ReferenceTable {
    parse(
        "G1",
        RatioKind::Sortino,
        BoundKind::OneSided,
        include_str!("../data/g1_reference.csv"),
    )
}

/// Two-sided Sortino frontier reference (6 rows).
pub fn g2() -> ReferenceTable {
    parse(
        "G2",
        RatioKind::Sortino,
        BoundKind::TwoSided,
        include_str!("../data/g2_reference.csv"),
    )
}
