//! Ratio statistics on concrete finite return sequences.
//!
//! A series of per-period simple returns is summarized by its mean,
//! volatility, downside deviation, Sharpe ratio (mean over volatility),
//! Sortino ratio (mean over downside deviation), and wealth multiple
//! (the product of the gross returns). The benchmark return is zero
//! throughout.

use std::io::Read;
use std::path::Path;

use crate::error::{Error, Result};
use crate::sum::CompensatedSum;

/// Divisor convention for the deviation statistics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Convention {
    /// Divide squared deviations by N.
    #[default]
    Population,
    /// Divide squared deviations by N - 1.
    Sample,
}

impl Convention {
    fn divisor(self, n: usize) -> f64 {
        match self {
            Convention::Population => n as f64,
            Convention::Sample => (n - 1) as f64,
        }
    }
}

/// A finite, ordered sequence of per-period simple returns.
///
/// Every element lies in [-1, inf): -1 is a total loss, 0.05 is a 5%
/// gain. Construction validates the floor, so downstream statistics
/// never see an impossible return.
#[derive(Debug, Clone, PartialEq)]
pub struct ReturnSeries {
    returns: Vec<f64>,
}

impl ReturnSeries {
    pub fn new(returns: Vec<f64>) -> Result<Self> {
        if returns.is_empty() {
            return Err(Error::EmptySeries);
        }
        for (index, &value) in returns.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFiniteReturn { index });
            }
            if value < -1.0 {
                return Err(Error::ReturnBelowFloor { index, value });
            }
        }
        Ok(Self { returns })
    }

    /// Reads a single-column CSV with header `return`, one decimal
    /// value per row, UTF-8, LF or CRLF line endings.
    pub fn from_csv_reader<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(true)
            .trim(csv::Trim::All)
            .from_reader(reader);
        let headers = rdr.headers().map_err(|e| Error::Csv(e.to_string()))?;
        if headers.len() != 1 || headers.get(0) != Some("return") {
            return Err(Error::Csv(format!(
                "expected a single `return` column, found header {:?}",
                headers.iter().collect::<Vec<_>>()
            )));
        }
        let mut returns = Vec::new();
        for (i, record) in rdr.records().enumerate() {
            let record = record.map_err(|e| Error::Csv(e.to_string()))?;
            let field = record.get(0).unwrap_or("");
            let value: f64 = field
                .parse()
                .map_err(|_| Error::Csv(format!("row {}: `{}` is not a number", i + 2, field)))?;
            if !value.is_finite() {
                return Err(Error::Csv(format!("row {}: `{}` is not finite", i + 2, field)));
            }
            returns.push(value);
        }
        Self::new(returns)
    }

    pub fn from_csv_path(path: &Path) -> Result<Self> {
        let file = std::fs::File::open(path)
            .map_err(|e| Error::Csv(format!("{}: {}", path.display(), e)))?;
        Self::from_csv_reader(file)
    }

    pub fn returns(&self) -> &[f64] {
        &self.returns
    }

    pub fn len(&self) -> usize {
        self.returns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.returns.is_empty()
    }

    /// Final capital per unit invested: the product of (1 + x_n).
    ///
    /// Exactly zero whenever some return is -1.
    pub fn wealth_multiple(&self) -> f64 {
        self.returns.iter().fold(1.0, |w, x| w * (1.0 + x))
    }

    /// True when the sequence loses money: wealth multiple strictly
    /// below 1.
    pub fn losing(&self) -> bool {
        self.wealth_multiple() < 1.0
    }

    /// Full ratio report under the population (1/N) convention.
    pub fn analyze(&self) -> Result<RatioReport> {
        self.analyze_with(Convention::Population)
    }

    /// Full ratio report under an explicit divisor convention.
    pub fn analyze_with(&self, convention: Convention) -> Result<RatioReport> {
        let n = self.returns.len();
        if n < 2 {
            return Err(Error::DegenerateSeries(n));
        }
        // A constant series has zero deviations exactly; computing them
        // through the rounded mean would leave ulp-level residue and a
        // spurious ratio.
        if self.returns.iter().all(|&x| x == self.returns[0]) {
            return Ok(RatioReport {
                mean: self.returns[0],
                volatility: 0.0,
                downside_deviation: 0.0,
                sharpe: None,
                sortino: None,
                wealth_multiple: self.wealth_multiple(),
            });
        }
        let mut sum = CompensatedSum::new();
        for &x in &self.returns {
            sum.add(x);
        }
        let mean = sum.value() / n as f64;

        let mut sq = CompensatedSum::new();
        let mut down_sq = CompensatedSum::new();
        for &x in &self.returns {
            let d = x - mean;
            sq.add(d * d);
            // (x - mean)^- = max(mean - x, 0): only below-mean returns count.
            let shortfall = (mean - x).max(0.0);
            down_sq.add(shortfall * shortfall);
        }
        let divisor = convention.divisor(n);
        let volatility = (sq.value() / divisor).sqrt();
        let downside_deviation = (down_sq.value() / divisor).sqrt();

        Ok(RatioReport {
            mean,
            volatility,
            downside_deviation,
            sharpe: (volatility > 0.0).then(|| mean / volatility),
            sortino: (downside_deviation > 0.0).then(|| mean / downside_deviation),
            wealth_multiple: self.wealth_multiple(),
        })
    }
}

/// Summary statistics of a return series.
///
/// `sharpe` is absent exactly when the volatility is zero, `sortino`
/// exactly when the downside deviation is zero (a series that never
/// dips below its own mean).
#[derive(Debug, Clone, PartialEq)]
pub struct RatioReport {
    pub mean: f64,
    pub volatility: f64,
    pub downside_deviation: f64,
    pub sharpe: Option<f64>,
    pub sortino: Option<f64>,
    pub wealth_multiple: f64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn series(xs: &[f64]) -> ReturnSeries {
        ReturnSeries::new(xs.to_vec()).unwrap()
    }

    #[test]
    fn symmetric_pair() {
        let report = series(&[0.1, -0.1]).analyze().unwrap();
        assert!(report.mean.abs() < 1e-15);
        assert!((report.volatility - 0.1).abs() < 1e-15);
        assert!((report.downside_deviation - 0.005f64.sqrt()).abs() < 1e-15);
        assert_eq!(report.sharpe, Some(0.0));
        assert_eq!(report.sortino, Some(0.0));
        assert!((report.wealth_multiple - 0.99).abs() < 1e-15);
    }

    #[test]
    fn constant_series_has_no_ratios() {
        let report = series(&[0.05, 0.05, 0.05]).analyze().unwrap();
        assert_eq!(report.volatility, 0.0);
        assert_eq!(report.sharpe, None);
        assert_eq!(report.sortino, None);
        assert!((report.wealth_multiple - 1.05f64.powi(3)).abs() < 1e-12);
    }

    // Independent route for the constant-gain-then-total-loss family of
    // length k: mean = 0.05 - 1.05/k, sd = 1.05 * sqrt(k-1) / k, so the
    // Sharpe ratio is (k - 21) / (21 * sqrt(k - 1)).
    fn gain_then_bust_sharpe(k: usize) -> f64 {
        (k as f64 - 21.0) / (21.0 * ((k - 1) as f64).sqrt())
    }

    #[test]
    fn gain_then_bust_k100() {
        let mut xs = vec![0.05; 99];
        xs.push(-1.0);
        let report = series(&xs).analyze().unwrap();
        assert!((report.mean - 0.0395).abs() < 1e-15);
        assert!((report.volatility - 0.104474).abs() < 1e-6);
        let sharpe = report.sharpe.unwrap();
        assert!((sharpe - gain_then_bust_sharpe(100)).abs() < 1e-12);
        assert!((sharpe - 0.37808).abs() < 1e-5);
        assert_eq!(report.wealth_multiple, 0.0);
    }

    #[test]
    fn losing_examples() {
        assert!(series(&[0.05, -0.05]).losing());
        // Product exactly 1: the inequality is strict.
        assert!(!series(&[0.0]).losing());
        let mut xs = vec![0.05; 9999];
        xs.push(-1.0);
        let s = series(&xs);
        assert_eq!(s.wealth_multiple(), 0.0);
        assert!(s.losing());
    }

    #[test]
    fn wealth_zero_iff_total_loss() {
        assert_eq!(series(&[0.5, -1.0, 0.2]).wealth_multiple(), 0.0);
        assert!(series(&[0.5, -0.999, 0.2]).wealth_multiple() > 0.0);
    }

    #[test]
    fn rejects_short_and_invalid_input() {
        assert!(matches!(
            series(&[0.1]).analyze(),
            Err(Error::DegenerateSeries(1))
        ));
        assert!(matches!(
            ReturnSeries::new(vec![]),
            Err(Error::EmptySeries)
        ));
        assert!(matches!(
            ReturnSeries::new(vec![0.1, -1.2]),
            Err(Error::ReturnBelowFloor { index: 1, .. })
        ));
        assert!(matches!(
            ReturnSeries::new(vec![f64::NAN]),
            Err(Error::NonFiniteReturn { index: 0 })
        ));
    }

    #[test]
    fn reads_csv_with_lf_and_crlf() {
        let lf = "return\n0.05\n-0.02\n";
        let crlf = "return\r\n0.05\r\n-0.02\r\n";
        let a = ReturnSeries::from_csv_reader(lf.as_bytes()).unwrap();
        let b = ReturnSeries::from_csv_reader(crlf.as_bytes()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.returns(), &[0.05, -0.02]);
    }

    #[test]
    fn rejects_malformed_csv() {
        assert!(matches!(
            ReturnSeries::from_csv_reader("price\n0.05\n".as_bytes()),
            Err(Error::Csv(_))
        ));
        assert!(matches!(
            ReturnSeries::from_csv_reader("return\nabc\n".as_bytes()),
            Err(Error::Csv(_))
        ));
        assert!(matches!(
            ReturnSeries::from_csv_reader("return\ninf\n".as_bytes()),
            Err(Error::Csv(_))
        ));
    }

    #[test]
    fn sample_convention_scales_deviations() {
        let s = series(&[0.04, -0.01, 0.03, 0.0, -0.02]);
        let pop = s.analyze_with(Convention::Population).unwrap();
        let samp = s.analyze_with(Convention::Sample).unwrap();
        let factor = (5.0f64 / 4.0).sqrt();
        assert!((samp.volatility - pop.volatility * factor).abs() < 1e-15);
        assert!((samp.downside_deviation - pop.downside_deviation * factor).abs() < 1e-15);
        assert!(
            (samp.sharpe.unwrap() - pop.sharpe.unwrap() / factor).abs() < 1e-15
        );
        assert_eq!(samp.mean, pop.mean);
        assert_eq!(samp.wealth_multiple, pop.wealth_multiple);
    }

    #[test]
    fn analyze_is_pure() {
        let s = series(&[0.3, -0.2, 0.7, -0.5, 0.01]);
        let a = s.analyze().unwrap();
        let b = s.analyze().unwrap();
        assert_eq!(a, b);
    }

    proptest! {
        #[test]
        fn downside_never_exceeds_volatility(
            xs in proptest::collection::vec(-1.0f64..4.0, 2..40)
        ) {
            let report = series(&xs).analyze().unwrap();
            prop_assert!(report.downside_deviation <= report.volatility + 1e-12);
            if report.mean > 0.0 {
                if let (Some(sh), Some(so)) = (report.sharpe, report.sortino) {
                    prop_assert!(so >= sh - 1e-12);
                }
            }
        }

        #[test]
        fn shift_moves_mean_and_not_volatility(
            xs in proptest::collection::vec(-0.5f64..2.0, 2..30),
            shift in -0.2f64..0.2,
        ) {
            let base = series(&xs).analyze().unwrap();
            let shifted: Vec<f64> = xs.iter().map(|x| x + shift).collect();
            let moved = series(&shifted).analyze().unwrap();
            prop_assert!((moved.mean - (base.mean + shift)).abs() < 1e-12);
            prop_assert!((moved.volatility - base.volatility).abs() < 1e-12);
        }

        #[test]
        fn positive_scaling_leaves_ratios_unchanged(
            xs in proptest::collection::vec(-0.9f64..2.0, 2..30),
            scale in 0.05f64..1.0,
        ) {
            let base = series(&xs).analyze().unwrap();
            let scaled: Vec<f64> = xs.iter().map(|x| x * scale).collect();
            let report = series(&scaled).analyze().unwrap();
            prop_assert!((report.mean - base.mean * scale).abs() < 1e-12);
            prop_assert!((report.volatility - base.volatility * scale).abs() < 1e-12);
            prop_assert!(
                (report.downside_deviation - base.downside_deviation * scale).abs() < 1e-12
            );
            match (base.sharpe, report.sharpe) {
                (Some(a), Some(b)) => prop_assert!((a - b).abs() < 1e-9),
                (a, b) => prop_assert_eq!(a.is_some(), b.is_some()),
            }
        }
    }
}
