/// Neumaier-compensated accumulator.
///
/// Keeps a running correction term so that long sums (the anomaly demos
/// run over 10^5+ returns) do not drift by more than a few ulps.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct CompensatedSum {
    sum: f64,
    correction: f64,
}

impl CompensatedSum {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.correction += (self.sum - t) + x;
        } else {
            self.correction += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.correction
    }
}

/// Compensated sum of an iterator of terms.
pub(crate) fn compensated_sum(terms: impl IntoIterator<Item = f64>) -> f64 {
    let mut acc = CompensatedSum::new();
    for t in terms {
        acc.add(t);
    }
    acc.value()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_cancellation_that_naive_summation_loses() {
        // 1 + 2^-60 repeated, then -1: naive f64 drops every small term.
        let mut acc = CompensatedSum::new();
        acc.add(1.0);
        for _ in 0..1000 {
            acc.add(2f64.powi(-60));
        }
        acc.add(-1.0);
        let exact = 1000.0 * 2f64.powi(-60);
        assert!((acc.value() - exact).abs() < 1e-25);
    }

    #[test]
    fn matches_naive_sum_on_benign_input() {
        let xs: Vec<f64> = (0..100).map(|i| i as f64 * 0.25).collect();
        let naive: f64 = xs.iter().sum();
        assert_eq!(compensated_sum(xs), naive);
    }
}
