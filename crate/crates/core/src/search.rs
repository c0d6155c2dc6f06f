//! Scalar maximization by coarse bracketing and golden-section refinement.

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Outcome of a 1-D maximization.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Maximum {
    pub(crate) x: f64,
    pub(crate) value: f64,
}

/// Maximizes `f` on `[lo, hi]`, growing the right edge geometrically
/// (doubling) up to `hi_max` while the coarse maximum still sits on it.
///
/// The coarse pass samples `coarse_points` equally spaced points; the
/// bracket around the best sample is then refined by golden section to
/// relative tolerance `rel_tol` in x.
pub(crate) fn maximize_expanding(
    f: impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    hi_max: f64,
    coarse_points: usize,
    rel_tol: f64,
) -> Maximum {
    debug_assert!(lo < hi && coarse_points >= 4);
    let mut hi = hi.min(hi_max);
    loop {
        let step = (hi - lo) / (coarse_points - 1) as f64;
        let mut best_idx = 0;
        let mut best_val = f64::NEG_INFINITY;
        for i in 0..coarse_points {
            let x = lo + step * i as f64;
            let v = f(x);
            if v > best_val {
                best_val = v;
                best_idx = i;
            }
        }
        let on_right_edge = best_idx + 2 >= coarse_points;
        if on_right_edge && hi < hi_max {
            hi = (hi * 2.0).min(hi_max);
            continue;
        }
        let a = lo + step * best_idx.saturating_sub(1) as f64;
        let b = (lo + step * (best_idx + 1) as f64).min(hi);
        return golden_section_max(f, a, b, rel_tol);
    }
}

/// Golden-section maximization of `f` on `[a, b]`.
pub(crate) fn golden_section_max(
    f: impl Fn(f64) -> f64,
    mut a: f64,
    mut b: f64,
    rel_tol: f64,
) -> Maximum {
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while (b - a) > rel_tol * (a.abs().max(b.abs()).max(1e-300)) {
        if f1 > f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
        if b - a <= 0.0 {
            break;
        }
    }
    if f1 > f2 {
        Maximum { x: x1, value: f1 }
    } else {
        Maximum { x: x2, value: f2 }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_parabola_peak() {
        let m = golden_section_max(|x| -(x - 2.5) * (x - 2.5), 0.0, 10.0, 1e-12);
        assert!((m.x - 2.5).abs() < 1e-8);
        assert!(m.value.abs() < 1e-15);
    }

    #[test]
    fn expansion_reaches_distant_maximum() {
        // Peak at x = 900, far beyond the initial bracket [0, 2].
        let m = maximize_expanding(|x| -(x - 900.0).powi(2), 1e-3, 2.0, 1e6, 64, 1e-12);
        assert!((m.x - 900.0).abs() < 1e-6);
    }

    #[test]
    fn capped_expansion_settles_on_edge_bracket() {
        // Increasing function: the best the search can do is the cap.
        let m = maximize_expanding(|x| x, 0.0, 1.0, 8.0, 16, 1e-12);
        assert!((m.x - 8.0).abs() < 1e-6);
    }
}
