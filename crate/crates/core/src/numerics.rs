//! Small numerical helpers.

/// log(Σ exp(x_i)) with max-subtraction so that exponents like (σ−1)/μ times
/// large log-wages never overflow. Returns −∞ for an empty slice.
pub fn log_sum_exp(terms: &[f64]) -> f64 {
    let m = terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !m.is_finite() {
        return m;
    }
    let s: f64 = terms.iter().map(|&x| (x - m).exp()).sum();
    m + s.ln()
}

/// Sup-norm of the relative difference between two positive vectors.
pub fn rel_sup_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| (x - y).abs() / y.abs().max(f64::MIN_POSITIVE))
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_direct_sum_in_safe_range() {
        let xs = [0.3, -1.2, 2.0];
        let direct: f64 = xs.iter().map(|x| x.exp()).sum::<f64>().ln();
        assert!((log_sum_exp(&xs) - direct).abs() < 1e-14);
    }

    #[test]
    fn survives_huge_exponents() {
        let v = log_sum_exp(&[1000.0, 1000.0]);
        assert!((v - (1000.0 + 2.0_f64.ln())).abs() < 1e-10);
        assert!(log_sum_exp(&[-1e6, -1e6 + 1.0]).is_finite());
    }

    #[test]
    fn empty_is_neg_infinity() {
        assert_eq!(log_sum_exp(&[]), f64::NEG_INFINITY);
    }
}
