//! Scalar special functions used across the models.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

/// Logistic function `exp(t)/(1+exp(t))`, overflow-safe on both tails.
#[inline]
pub fn expit(t: f64) -> f64 {
    if t >= 0.0 {
        1.0 / (1.0 + (-t).exp())
    } else {
        let e = t.exp();
        e / (1.0 + e)
    }
}

/// Standard normal CDF.
#[inline]
pub fn phi(x: f64) -> f64 {
    0.5 * statrs::function::erf::erfc(-x * FRAC_1_SQRT_2)
}

/// Standard normal density.
#[inline]
pub fn normal_pdf(x: f64) -> f64 {
    (-0.5 * x * x).exp() / (2.0 * PI).sqrt()
}

/// Threshold below which `erfc` would underflow and we switch to the Mills
/// asymptotic expansion. `erfc(37/sqrt(2))` is still a normal double.
const LOG_PHI_TAIL: f64 = -37.0;

/// `log Φ(x)`, finite for every finite `x`.
///
/// Three regimes: `ln(Φ)` via `erfc` in the bulk, `ln(1-Φ(-x))` for the upper
/// tail, and the asymptotic expansion of the Mills ratio once `erfc` itself
/// would underflow.
pub fn log_phi(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x >= 0.0 {
        if x > 37.0 {
            return 0.0;
        }
        // Φ(x) = 1 - Φ(-x); Φ(-x) ≤ 0.5 is computed accurately by erfc.
        let upper_tail = 0.5 * statrs::function::erf::erfc(x * FRAC_1_SQRT_2);
        return (-upper_tail).ln_1p();
    }
    if x < LOG_PHI_TAIL {
        log_phi_asymptotic(x)
    } else {
        (0.5 * statrs::function::erf::erfc(-x * FRAC_1_SQRT_2)).ln()
    }
}

/// Asymptotic series for `log Φ(x)` as `x → -∞`:
/// `Φ(x) = φ(x)/(-x) · (1 - 1/x² + 3/x⁴ - 15/x⁶ + 105/x⁸ - ...)`.
/// At |x| ≥ 37 the truncation error is far below double precision.
fn log_phi_asymptotic(x: f64) -> f64 {
    let inv_x2 = 1.0 / (x * x);
    let series = 1.0 + inv_x2 * (-1.0 + inv_x2 * (3.0 + inv_x2 * (-15.0 + inv_x2 * 105.0)));
    -0.5 * x * x - 0.5 * (2.0 * PI).ln() - (-x).ln() + series.ln()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn expit_matches_hand_values_and_saturates() {
        assert_relative_eq!(expit(0.0), 0.5);
        assert_relative_eq!(expit(-1.0), 0.268941421369995, max_relative = 1e-12);
        assert_eq!(expit(800.0), 1.0);
        assert_eq!(expit(-800.0), 0.0);
    }

    #[test]
    fn log_phi_matches_reference_values() {
        // Reference values computed with 50-digit arithmetic.
        let cases = [
            (-100.0, -5005.524208694205088626),
            (-40.0, -804.6084420137537881666),
            (-37.5, -707.6689893175071910661),
            (-37.0, -689.0305855768905936009),
            (-20.0, -203.9171553710972639368),
            (-10.0, -53.23128515051247057835),
            (-8.0, -35.0134371599145498955),
            (-5.0, -15.06499839398872573608),
            (-2.0, -3.783184333682031948836),
            (-1.0, -1.841021645009263505771),
            (-0.5, -1.17591176159361860888),
            (0.0, -0.6931471805599453094172),
            (0.5, -0.3689464152886563930656),
            (1.0, -0.1727537790234498895265),
            (2.0, -0.02301290932896348846534),
            (5.0, -2.866516129637635933846e-7),
            (8.0, -6.220960574271786058534e-16),
            (10.0, -7.619853024160526065973e-24),
        ];
        for (x, expected) in cases {
            let got = log_phi(x);
            assert_relative_eq!(got, expected, max_relative = 1e-12, epsilon = 1e-300);
        }
        assert_eq!(log_phi(40.0), 0.0);
    }

    #[test]
    fn log_phi_is_finite_and_monotone_across_the_switch() {
        let mut prev = f64::NEG_INFINITY;
        let mut x = -60.0;
        while x <= 60.0 {
            let v = log_phi(x);
            assert!(v.is_finite() || v == 0.0, "log_phi({x}) = {v}");
            assert!(v >= prev, "non-monotone at {x}");
            prev = v;
            x += 0.25;
        }
    }

    #[test]
    fn phi_consistent_with_log_phi() {
        for &x in &[-6.0, -3.0, -1.0, 0.0, 1.0, 3.0] {
            assert_relative_eq!(phi(x).ln(), log_phi(x), max_relative = 1e-12);
        }
    }
}
