use num_bigint::BigUint;
use num_traits::One;

use super::{ln_gamma, LogValue};

/// `Cat(n) = binomial(2n, n) / (n + 1)`, exactly.
pub fn catalan_exact(n: u64) -> BigUint {
    let mut binom = BigUint::one();
    for k in 0..n {
        binom = binom * (2 * n - k) / (k + 1);
    }
    binom / (n + 1)
}

/// `Cat(0..=max)` by the ratio `Cat(k+1) = Cat(k) * 2(2k+1) / (k+2)`.
pub fn catalan_table(max: u64) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(max as usize + 1);
    let mut c = BigUint::one();
    for k in 0..=max {
        out.push(c.clone());
        c = c * (2 * (2 * k + 1)) / (k + 2);
    }
    out
}

/// `ln Cat(x)` through log-gamma; accepts real `x >= 0`.
pub fn catalan_ln(x: f64) -> f64 {
    ln_gamma(2.0 * x + 1.0) - 2.0 * ln_gamma(x + 1.0) - (x + 1.0).ln()
}

/// `x ln 4 - ln Cat(x)`, accurate even when both terms are far beyond the
/// resolution of their difference.
pub fn catalan_ln_deficit(x: f64) -> f64 {
    if x < 1e5 {
        return x * 4f64.ln() - catalan_ln(x);
    }
    // ln binomial(2x, x) = x ln 4 - ln(pi x)/2 - 1/(8x) + 1/(192 x^3) + O(x^-5)
    0.5 * (std::f64::consts::PI * x).ln() + 1.0 / (8.0 * x) - 1.0 / (192.0 * x.powi(3))
        + x.ln()
        + (1.0 / x).ln_1p()
}

pub fn catalan_log(n: u64) -> LogValue {
    LogValue::from_ln(catalan_ln(n as f64))
}
