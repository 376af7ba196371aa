//! Orbifold Euler characteristic of the moduli space of genus-`g` curves,
//! `chi(M_g) = B_{2g} / (4g(g-1))`.

use std::sync::Mutex;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{ln_biguint, BoundsError, LogValue};

static TABLE: Mutex<Vec<BigRational>> = Mutex::new(Vec::new());

/// `B_0, ..., B_n` (convention `B_1 = -1/2`), from
/// `B_m = -1/(m+1) sum_{k<m} C(m+1, k) B_k`. Shared and grown on demand.
pub fn bernoulli_table(n: usize) -> Vec<BigRational> {
    let mut table = TABLE.lock().unwrap_or_else(|e| e.into_inner());
    if table.is_empty() {
        table.push(BigRational::one());
    }
    while table.len() <= n {
        let m = table.len();
        if m > 1 && m % 2 == 1 {
            table.push(BigRational::zero());
            continue;
        }
        // binom walks C(m+1, k) for k = 0, 1, ...
        let mut binom = BigInt::one();
        let mut sum = BigRational::zero();
        for (k, b) in table.iter().enumerate() {
            if !b.is_zero() {
                sum += b * BigRational::from_integer(binom.clone());
            }
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        let value = -sum / BigRational::from_integer(BigInt::from(m + 1));
        table.push(value);
    }
    table[..=n].to_vec()
}

pub fn bernoulli(n: usize) -> BigRational {
    bernoulli_table(n).pop().expect("non-empty")
}

pub fn euler_char_moduli(g: u64) -> Result<BigRational, BoundsError> {
    if g < 2 {
        return Err(BoundsError::GenusTooSmall(g));
    }
    let b = bernoulli(2 * g as usize);
    Ok(b / BigRational::from_integer(BigInt::from(4 * g * (g - 1))))
}

/// `ln |chi(M_g)|` from `sqrt(pi) / (sqrt(g) (g-1)) * (g / (pi e))^{2g}`.
pub fn chi_asymptotic(g: u64) -> Result<LogValue, BoundsError> {
    if g < 2 {
        return Err(BoundsError::GenusTooSmall(g));
    }
    let gf = g as f64;
    let pi = std::f64::consts::PI;
    Ok(LogValue::from_ln(
        0.5 * pi.ln() - 0.5 * gf.ln() - (gf - 1.0).ln()
            + 2.0 * gf * (gf / (pi * std::f64::consts::E)).ln(),
    ))
}

/// `ln |r|`; `-inf` for zero.
pub fn ln_abs_rational(r: &BigRational) -> f64 {
    if r.numer().sign() == Sign::NoSign {
        return f64::NEG_INFINITY;
    }
    let r = r.abs();
    ln_biguint(r.numer().magnitude()) - ln_biguint(r.denom().magnitude())
}
