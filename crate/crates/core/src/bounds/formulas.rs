use std::f64::consts::{LN_10, LN_2};

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use super::{
    catalan_exact, catalan_ln, ceil_snap, derived_params, factorial_exact, floor_snap,
    ln_factorial, BoundParams, BoundsError, LogValue,
};

/// How real-valued graph bounds enter the product bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Rounding {
    /// Real `V0` and `gGamma0` (log-gamma Catalan, real exponents).
    Real,
    /// `V0` and `gGamma0` ceiled to integers, log domain only.
    Ceiled,
    /// Ceiled parameters, evaluated as an exact integer under the digit cap.
    Exact,
}

/// Upper bound on the number of tree/edge/rotation constructions:
///
/// `Cat(V0 - 1) * V0^(2 gGamma0) / floor(genus_lower)! * (ceil(deg0)!)^V0`.
///
/// Every factor is non-decreasing in `V0` and `gGamma0`, so ceiling them
/// keeps an upper bound. In [`Rounding::Exact`] the quotient is rounded up.
pub fn construction_bound(
    p: BoundParams,
    rounding: Rounding,
    digit_cap: u64,
) -> Result<LogValue, BoundsError> {
    let d = derived_params(p);
    let lower = floor_snap(d.genus_lower).max(0.0) as u64;
    let deg = ceil_snap(d.deg0) as u64;
    let (v0, gg) = match rounding {
        Rounding::Real => (d.v0, d.g_gamma0),
        Rounding::Ceiled | Rounding::Exact => (ceil_snap(d.v0), ceil_snap(d.g_gamma0)),
    };
    let ln =
        catalan_ln(v0 - 1.0) + 2.0 * gg * v0.ln() - ln_factorial(lower) + v0 * ln_factorial(deg);
    if rounding != Rounding::Exact {
        return Ok(LogValue::from_ln(ln));
    }
    let digits = (ln / LN_10).floor() as u64 + 1;
    if digits > digit_cap {
        return Err(BoundsError::DigitCapExceeded {
            ln,
            digits,
            cap: digit_cap,
        });
    }
    let v0 = v0 as u64;
    let exponent = u32::try_from(2 * gg as u64).expect("bounded by the digit cap");
    let numer = catalan_exact(v0 - 1)
        * BigUint::from(v0).pow(exponent)
        * factorial_exact(deg).pow(v0 as u32);
    let denom = factorial_exact(lower);
    let value = (numer + &denom - BigUint::one()) / denom;
    Ok(LogValue {
        ln,
        exact: Some(value),
    })
}

/// Exponent constant `C` of the all-systoles bound `(6g)^(C g^{7/2})`.
pub const GLOBAL_EXPONENT: f64 = 6054.0;

/// The all-systoles bound and its three factor estimates at `L = ln(2g^2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GlobalBound {
    /// `(6g)^(6054 g^{7/2})`.
    pub bound: LogValue,
    /// `4^(5090 g^3)`.
    pub catalan: LogValue,
    /// `(5090 g^3)^(15400 g^3)`, the edge-addition estimate as printed.
    pub b_item: LogValue,
    /// `(2^{5/4} g^{1/2})^(2^{5/4} g^{1/2} * 5090 g^3)`, i.e. `deg0^(deg0 V0)`.
    pub c_item: LogValue,
    /// `(5.6 g)^(6053.1 g^{7/2})`, the relaxed rotation estimate.
    pub c_item_relaxed: LogValue,
}

pub fn global_bound(g: u64) -> Result<GlobalBound, BoundsError> {
    if g < 2 {
        return Err(BoundsError::GenusTooSmall(g));
    }
    let gf = g as f64;
    let g3 = gf.powi(3);
    let g35 = g3 * gf.sqrt();
    let deg0 = 2f64.powf(1.25) * gf.sqrt();
    Ok(GlobalBound {
        bound: LogValue::from_ln(GLOBAL_EXPONENT * g35 * (6.0 * gf).ln()),
        catalan: LogValue::from_ln(5090.0 * g3 * 4f64.ln()),
        b_item: LogValue::from_ln(15400.0 * g3 * (5090.0 * g3).ln()),
        c_item: LogValue::from_ln(deg0 * 5090.0 * g3 * deg0.ln()),
        c_item_relaxed: LogValue::from_ln(6053.1 * g35 * (5.6 * gf).ln()),
    })
}

/// Constants of the fixed-systole bound
/// `2^(C1 g e^L) 2^(C2 g e^{5L/4}) (e^L)^(C3 g e^L) (e^L)^(C4 g e^{5L/4}) g^(C3 g e^L)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FixedSystoleConstants {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    pub c4: f64,
}

impl FixedSystoleConstants {
    /// The constants of the published statement.
    pub const STATED: Self = Self {
        c1: 200000.0,
        c2: 5040.0,
        c3: 15400.0,
        c4: 1300.0,
    };
    /// The constants reached at the end of the derivation.
    pub const DERIVED: Self = Self {
        c1: 189890.0,
        c2: 5040.0,
        c3: 15400.0,
        c4: 1273.0,
    };
}

pub fn fixed_systole_bound(p: BoundParams, c: FixedSystoleConstants) -> LogValue {
    let g = p.g as f64;
    let l = p.systole;
    let a = g * l.exp();
    let b = g * (1.25 * l).exp();
    LogValue::from_ln(LN_2 * (c.c1 * a + c.c2 * b) + l * (c.c3 * a + c.c4 * b) + c.c3 * a * g.ln())
}

/// `4^(2545 g e^L - 1) (2545 g e^L)^(15400 g e^L) (2 e^{L/4})^(5040 g e^{5L/4})`.
pub fn fixed_systole_product(p: BoundParams) -> LogValue {
    let g = p.g as f64;
    let l = p.systole;
    let a = g * l.exp();
    let b = g * (1.25 * l).exp();
    LogValue::from_ln(
        (2545.0 * a - 1.0) * 4f64.ln()
            + 15400.0 * a * (2545.0 * a).ln()
            + 5040.0 * b * (2f64.ln() + l / 4.0),
    )
}
