//! Counting bounds for critical points of the systole function, evaluated as
//! natural logarithms (and as exact integers where they fit).
//!
//! All logarithms are natural. Inputs are a genus `g >= 2` and a systole
//! cap `L >= 0`; the graph of shortest geodesics of a critical surface with
//! systole at most `L` then has at most `2545 g e^L` vertices, cycle rank at
//! most `7700 g e^L` and vertex degree at most `2 e^{L/4}`.

mod catalan;
mod chain;
mod euler;
mod formulas;
mod gap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

pub use catalan::{catalan_exact, catalan_ln, catalan_ln_deficit, catalan_log, catalan_table};
pub use chain::{
    verify_chain, verify_sweep, ChainEntry, ChainReport, Onset, SweepReport, SystoleChoice,
    CORE_INEQUALITIES,
};
pub use euler::{bernoulli, bernoulli_table, chi_asymptotic, euler_char_moduli, ln_abs_rational};
pub use formulas::{
    construction_bound, fixed_systole_bound, fixed_systole_product, global_bound,
    FixedSystoleConstants, GlobalBound, Rounding, GLOBAL_EXPONENT,
};
pub use gap::{gap_report, local_maxima_lower_bound, GapReport, GapRow, GAP_EXPONENT};

/// Default digit cap for exact evaluation.
pub const DEFAULT_DIGIT_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundsError {
    #[error("genus must be at least 2, got {0}")]
    GenusTooSmall(u64),
    #[error("systole cap must be finite and non-negative, got {0}")]
    InvalidSystole(f64),
    #[error("beta must be positive, got {0}")]
    InvalidBeta(f64),
    #[error("exact value needs about {digits} digits, over the cap of {cap} (ln = {ln})")]
    DigitCapExceeded { ln: f64, digits: u64, cap: u64 },
}

/// Genus and systole cap.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundParams {
    pub g: u64,
    #[serde(rename = "L")]
    pub systole: f64,
}

impl BoundParams {
    pub fn new(g: u64, systole: f64) -> Result<Self, BoundsError> {
        if g < 2 {
            return Err(BoundsError::GenusTooSmall(g));
        }
        if !systole.is_finite() || systole < 0.0 {
            return Err(BoundsError::InvalidSystole(systole));
        }
        Ok(Self { g, systole })
    }

    /// `L = max_systole(g)`, where every critical point is counted.
    pub fn at_max_systole(g: u64) -> Result<Self, BoundsError> {
        Self::new(g, max_systole(g)?)
    }
}

/// Graph-size bounds derived from `(g, L)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DerivedParams {
    /// Vertex bound `2545 g e^L`.
    #[serde(rename = "V0")]
    pub v0: f64,
    /// Cycle-rank bound `7700 g e^L`.
    #[serde(rename = "gGamma0")]
    pub g_gamma0: f64,
    /// Degree bound `2 e^{L/4}`.
    pub deg0: f64,
    /// Lower bound `pi sqrt(g(g-1)) / ln(4g-2)` on the number of systoles.
    pub genus_lower: f64,
    /// Disk radius `arcsinh(1 / (2 sinh(L/4)))`; infinite at `L = 0`.
    pub r_disk: f64,
    /// Disks needed to cover the surface, `16 (g-1) e^{L/2}`.
    #[serde(rename = "F_bound")]
    pub cover_disks: f64,
    /// Systoles through one disk, `17.83 e^{L/4}`.
    #[serde(rename = "G_bound")]
    pub disk_crossings: f64,
    /// Edge bound `3 V0 + 6g - 6`.
    #[serde(rename = "E_bound")]
    pub edge_bound: f64,
}

pub fn derived_params(p: BoundParams) -> DerivedParams {
    let g = p.g as f64;
    let el = p.systole.exp();
    let v0 = 2545.0 * g * el;
    DerivedParams {
        v0,
        g_gamma0: 7700.0 * g * el,
        deg0: 2.0 * (p.systole / 4.0).exp(),
        genus_lower: genus_lower(p.g),
        r_disk: (1.0 / (2.0 * (p.systole / 4.0).sinh())).asinh(),
        cover_disks: 16.0 * (g - 1.0) * (p.systole / 2.0).exp(),
        disk_crossings: 17.83 * (p.systole / 4.0).exp(),
        edge_bound: 3.0 * v0 + 6.0 * g - 6.0,
    }
}

/// `pi sqrt(g(g-1)) / ln(4g-2)`.
pub fn genus_lower(g: u64) -> f64 {
    let g = g as f64;
    std::f64::consts::PI * (g * (g - 1.0)).sqrt() / (4.0 * g - 2.0).ln()
}

/// `ln(2 g^2)`: no genus-`g` hyperbolic surface has a longer systole.
pub fn max_systole(g: u64) -> Result<f64, BoundsError> {
    if g < 2 {
        return Err(BoundsError::GenusTooSmall(g));
    }
    let g = g as f64;
    Ok((2.0 * g * g).ln())
}

/// Natural-log magnitude of a positive quantity, with the exact integer
/// attached when it was computed.
#[derive(Debug, Clone, PartialEq)]
pub struct LogValue {
    pub ln: f64,
    pub exact: Option<BigUint>,
}

impl LogValue {
    pub fn from_ln(ln: f64) -> Self {
        Self { ln, exact: None }
    }

    pub fn from_exact(value: BigUint) -> Self {
        Self {
            ln: ln_biguint(&value),
            exact: Some(value),
        }
    }

    /// Decimal digits of the value (estimated from `ln` when no exact value
    /// is attached).
    pub fn digits(&self) -> u64 {
        if let Some(x) = &self.exact {
            return x.to_str_radix(10).len() as u64;
        }
        if self.ln <= 0.0 {
            1
        } else {
            (self.ln / std::f64::consts::LN_10).floor() as u64 + 1
        }
    }
}

/// `ln x` for a positive big integer, good to double precision at any size.
pub fn ln_biguint(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 64 {
        return x.to_u64().expect("fits").to_f64().expect("finite").ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().expect("64 bits") as f64;
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

pub fn factorial_exact(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `ln Gamma(x)` for `x > 0`.
pub fn ln_gamma(x: f64) -> f64 {
    statrs::function::gamma::ln_gamma(x)
}

/// `ln n!`.
pub fn ln_factorial(n: u64) -> f64 {
    if n < 2 {
        0.0
    } else {
        ln_gamma(n as f64 + 1.0)
    }
}

/// Relative distance under which a float is treated as the nearby integer
/// before rounding; keeps `2545 * g * e^{ln 8}` from ceiling past 40720.
const SNAP: f64 = 1e-9;

pub fn ceil_snap(x: f64) -> f64 {
    let r = x.round();
    if (x - r).abs() <= SNAP * r.abs().max(1.0) {
        r
    } else {
        x.ceil()
    }
}

pub fn floor_snap(x: f64) -> f64 {
    let r = x.round();
    if (x - r).abs() <= SNAP * r.abs().max(1.0) {
        r
    } else {
        x.floor()
    }
}
