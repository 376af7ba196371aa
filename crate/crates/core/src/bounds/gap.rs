//! Lower versus upper bounds for the number of local maxima of the systole
//! function along a genus sequence.

use serde::Serialize;

use super::formulas::{fixed_systole_bound, FixedSystoleConstants};
use super::{BoundParams, BoundsError, LogValue};

/// Exponent `c` in the upper estimate `(beta' g)^(c g)`.
pub const GAP_EXPONENT: f64 = 4e8;

/// `(beta g)^(g/3)`: local maxima exist in at least this number for
/// infinitely many genera.
pub fn local_maxima_lower_bound(g: u64, beta: f64) -> Result<LogValue, BoundsError> {
    if g < 2 {
        return Err(BoundsError::GenusTooSmall(g));
    }
    if beta.is_nan() || beta <= 0.0 || !beta.is_finite() {
        return Err(BoundsError::InvalidBeta(beta));
    }
    let g = g as f64;
    Ok(LogValue::from_ln(g / 3.0 * (beta * g).ln()))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapRow {
    pub g: u64,
    /// ln of the fixed-systole bound.
    pub upper_ln: f64,
    /// `upper_ln / (g ln(beta' g))`, when `beta'` exists.
    pub ratio: Option<f64>,
    /// ln of the lower bound with `beta = 1`.
    pub lower_ln: f64,
    pub lower_over_upper: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapReport {
    #[serde(rename = "L")]
    pub systole: f64,
    pub exponent: f64,
    /// `ln beta'`. The fixed-systole bound has the form `g (A + B ln g)`; when
    /// `B <= 4e8`, `beta' = exp(A / 4e8)` works for every `g >= 1`.
    pub beta_prime_ln: Option<f64>,
    pub rows: Vec<GapRow>,
    /// Every row has `ratio <= 4e8`.
    pub all_within: bool,
}

pub fn gap_report(genera: &[u64], systole: f64) -> Result<GapReport, BoundsError> {
    if !systole.is_finite() || systole < 0.0 {
        return Err(BoundsError::InvalidSystole(systole));
    }
    let c = FixedSystoleConstants::STATED;
    let el = systole.exp();
    let e54 = (1.25 * systole).exp();
    let slope = c.c3 * el;
    let intercept =
        std::f64::consts::LN_2 * (c.c1 * el + c.c2 * e54) + systole * (c.c3 * el + c.c4 * e54);
    let beta_prime_ln = (slope <= GAP_EXPONENT).then(|| intercept / GAP_EXPONENT);

    let mut rows = Vec::with_capacity(genera.len());
    for &g in genera {
        let upper_ln = fixed_systole_bound(BoundParams::new(g, systole)?, c).ln;
        let gf = g as f64;
        let ratio = beta_prime_ln.map(|b| upper_ln / (gf * (b + gf.ln())));
        let lower_ln = local_maxima_lower_bound(g, 1.0)?.ln;
        rows.push(GapRow {
            g,
            upper_ln,
            ratio,
            lower_ln,
            lower_over_upper: lower_ln / upper_ln,
        });
    }
    let all_within = rows
        .iter()
        .all(|r| r.ratio.is_some_and(|x| x <= GAP_EXPONENT * (1.0 + 1e-12)));
    Ok(GapReport {
        systole,
        exponent: GAP_EXPONENT,
        beta_prime_ln,
        rows,
        all_within,
    })
}
