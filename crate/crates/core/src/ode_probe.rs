//! The conservation law `F(t) + G(t) = π/4` with
//! `F(t) = ∫₀¹ e^{−t²(1+x²)}/(1+x²) dx` and `G(t) = (∫₀^t e^{−x²} dx)²`,
//! and the evaluator `∫₀^t e^{−x²} dx = √(π/4 − F(t))` it yields.
//!
//! The π/4 reference comes from the Machin enclosure, never from the Wallis
//! squeeze.

use crate::error::{invalid, Error, Result};
use crate::exact::{pi_enclosure, truncate_decimal};
use crate::quadrature::{gauss_truncated_with, integrate_with, IntegrandFamily, QuadConfig, QuadResult};
use crate::scalar::{rational_from_int, Scalar};

/// Largest finite `t` accepted; beyond it `F(t)` underflows.
pub const MAX_T: f64 = 40.0;

/// Digits of the Machin enclosure behind the π/4 reference.
pub const PI_QUARTER_DIGITS: u32 = 40;

/// Points `7^{i/24} − 1` for `i = 0..=24`, log-spaced in `1 + t` over `[0, 6]`.
pub fn conservation_grid() -> Vec<f64> {
    (0..=24).map(|i| 7f64.powf(f64::from(i) / 24.0) - 1.0).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConservationReport<T> {
    pub t: T,
    pub f: QuadResult<T>,
    pub g: QuadResult<T>,
    /// `|F + G − π/4|`.
    pub sum_deviation: T,
    /// Combined quadrature uncertainties plus a quarter of the enclosure width.
    pub allowed: T,
    pub pi_quarter_ref: String,
    pub consistent: bool,
}

struct PiQuarter<T> {
    value: T,
    radius: T,
    rendered: String,
}

fn pi_quarter<T: Scalar>() -> Result<PiQuarter<T>> {
    let enc = pi_enclosure(PI_QUARTER_DIGITS)?;
    let mid = enc.interval().midpoint() / rational_from_int(4);
    let half_width = enc.interval().width() / rational_from_int(8);
    let value = T::from_rational(&mid);
    // conversion error of the midpoint is at most a couple of ulps
    let radius = T::from_rational(&half_width) + value.abs() * T::epsilon() * T::from_float(4.0);
    Ok(PiQuarter {
        value,
        radius,
        rendered: truncate_decimal(&mid, 30),
    })
}

fn check_t<T: Scalar>(t: T) -> Result<()> {
    if !(t >= T::zero()) || t.is_infinite() {
        return Err(invalid("t must be finite and nonnegative"));
    }
    if t > T::from_float(MAX_T) {
        return Err(invalid(format!("t above {MAX_T} is outside the supported range")));
    }
    Ok(())
}

pub fn f_of_t<T: Scalar>(t: T, tol: T) -> Result<QuadResult<T>> {
    f_of_t_with(t, tol, &QuadConfig::default())
}

/// `F(t)`, also checking `0 ≤ F(t) ≤ e^{−t²}·π/4` up to the reported uncertainty.
pub fn f_of_t_with<T: Scalar>(t: T, tol: T, config: &QuadConfig) -> Result<QuadResult<T>> {
    check_t(t)?;
    let r = integrate_with(&IntegrandFamily::BorweinF(t), tol, config)?;
    let slack = r.total_uncertainty() + T::epsilon();
    let cap = (-(t * t)).exp() * T::pi() / T::from_float(4.0);
    if r.value < -slack || r.value > cap + slack {
        return Err(Error::BoundViolation(format!("F({t}) = {} outside [0, {cap}]", r.value)));
    }
    Ok(r)
}

pub fn g_of_t<T: Scalar>(t: T, tol: T) -> Result<QuadResult<T>> {
    g_of_t_with(t, tol, &QuadConfig::default())
}

/// `G(t)`; `t = ∞` is allowed. The uncertainty `u` of the inner integral `v`
/// becomes `(2v + u)·u`.
pub fn g_of_t_with<T: Scalar>(t: T, tol: T, config: &QuadConfig) -> Result<QuadResult<T>> {
    let inner_tol = (tol / T::from_float(2.0)).max(T::from_float(crate::quadrature::MIN_TOL));
    let inner = gauss_truncated_with(t, inner_tol, config)?;
    let k = T::from_float(2.0) * inner.value.abs() + inner.total_uncertainty();
    Ok(QuadResult {
        value: inner.value * inner.value,
        discretization_error: inner.discretization_error * k,
        tail_bound: inner.tail_bound * k,
        evaluations: inner.evaluations,
    })
}

pub fn check_conservation<T: Scalar>(t: T, tol: T) -> Result<ConservationReport<T>> {
    check_conservation_with(t, tol, &QuadConfig::default())
}

pub fn check_conservation_with<T: Scalar>(t: T, tol: T, config: &QuadConfig) -> Result<ConservationReport<T>> {
    check_t(t)?;
    let quarter = pi_quarter::<T>()?;
    let f = f_of_t_with(t, tol, config)?;
    let g = g_of_t_with(t, tol, config)?;
    let sum_deviation = (f.value + g.value - quarter.value).abs();
    let rounding = T::epsilon() * T::from_float(8.0);
    let allowed = f.total_uncertainty() + g.total_uncertainty() + quarter.radius + rounding;
    Ok(ConservationReport {
        t,
        f,
        g,
        sum_deviation,
        allowed,
        pi_quarter_ref: quarter.rendered,
        consistent: sum_deviation <= allowed,
    })
}

/// Conservation reports over [`conservation_grid`], ascending in `t`.
pub fn check_conservation_grid<T: Scalar>(tol: T, config: &QuadConfig) -> Result<Vec<ConservationReport<T>>> {
    conservation_grid()
        .into_iter()
        .map(|t| check_conservation_with(T::from_float(t), tol, config))
        .collect()
}

pub fn probability_integral_via_f<T: Scalar>(t: T, tol: T) -> Result<QuadResult<T>> {
    probability_integral_via_f_with(t, tol, &QuadConfig::default())
}

/// `√(π/4 − F(t))`. A radicand below zero by more than its uncertainty is an
/// error; within the uncertainty it is treated as zero.
pub fn probability_integral_via_f_with<T: Scalar>(t: T, tol: T, config: &QuadConfig) -> Result<QuadResult<T>> {
    let quarter = pi_quarter::<T>()?;
    let f = f_of_t_with(t, tol, config)?;
    let y = quarter.value - f.value;
    let delta = f.total_uncertainty() + quarter.radius + T::epsilon() * T::from_float(8.0);
    if y < -delta {
        return Err(Error::NegativeRadicand {
            radicand: y.to_float(),
            uncertainty: delta.to_float(),
        });
    }
    let y = y.max(T::zero());
    let root = y.sqrt();
    let spread = if root > T::zero() {
        (delta / root).min(delta.sqrt())
    } else {
        delta.sqrt()
    };
    Ok(QuadResult {
        value: root,
        discretization_error: spread,
        tail_bound: T::zero(),
        evaluations: f.evaluations,
    })
}
