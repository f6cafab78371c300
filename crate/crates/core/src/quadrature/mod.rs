//! Error-estimated integration of the integrand families around the Wallis
//! and Gaussian integrals.
//!
//! `discretization_error` is a heuristic estimate (the gap between a 10-point
//! and a 5-point Gauss–Legendre rule on every panel). `tail_bound` is an
//! analytic bound on the part of an improper integral cut off by truncation,
//! and is zero for proper integrals.

mod adaptive;
mod families;
mod gauss;
mod tails;

use crate::error::{invalid, Result};
use crate::scalar::Scalar;

pub use families::IntegrandFamily;
pub use gauss::GaussLegendre;
pub use tails::{moment_tail_bound, moment_truncation_point, reciprocal_tail_bound, reciprocal_truncation_point};

/// Smallest tolerance accepted by [`integrate`].
pub const MIN_TOL: f64 = 1e-14;

/// Default cap on integrand evaluations per call.
pub const DEFAULT_MAX_EVALS: usize = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult<T> {
    pub value: T,
    pub discretization_error: T,
    pub tail_bound: T,
    pub evaluations: usize,
}

impl<T: Scalar> QuadResult<T> {
    /// `discretization_error + tail_bound`.
    pub fn total_uncertainty(&self) -> T {
        self.discretization_error + self.tail_bound
    }

    /// `(value − u, value + u)` with `u` the total uncertainty.
    pub fn bounds(&self) -> (T, T) {
        let u = self.total_uncertainty();
        (self.value - u, self.value + u)
    }

    /// Result for `k·∫f` with `k > 0`.
    pub fn scaled(&self, k: T) -> Self {
        Self {
            value: self.value * k,
            discretization_error: self.discretization_error * k,
            tail_bound: self.tail_bound * k,
            evaluations: self.evaluations,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadConfig {
    pub max_evals: usize,
    /// Fraction of the tolerance handed to the truncation tail.
    pub tail_share: f64,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self {
            max_evals: DEFAULT_MAX_EVALS,
            tail_share: 0.25,
        }
    }
}

pub fn integrate<T: Scalar>(family: &IntegrandFamily<T>, tol: T) -> Result<QuadResult<T>> {
    integrate_with(family, tol, &QuadConfig::default())
}

pub fn integrate_with<T: Scalar>(family: &IntegrandFamily<T>, tol: T, config: &QuadConfig) -> Result<QuadResult<T>> {
    if !(tol.to_float() >= MIN_TOL) || tol.is_infinite() {
        return Err(invalid(format!("tolerance must be finite and at least {MIN_TOL:e}")));
    }
    family.validate()?;
    let plan = family.plan(tol * T::from_float(config.tail_share))?;
    let budget = tol - plan.tail_bound;
    let (value, err, evals) = adaptive::integrate_panels(|x| family.eval(x), &plan.breakpoints, budget, config.max_evals)?;
    Ok(QuadResult {
        value,
        discretization_error: err,
        tail_bound: plan.tail_bound,
        evaluations: evals,
    })
}

/// `∫₀^t e^{−x²} dx`; `t = ∞` is truncated with an analytic tail bound.
pub fn gauss_truncated<T: Scalar>(t: T, tol: T) -> Result<QuadResult<T>> {
    integrate(&IntegrandFamily::GaussTrunc(t), tol)
}

pub fn gauss_truncated_with<T: Scalar>(t: T, tol: T, config: &QuadConfig) -> Result<QuadResult<T>> {
    integrate_with(&IntegrandFamily::GaussTrunc(t), tol, config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::DoubleDouble;

    type Dd = DoubleDouble;

    fn dd(x: f64) -> Dd {
        Dd::from(x)
    }

    #[test]
    fn cos_pow_one_is_one() {
        let r = integrate(&IntegrandFamily::CosPow(1), dd(1e-10)).unwrap();
        assert!((r.value - Dd::ONE).abs() <= dd(1e-10));
        assert!(r.total_uncertainty() <= dd(1e-10));
        assert_eq!(r.tail_bound, Dd::ZERO);
        assert!(r.evaluations > 0);
    }

    #[test]
    fn cos_pow_zero_is_half_pi() {
        let r = integrate(&IntegrandFamily::CosPow(0), dd(1e-12)).unwrap();
        assert!((r.value - Dd::FRAC_PI_2).abs() <= dd(1e-12));
    }

    #[test]
    fn reciprocal_one_is_half_pi() {
        let r = integrate(&IntegrandFamily::ReciprocalPow(1), dd(1e-10)).unwrap();
        assert!((r.value - Dd::FRAC_PI_2).abs() <= r.total_uncertainty().max(dd(1e-10)));
        assert!(r.tail_bound > Dd::ZERO);
    }

    #[test]
    fn gauss_values() {
        let zero = gauss_truncated(dd(0.0), dd(1e-12)).unwrap();
        assert_eq!(zero.value, Dd::ZERO);
        let one = gauss_truncated(dd(1.0), dd(1e-12)).unwrap();
        // 0.746824132812427025399467436132 (mpmath)
        assert!((one.value - Dd::new(0.746824132812427, 2.5399467436132e-17)).abs() < dd(1e-12));
        let inf = gauss_truncated(Dd::infinity(), dd(1e-10)).unwrap();
        let half_sqrt_pi = Dd::PI.sqrt() / dd(2.0);
        assert!((inf.value - half_sqrt_pi).abs() <= inf.total_uncertainty());
        assert!(inf.tail_bound > Dd::ZERO);
    }

    #[test]
    fn works_in_f64() {
        let r = integrate(&IntegrandFamily::<f64>::Moment(3), 1e-10).unwrap();
        assert!((r.value - 0.5).abs() < 1e-10, "{}", r.value);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(integrate(&IntegrandFamily::CosPow(2), dd(1e-16)).is_err());
        assert!(integrate(&IntegrandFamily::ReciprocalPow(0), dd(1e-8)).is_err());
        assert!(gauss_truncated(dd(-1.0), dd(1e-8)).is_err());
    }

    #[test]
    fn budget_exhaustion_reports_best_estimate() {
        let cfg = QuadConfig {
            max_evals: 100,
            ..QuadConfig::default()
        };
        let err = integrate_with(&IntegrandFamily::CosPow(40), dd(1e-14), &cfg).unwrap_err();
        match err {
            crate::Error::BudgetExhausted { value, evaluations, .. } => {
                assert!(evaluations <= 100);
                assert!(value > 0.0);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
