use super::tails::{moment_truncation_point, reciprocal_truncation_point};
use crate::error::{invalid, Result};
use crate::scalar::Scalar;

/// The integrands, each on its own domain:
///
/// | family | integrand | domain |
/// |---|---|---|
/// | `CosPow(n)` | `cosⁿ x` | `[0, π/2]` |
/// | `Moment(n)` | `xⁿ e^{−x²}` | `[0, ∞)` |
/// | `ReciprocalPow(n)` | `(1+x²)^{−n}`, `n ≥ 1` | `[0, ∞)` |
/// | `PolyPow(n)` | `(1−x²)ⁿ` | `[0, 1]` |
/// | `GaussTrunc(t)` | `e^{−x²}` | `[0, t]`, `t` may be infinite |
/// | `BorweinF(t)` | `e^{−t²(1+x²)}/(1+x²)` | `[0, 1]` |
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IntegrandFamily<T> {
    CosPow(u32),
    Moment(u32),
    ReciprocalPow(u32),
    PolyPow(u32),
    GaussTrunc(T),
    BorweinF(T),
}

pub(crate) struct Plan<T> {
    pub breakpoints: Vec<T>,
    pub tail_bound: T,
}

const LOG_DOMAIN_ABOVE: u32 = 200;

impl<T: Scalar> IntegrandFamily<T> {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Self::ReciprocalPow(0) => Err(invalid("reciprocal power needs n ≥ 1")),
            Self::GaussTrunc(t) if !(t >= T::zero()) => Err(invalid("upper limit must be nonnegative")),
            Self::BorweinF(t) if !(t >= T::zero()) || t.is_infinite() => {
                Err(invalid("parameter must be finite and nonnegative"))
            }
            _ => Ok(()),
        }
    }

    pub fn is_improper(&self) -> bool {
        match *self {
            Self::Moment(_) | Self::ReciprocalPow(_) => true,
            Self::GaussTrunc(t) => t.is_infinite(),
            _ => false,
        }
    }

    pub fn eval(&self, x: T) -> T {
        match *self {
            Self::CosPow(n) => x.cos().powi(n as i32),
            Self::Moment(n) => x.powi(n as i32) * (-(x * x)).exp(),
            Self::ReciprocalPow(n) => T::one() / (T::one() + x * x).powi(n as i32),
            Self::PolyPow(n) => {
                let y = (T::one() - x) * (T::one() + x);
                if y <= T::zero() {
                    T::zero()
                } else if n > LOG_DOMAIN_ABOVE {
                    (T::from_float(f64::from(n)) * y.ln()).exp()
                } else {
                    y.powi(n as i32)
                }
            }
            Self::GaussTrunc(_) => (-(x * x)).exp(),
            Self::BorweinF(t) => {
                let s = T::one() + x * x;
                (-(t * t * s)).exp() / s
            }
        }
    }

    pub(crate) fn plan(&self, tail_tol: T) -> Result<Plan<T>> {
        let tail = tail_tol.to_float();
        let plan = match *self {
            Self::CosPow(_) => uniform(T::zero(), T::frac_pi_2(), 4),
            Self::PolyPow(_) | Self::BorweinF(_) => uniform(T::zero(), T::one(), 4),
            Self::Moment(n) => {
                let (b, bound) = moment_truncation_point(n, tail)?;
                Plan {
                    tail_bound: T::from_float(bound),
                    ..unit_panels(T::from_float(b))
                }
            }
            Self::GaussTrunc(t) if t.is_infinite() => {
                let (b, bound) = moment_truncation_point(0, tail)?;
                Plan {
                    tail_bound: T::from_float(bound),
                    ..unit_panels(T::from_float(b))
                }
            }
            Self::GaussTrunc(t) => unit_panels(t),
            Self::ReciprocalPow(n) => {
                let (r, bound) = reciprocal_truncation_point(n, tail)?;
                let mut breakpoints = vec![T::zero()];
                let mut x = 1.0;
                while x < r {
                    breakpoints.push(T::from_float(x));
                    x *= 2.0;
                }
                breakpoints.push(T::from_float(r));
                Plan {
                    breakpoints,
                    tail_bound: T::from_float(bound),
                }
            }
        };
        Ok(plan)
    }
}

fn uniform<T: Scalar>(a: T, b: T, panels: usize) -> Plan<T> {
    let h = (b - a) / T::from_float(panels as f64);
    let mut breakpoints: Vec<T> = (0..panels).map(|i| a + h * T::from_float(i as f64)).collect();
    breakpoints.push(b);
    Plan {
        breakpoints,
        tail_bound: T::zero(),
    }
}

/// At least four panels, none wider than 1.
fn unit_panels<T: Scalar>(b: T) -> Plan<T> {
    let panels = b.to_float().ceil().max(4.0) as usize;
    uniform(T::zero(), b, panels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pointwise_values() {
        assert_eq!(IntegrandFamily::<f64>::CosPow(0).eval(1.0), 1.0);
        assert!((IntegrandFamily::<f64>::Moment(2).eval(1.0) - (-1.0f64).exp()).abs() < 1e-16);
        assert_eq!(IntegrandFamily::<f64>::ReciprocalPow(2).eval(1.0), 0.25);
        assert_eq!(IntegrandFamily::<f64>::PolyPow(3).eval(1.0), 0.0);
        let big = IntegrandFamily::<f64>::PolyPow(400).eval(0.01);
        assert!((big / (1.0f64 - 1e-4).powi(400) - 1.0).abs() < 1e-12);
        assert!((IntegrandFamily::BorweinF(1.0).eval(0.0) - (-1.0f64).exp()).abs() < 1e-16);
    }

    #[test]
    fn domains() {
        assert!(IntegrandFamily::<f64>::ReciprocalPow(0).validate().is_err());
        assert!(IntegrandFamily::GaussTrunc(f64::NAN).validate().is_err());
        assert!(IntegrandFamily::BorweinF(f64::INFINITY).validate().is_err());
        assert!(IntegrandFamily::GaussTrunc(f64::INFINITY).validate().is_ok());
        assert!(IntegrandFamily::GaussTrunc(f64::INFINITY).is_improper());
        assert!(!IntegrandFamily::<f64>::CosPow(3).is_improper());
    }
}
