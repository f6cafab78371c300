//! Floating scalars used by the quadrature engine.
//!
//! The integrator is generic over [`Scalar`]; `f64` and [`DoubleDouble`]
//! (about 31 significant digits) are provided.

mod double_double;

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, FromPrimitive, Num, Signed, ToPrimitive};

pub use double_double::DoubleDouble;

pub trait Scalar:
    Copy
    + Send
    + Sync
    + Debug
    + Display
    + PartialOrd
    + Num
    + Signed
    + Neg<Output = Self>
    + FromPrimitive
    + ToPrimitive
    + 'static
{
    /// Decimal digits the type carries reliably.
    const DIGITS: u32;

    fn from_float(x: f64) -> Self;
    fn to_float(self) -> f64;
    fn epsilon() -> Self;
    fn pi() -> Self;
    fn frac_pi_2() -> Self;
    fn infinity() -> Self;
    fn is_infinite(self) -> bool;
    fn is_finite(self) -> bool;
    fn exp(self) -> Self;
    fn ln(self) -> Self;
    fn cos(self) -> Self;
    fn sqrt(self) -> Self;
    fn powi(self, n: i32) -> Self;

    /// Nearest representable value to an exact rational.
    fn from_rational(r: &BigRational) -> Self;
    /// The exact rational value (panics on non-finite input).
    fn to_rational(self) -> BigRational;

    fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }
}

pub fn f64_to_rational(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite float")
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    // keep 64 leading bits of each side so neither overflows on its own
    let n = r.numer();
    let d = r.denom();
    let sn = (n.bits() as i64 - 64).max(0);
    let sd = (d.bits() as i64 - 64).max(0);
    let nf = (n >> sn as usize).to_f64().unwrap_or(0.0);
    let df = (d >> sd as usize).to_f64().unwrap_or(1.0);
    let e = sn - sd;
    let mut v = nf / df;
    let step = if e > 0 { 2f64.powi(e.min(1000) as i32) } else { 2f64.powi(e.max(-1000) as i32) };
    v *= step;
    let rest = if e > 1000 { e - 1000 } else if e < -1000 { e + 1000 } else { 0 };
    if rest != 0 {
        v *= 2f64.powi(rest as i32);
    }
    v
}

impl Scalar for f64 {
    const DIGITS: u32 = 15;

    fn from_float(x: f64) -> Self {
        x
    }
    fn to_float(self) -> f64 {
        self
    }
    fn epsilon() -> Self {
        f64::EPSILON
    }
    fn pi() -> Self {
        std::f64::consts::PI
    }
    fn frac_pi_2() -> Self {
        std::f64::consts::FRAC_PI_2
    }
    fn infinity() -> Self {
        f64::INFINITY
    }
    fn is_infinite(self) -> bool {
        Float::is_infinite(self)
    }
    fn is_finite(self) -> bool {
        Float::is_finite(self)
    }
    fn exp(self) -> Self {
        Float::exp(self)
    }
    fn ln(self) -> Self {
        Float::ln(self)
    }
    fn cos(self) -> Self {
        Float::cos(self)
    }
    fn sqrt(self) -> Self {
        Float::sqrt(self)
    }
    fn powi(self, n: i32) -> Self {
        Float::powi(self, n)
    }
    fn from_rational(r: &BigRational) -> Self {
        rational_to_f64(r)
    }
    fn to_rational(self) -> BigRational {
        f64_to_rational(self)
    }
}

pub(crate) fn rational_from_int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip_f64() {
        for x in [0.1f64, -3.5, 1e-300, 6.02e23] {
            assert_eq!(<f64 as Scalar>::from_rational(&x.to_rational()), x);
        }
    }

    #[test]
    fn huge_rationals_convert() {
        let big = BigRational::new(BigInt::from(10u32).pow(400) * 3, BigInt::from(10u32).pow(400));
        assert!((<f64 as Scalar>::from_rational(&big) - 3.0).abs() < 1e-15);
        let _ = rational_from_int(3);
    }
}
