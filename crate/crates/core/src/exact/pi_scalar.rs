//! Exact values of the form `q·π^(k/2)`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Mul, Neg};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::interval::Interval;
use super::pi_enclosure::PiEnclosure;
use super::rational::square;
use crate::error::{Error, Result};

/// `coeff · π^(half_pi_power / 2)` with an exact rational coefficient.
///
/// Zero is canonical: a zero coefficient always carries power 0. Sums are
/// only defined between equal powers of π, so equality is decided
/// structurally.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PiScalar {
    coeff: BigRational,
    half_pi_power: u32,
}

impl PiScalar {
    pub fn new(coeff: BigRational, half_pi_power: u32) -> Self {
        let half_pi_power = if coeff.is_zero() { 0 } else { half_pi_power };
        Self {
            coeff,
            half_pi_power,
        }
    }

    pub fn rational(q: BigRational) -> Self {
        Self::new(q, 0)
    }

    pub fn from_ratio(p: i64, q: i64) -> Self {
        Self::rational(BigRational::new(p.into(), q.into()))
    }

    pub fn zero() -> Self {
        Self::rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::rational(BigRational::one())
    }

    pub fn pi() -> Self {
        Self::new(BigRational::one(), 2)
    }

    pub fn sqrt_pi() -> Self {
        Self::new(BigRational::one(), 1)
    }

    pub fn coeff(&self) -> &BigRational {
        &self.coeff
    }

    pub fn half_pi_power(&self) -> u32 {
        self.half_pi_power
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.half_pi_power != other.half_pi_power {
            return Err(Error::MixedPiPower {
                left: self.half_pi_power,
                right: other.half_pi_power,
            });
        }
        Ok(Self::new(&self.coeff + &other.coeff, self.half_pi_power))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other.clone())
    }

    /// Division; defined only when the divisor's power of π does not exceed ours.
    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let k = self
            .half_pi_power
            .checked_sub(other.half_pi_power)
            .ok_or_else(|| Error::InvalidArgument("negative power of pi".into()))?;
        Ok(Self::new(&self.coeff / &other.coeff, k))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self::new(&self.coeff * q, self.half_pi_power)
    }

    pub fn squared(&self) -> Self {
        Self::new(square(&self.coeff), self.half_pi_power * 2)
    }

    pub fn pow(&self, e: u32) -> Self {
        Self::new(self.coeff.pow(e as i32), self.half_pi_power * e)
    }
}

impl<'a> Mul for &'a PiScalar {
    type Output = PiScalar;
    fn mul(self, rhs: Self) -> PiScalar {
        PiScalar::new(&self.coeff * &rhs.coeff, self.half_pi_power + rhs.half_pi_power)
    }
}

impl Mul for PiScalar {
    type Output = PiScalar;
    fn mul(self, rhs: Self) -> PiScalar {
        &self * &rhs
    }
}

impl Neg for PiScalar {
    type Output = PiScalar;
    fn neg(self) -> PiScalar {
        PiScalar::new(-self.coeff, self.half_pi_power)
    }
}

impl From<BigRational> for PiScalar {
    fn from(q: BigRational) -> Self {
        Self::rational(q)
    }
}

/// Renders `3/4·√π`, `1/2·π`, `5·π^(3/2)`, `2/3`.
impl fmt::Display for PiScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.half_pi_power {
            0 => write!(f, "{}", self.coeff),
            1 => write!(f, "{}·√π", self.coeff),
            2 => write!(f, "{}·π", self.coeff),
            k if k % 2 == 0 => write!(f, "{}·π^{}", self.coeff, k / 2),
            k => write!(f, "{}·π^({}/2)", self.coeff, k),
        }
    }
}

/// Rational interval containing `coeff · π^(k/2)`.
pub fn scalar_to_interval(x: &PiScalar, enc: &PiEnclosure) -> Interval<BigRational> {
    let k = x.half_pi_power;
    if k == 0 {
        return Interval::point(x.coeff.clone());
    }
    let pi = enc.interval();
    let mut factor = pi.powi(k / 2);
    if k % 2 == 1 {
        factor = &factor * &enc.sqrt_pi();
    }
    factor.scale(&x.coeff)
}

/// Outcome of comparing two exact scalars through an enclosure of π.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Comparison {
    Less,
    Greater,
    Equal,
    /// The enclosures overlap; retry with more digits.
    Undecided,
}

impl Comparison {
    pub fn is_decided(self) -> bool {
        self != Comparison::Undecided
    }

    pub fn to_ordering(self) -> Option<Ordering> {
        match self {
            Comparison::Less => Some(Ordering::Less),
            Comparison::Greater => Some(Ordering::Greater),
            Comparison::Equal => Some(Ordering::Equal),
            Comparison::Undecided => None,
        }
    }
}

/// Certified comparison of `a` against `b`.
///
/// Equal powers of π are compared exactly through their coefficients, since
/// `π^(k/2) > 0`. Otherwise LESS or GREATER is returned only when the two
/// enclosures are disjoint.
pub fn scalar_compare(a: &PiScalar, b: &PiScalar, enc: &PiEnclosure) -> Comparison {
    if a.half_pi_power == b.half_pi_power {
        return match a.coeff.cmp(&b.coeff) {
            Ordering::Less => Comparison::Less,
            Ordering::Greater => Comparison::Greater,
            Ordering::Equal => Comparison::Equal,
        };
    }
    // a sign difference decides without π
    if a.coeff.signum() != b.coeff.signum() {
        return if a.coeff < b.coeff {
            Comparison::Less
        } else {
            Comparison::Greater
        };
    }
    let ia = scalar_to_interval(a, enc);
    let ib = scalar_to_interval(b, enc);
    if ia.precedes(&ib) {
        Comparison::Less
    } else if ib.precedes(&ia) {
        Comparison::Greater
    } else {
        Comparison::Undecided
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::decimal::truncate_decimal;
    use crate::exact::pi_enclosure::pi_enclosure;

    fn r(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn zero_is_canonical() {
        let z = PiScalar::new(BigRational::zero(), 3);
        assert_eq!(z.half_pi_power(), 0);
        assert_eq!(z, PiScalar::zero());
    }

    #[test]
    fn multiplication_adds_powers() {
        let a = PiScalar::new(r(1, 2), 1);
        let b = PiScalar::new(r(3, 4), 2);
        let p = &a * &b;
        assert_eq!(p, PiScalar::new(r(3, 8), 3));
    }

    #[test]
    fn mixed_addition_is_an_error() {
        let a = PiScalar::new(r(1, 2), 1);
        let b = PiScalar::new(r(1, 2), 2);
        assert_eq!(a.checked_add(&b), Err(Error::MixedPiPower { left: 1, right: 2 }));
        assert_eq!(b.checked_add(&b).unwrap(), PiScalar::pi());
    }

    #[test]
    fn display_forms() {
        assert_eq!(PiScalar::new(r(3, 4), 1).to_string(), "3/4·√π");
        assert_eq!(PiScalar::new(r(1, 2), 2).to_string(), "1/2·π");
        assert_eq!(PiScalar::from_ratio(2, 3).to_string(), "2/3");
        assert_eq!(PiScalar::new(r(5, 1), 3).to_string(), "5·π^(3/2)");
        assert_eq!(PiScalar::new(r(1, 8), 4).to_string(), "1/8·π^2");
    }

    #[test]
    fn half_pi_interval() {
        let enc = pi_enclosure(5).unwrap();
        let iv = scalar_to_interval(&PiScalar::new(r(1, 2), 2), &enc);
        assert_eq!(truncate_decimal(iv.lo(), 5), "1.57079");
        assert_eq!(truncate_decimal(iv.hi(), 5), "1.57079");
        assert!(iv.width() <= r(1, 100_000));
    }

    #[test]
    fn exact_rational_interval() {
        let enc = pi_enclosure(5).unwrap();
        let iv = scalar_to_interval(&PiScalar::one(), &enc);
        assert_eq!(iv, Interval::point(BigRational::one()));
    }

    #[test]
    fn half_sqrt_pi_interval() {
        let enc = pi_enclosure(10).unwrap();
        let iv = scalar_to_interval(&PiScalar::new(r(1, 2), 1), &enc);
        assert_eq!(truncate_decimal(iv.lo(), 9), "0.886226925");
        assert_eq!(truncate_decimal(iv.hi(), 9), "0.886226925");
        // squaring the endpoints brackets π/4
        let sq = &iv * &iv;
        // π/4 = 0.78539816339744830…
        assert!(sq.lo() < &r(785398163397448310, 1_000_000_000_000_000_000));
        assert!(sq.hi() > &r(785398163397448309, 1_000_000_000_000_000_000));
    }

    #[test]
    fn comparisons() {
        let half_pi = PiScalar::new(r(1, 2), 2);
        let enc3 = pi_enclosure(3).unwrap();
        assert_eq!(scalar_compare(&half_pi, &half_pi.clone(), &enc3), Comparison::Equal);
        assert_eq!(scalar_compare(&PiScalar::one(), &half_pi, &enc3), Comparison::Less);

        let close = PiScalar::from_ratio(355, 226);
        let enc2 = pi_enclosure(2).unwrap();
        assert_eq!(scalar_compare(&close, &half_pi, &enc2), Comparison::Undecided);
        let enc7 = pi_enclosure(7).unwrap();
        assert_eq!(scalar_compare(&close, &half_pi, &enc7), Comparison::Greater);
        assert_eq!(scalar_compare(&half_pi, &close, &enc7), Comparison::Less);
    }

    #[test]
    fn negative_values_compare_by_sign() {
        let enc = pi_enclosure(1).unwrap();
        let a = PiScalar::new(r(-1, 1), 2);
        assert_eq!(scalar_compare(&a, &PiScalar::from_ratio(1, 100), &enc), Comparison::Less);
    }
}
