//! Closed intervals `[lo, hi]`.
//!
//! Arithmetic is generic over any ordered field. Only exact scalars (such as
//! `BigRational`) make the operations certified: with exact endpoints every
//! operation contains the true result of its operands.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{Num, Signed, Zero};

use super::rational::sqrt_bounds;
use crate::error::{invalid, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval<T> {
    lo: T,
    hi: T,
}

impl<T: Clone + PartialOrd> Interval<T> {
    pub fn new(lo: T, hi: T) -> Result<Self> {
        if lo <= hi {
            Ok(Self { lo, hi })
        } else {
            Err(invalid("interval lower endpoint exceeds upper endpoint"))
        }
    }

    pub fn point(x: T) -> Self {
        Self {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn lo(&self) -> &T {
        &self.lo
    }

    pub fn hi(&self) -> &T {
        &self.hi
    }

    pub fn into_bounds(self) -> (T, T) {
        (self.lo, self.hi)
    }

    pub fn contains(&self, x: &T) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn overlaps(&self, other: &Self) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    /// Strictly left of `other`, i.e. every point is smaller.
    pub fn precedes(&self, other: &Self) -> bool {
        self.hi < other.lo
    }

    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let lo = if self.lo >= other.lo { &self.lo } else { &other.lo };
        let hi = if self.hi <= other.hi { &self.hi } else { &other.hi };
        (lo <= hi).then(|| Self {
            lo: lo.clone(),
            hi: hi.clone(),
        })
    }
}

impl<T: Clone + PartialOrd + Num + Signed> Interval<T> {
    pub fn width(&self) -> T {
        self.hi.clone() - self.lo.clone()
    }

    pub fn midpoint(&self) -> T {
        let two = T::one() + T::one();
        (self.lo.clone() + self.hi.clone()) / two
    }

    pub fn scale(&self, k: &T) -> Self {
        let a = self.lo.clone() * k.clone();
        let b = self.hi.clone() * k.clone();
        if k.is_negative() {
            Self { lo: b, hi: a }
        } else {
            Self { lo: a, hi: b }
        }
    }

    /// Integer power; endpoints are ordered correctly for intervals straddling zero.
    pub fn powi(&self, e: u32) -> Self {
        let mut acc = Self::point(T::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn contains_zero(&self) -> bool {
        self.lo <= T::zero() && T::zero() <= self.hi
    }

    pub fn recip(&self) -> Result<Self> {
        if self.contains_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self {
            lo: T::one() / self.hi.clone(),
            hi: T::one() / self.lo.clone(),
        })
    }
}

impl Interval<BigRational> {
    /// Outward rational enclosure of the square root with `digits` decimals.
    pub fn sqrt_outward(&self, digits: u32) -> Result<Self> {
        if self.lo.is_negative() {
            return Err(invalid("square root of an interval with negative points"));
        }
        let (lo, _) = sqrt_bounds(&self.lo, digits);
        let (_, hi) = sqrt_bounds(&self.hi, digits);
        Ok(Self { lo, hi })
    }
}

impl<'a, T: Clone + PartialOrd + Num> Add for &'a Interval<T> {
    type Output = Interval<T>;
    fn add(self, rhs: Self) -> Interval<T> {
        Interval {
            lo: self.lo.clone() + rhs.lo.clone(),
            hi: self.hi.clone() + rhs.hi.clone(),
        }
    }
}

impl<'a, T: Clone + PartialOrd + Num> Sub for &'a Interval<T> {
    type Output = Interval<T>;
    fn sub(self, rhs: Self) -> Interval<T> {
        Interval {
            lo: self.lo.clone() - rhs.hi.clone(),
            hi: self.hi.clone() - rhs.lo.clone(),
        }
    }
}

impl<'a, T: Clone + PartialOrd + Num> Mul for &'a Interval<T> {
    type Output = Interval<T>;
    fn mul(self, rhs: Self) -> Interval<T> {
        let cands = [
            self.lo.clone() * rhs.lo.clone(),
            self.lo.clone() * rhs.hi.clone(),
            self.hi.clone() * rhs.lo.clone(),
            self.hi.clone() * rhs.hi.clone(),
        ];
        let mut lo = cands[0].clone();
        let mut hi = cands[0].clone();
        for c in &cands[1..] {
            if *c < lo {
                lo = c.clone();
            }
            if *c > hi {
                hi = c.clone();
            }
        }
        Interval { lo, hi }
    }
}

impl<T: Clone + PartialOrd + Num + Neg<Output = T>> Neg for Interval<T> {
    type Output = Interval<T>;
    fn neg(self) -> Interval<T> {
        Interval {
            lo: -self.hi,
            hi: -self.lo,
        }
    }
}

impl<T: fmt::Display> fmt::Display for Interval<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl<T: Zero + Clone + PartialOrd> Default for Interval<T> {
    fn default() -> Self {
        Self::point(T::zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    fn iv(a: (i64, i64), b: (i64, i64)) -> Interval<BigRational> {
        Interval::new(r(a.0, a.1), r(b.0, b.1)).unwrap()
    }

    #[test]
    fn rejects_inverted() {
        assert!(Interval::new(r(2, 1), r(1, 1)).is_err());
    }

    #[test]
    fn mixed_sign_product() {
        let a = iv((-1, 1), (2, 1));
        let b = iv((-3, 1), (1, 2));
        let p = &a * &b;
        assert_eq!(p, iv((-6, 1), (3, 1)));
    }

    #[test]
    fn recip_and_zero() {
        assert_eq!(iv((2, 1), (4, 1)).recip().unwrap(), iv((1, 4), (1, 2)));
        assert_eq!(iv((-1, 1), (1, 1)).recip(), Err(Error::DivisionByZero));
    }

    #[test]
    fn intersect_and_subset() {
        let a = iv((0, 1), (2, 1));
        let b = iv((1, 1), (3, 1));
        assert_eq!(a.intersect(&b), Some(iv((1, 1), (2, 1))));
        assert!(iv((1, 2), (1, 1)).is_subset_of(&a));
        assert!(iv((0, 1), (1, 2)).precedes(&iv((1, 1), (2, 1))));
        assert_eq!(a.intersect(&iv((5, 1), (6, 1))), None);
    }

    #[test]
    fn works_for_f64() {
        let a = Interval::new(1.0f64, 2.0).unwrap();
        assert_eq!((&a + &a).into_bounds(), (2.0, 4.0));
        assert_eq!(a.width(), 1.0);
    }
}
