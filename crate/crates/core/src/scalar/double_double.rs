//! Double-double arithmetic: an unevaluated sum `hi + lo` of two `f64` with
//! `|lo| ≤ ulp(hi)/2`, giving roughly 106 bits of significand.
//!
//! The error-free transforms follow Dekker and Knuth; `exp` uses argument
//! reduction by `ln 2` and `2^-10` followed by a short Taylor series, `cos`
//! reduces by `π/2` and evaluates Taylor series on `[-π/4, π/4]`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Rem, Sub, SubAssign};

use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

use super::{f64_to_rational, rational_to_f64, Scalar};
use crate::exact::decimal::truncate_decimal;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct DoubleDouble {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl DoubleDouble {
    pub const PI: Self = Self::from_parts(3.141592653589793, 1.2246467991473532e-16);
    pub const FRAC_PI_2: Self = Self::from_parts(1.5707963267948966, 6.123233995736766e-17);
    pub const LN_2: Self = Self::from_parts(0.6931471805599453, 2.3190468138462996e-17);
    pub const ONE: Self = Self::from_parts(1.0, 0.0);
    pub const ZERO: Self = Self::from_parts(0.0, 0.0);

    /// Builds from an already normalized pair.
    pub const fn from_parts(hi: f64, lo: f64) -> Self {
        Self { hi, lo }
    }

    /// Normalizes an arbitrary pair.
    pub fn new(hi: f64, lo: f64) -> Self {
        let (h, l) = two_sum(hi, lo);
        Self::finish(h, l)
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    #[inline]
    fn finish(hi: f64, lo: f64) -> Self {
        if hi.is_finite() {
            Self { hi, lo }
        } else {
            Self { hi, lo: 0.0 }
        }
    }

    fn mul_f64(self, b: f64) -> Self {
        let (p1, mut p2) = two_prod(self.hi, b);
        p2 += self.lo * b;
        let (h, l) = quick_two_sum(p1, p2);
        Self::finish(h, l)
    }

    fn div_f64(self, b: f64) -> Self {
        let q1 = self.hi / b;
        let (p1, p2) = two_prod(q1, b);
        let (s, mut e) = two_sum(self.hi, -p1);
        e -= p2;
        e += self.lo;
        let q2 = (s + e) / b;
        let (h, l) = quick_two_sum(q1, q2);
        Self::finish(h, l)
    }

    fn ldexp(self, e: i32) -> Self {
        let scale = |x: f64, e: i32| {
            if e.abs() > 1000 {
                let half = e / 2;
                x * 2f64.powi(half) * 2f64.powi(e - half)
            } else {
                x * 2f64.powi(e)
            }
        };
        Self {
            hi: scale(self.hi, e),
            lo: scale(self.lo, e),
        }
    }

    fn square(self) -> Self {
        self * self
    }

    pub fn floor(self) -> Self {
        let h = self.hi.floor();
        if h == self.hi {
            let (s, e) = two_sum(h, self.lo.floor());
            Self::finish(s, e)
        } else {
            Self { hi: h, lo: 0.0 }
        }
    }

    pub fn trunc(self) -> Self {
        if self.hi >= 0.0 {
            self.floor()
        } else {
            -(-self).floor()
        }
    }

    /// `(sin r, cos r)` for `|r| ≤ π/4` by Taylor series.
    fn sin_cos_small(r: Self) -> (Self, Self) {
        let r2 = r.square();
        let mut s_term = r;
        let mut sin = r;
        let mut c_term = Self::ONE;
        let mut cos = Self::ONE;
        let mut i = 2.0;
        while i < 40.0 {
            c_term = -(c_term * r2).div_f64(i * (i - 1.0));
            cos += c_term;
            s_term = -(s_term * r2).div_f64(i * (i + 1.0));
            sin += s_term;
            if c_term.hi.abs() < 1e-36 && s_term.hi.abs() < 1e-36 {
                break;
            }
            i += 2.0;
        }
        (sin, cos)
    }
}

impl fmt::Display for DoubleDouble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.hi.is_finite() {
            return write!(f, "{}", self.hi);
        }
        if self.hi == 0.0 {
            return write!(f, "0");
        }
        let mag = self.hi.abs().log10().floor() as i64;
        let frac = (30 - mag).clamp(0, 80) as u32;
        write!(f, "{}", truncate_decimal(&self.to_rational(), frac))
    }
}

impl PartialOrd for DoubleDouble {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            o => o,
        }
    }
}

impl Add for DoubleDouble {
    type Output = Self;
    #[inline]
    fn add(self, b: Self) -> Self {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (h, l) = quick_two_sum(s1, s2 + t2);
        Self::finish(h, l)
    }
}

impl Sub for DoubleDouble {
    type Output = Self;
    #[inline]
    fn sub(self, b: Self) -> Self {
        self + (-b)
    }
}

impl Mul for DoubleDouble {
    type Output = Self;
    #[inline]
    fn mul(self, b: Self) -> Self {
        let (p1, mut p2) = two_prod(self.hi, b.hi);
        p2 += self.hi * b.lo + self.lo * b.hi;
        let (h, l) = quick_two_sum(p1, p2);
        Self::finish(h, l)
    }
}

impl Div for DoubleDouble {
    type Output = Self;
    fn div(self, b: Self) -> Self {
        let q1 = self.hi / b.hi;
        if !q1.is_finite() {
            return Self { hi: q1, lo: 0.0 };
        }
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (h, l) = quick_two_sum(q1, q2);
        Self::finish(h, l) + Self::from_parts(q3, 0.0)
    }
}

impl Rem for DoubleDouble {
    type Output = Self;
    fn rem(self, b: Self) -> Self {
        self - b * (self / b).trunc()
    }
}

impl Neg for DoubleDouble {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl AddAssign for DoubleDouble {
    fn add_assign(&mut self, b: Self) {
        *self = *self + b;
    }
}

impl SubAssign for DoubleDouble {
    fn sub_assign(&mut self, b: Self) {
        *self = *self - b;
    }
}

impl MulAssign for DoubleDouble {
    fn mul_assign(&mut self, b: Self) {
        *self = *self * b;
    }
}

impl From<f64> for DoubleDouble {
    fn from(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }
}

impl Zero for DoubleDouble {
    fn zero() -> Self {
        Self::ZERO
    }
    fn is_zero(&self) -> bool {
        self.hi == 0.0
    }
}

impl One for DoubleDouble {
    fn one() -> Self {
        Self::ONE
    }
}

impl Num for DoubleDouble {
    type FromStrRadixErr = num_traits::ParseFloatError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        <f64 as Num>::from_str_radix(s, radix).map(Self::from)
    }
}

impl Signed for DoubleDouble {
    fn abs(&self) -> Self {
        DoubleDouble::abs(*self)
    }
    fn abs_sub(&self, other: &Self) -> Self {
        if self <= other {
            Self::ZERO
        } else {
            *self - *other
        }
    }
    fn signum(&self) -> Self {
        if self.hi > 0.0 {
            Self::ONE
        } else if self.hi < 0.0 {
            -Self::ONE
        } else {
            Self::ZERO
        }
    }
    fn is_positive(&self) -> bool {
        self.hi > 0.0
    }
    fn is_negative(&self) -> bool {
        self.hi < 0.0
    }
}

impl FromPrimitive for DoubleDouble {
    fn from_i64(n: i64) -> Option<Self> {
        let hi = n as f64;
        let lo = (n as i128 - hi as i128) as f64;
        Some(Self::new(hi, lo))
    }
    fn from_u64(n: u64) -> Option<Self> {
        let hi = n as f64;
        let lo = (n as i128 - hi as i128) as f64;
        Some(Self::new(hi, lo))
    }
    fn from_f64(x: f64) -> Option<Self> {
        Some(Self::from(x))
    }
}

impl ToPrimitive for DoubleDouble {
    fn to_i64(&self) -> Option<i64> {
        let t = self.trunc();
        Some(t.hi as i64 + t.lo as i64)
    }
    fn to_u64(&self) -> Option<u64> {
        if self.hi < 0.0 {
            return None;
        }
        let t = self.trunc();
        Some((t.hi as i128 + t.lo as i128) as u64)
    }
    fn to_f64(&self) -> Option<f64> {
        Some(self.hi + self.lo)
    }
}

impl Scalar for DoubleDouble {
    const DIGITS: u32 = 31;

    fn from_float(x: f64) -> Self {
        Self::from(x)
    }
    fn to_float(self) -> f64 {
        self.hi + self.lo
    }
    fn epsilon() -> Self {
        Self::from(4.93038065763132e-32)
    }
    fn pi() -> Self {
        Self::PI
    }
    fn frac_pi_2() -> Self {
        Self::FRAC_PI_2
    }
    fn infinity() -> Self {
        Self::from(f64::INFINITY)
    }
    fn is_infinite(self) -> bool {
        self.hi.is_infinite()
    }
    fn is_finite(self) -> bool {
        self.hi.is_finite()
    }

    fn exp(self) -> Self {
        if self.hi.is_nan() {
            return self;
        }
        if self.hi > 709.78 {
            return Self::infinity();
        }
        if self.hi < -745.2 {
            return Self::ZERO;
        }
        let k = (self.hi / Self::LN_2.hi).round();
        let r = (self - Self::LN_2.mul_f64(k)).ldexp(-10);
        // expm1 on the reduced argument, |r| < 3.4e-4
        let mut term = r;
        let mut sum = r;
        for i in 2..=16 {
            term = (term * r).div_f64(i as f64);
            sum += term;
            if term.hi.abs() < 1e-40 {
                break;
            }
        }
        // (1 + s)^2 - 1 = 2s + s^2, ten times
        for _ in 0..10 {
            sum = sum.mul_f64(2.0) + sum.square();
        }
        (sum + Self::ONE).ldexp(k as i32)
    }

    fn ln(self) -> Self {
        if self.hi <= 0.0 {
            return if self.hi == 0.0 {
                -Self::infinity()
            } else {
                Self::from(f64::NAN)
            };
        }
        if self.hi.is_infinite() {
            return self;
        }
        // one Newton step on exp(y) = a doubles the f64 accuracy
        let y0 = Self::from(self.hi.ln());
        y0 + self * (-y0).exp() - Self::ONE
    }

    fn cos(self) -> Self {
        if !self.hi.is_finite() {
            return Self::from(f64::NAN);
        }
        let j = (self.hi / Self::FRAC_PI_2.hi).round();
        let r = self - Self::FRAC_PI_2.mul_f64(j);
        let (s, c) = Self::sin_cos_small(r);
        match (j as i64).rem_euclid(4) {
            0 => c,
            1 => -s,
            2 => -c,
            _ => s,
        }
    }

    fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return if self.hi == 0.0 {
                Self::ZERO
            } else {
                Self::from(f64::NAN)
            };
        }
        if self.hi.is_infinite() {
            return self;
        }
        let x = 1.0 / self.hi.sqrt();
        let ax = self.hi * x;
        let (p, e) = two_prod(ax, ax);
        let diff = self - Self::new(p, e);
        let (h, l) = two_sum(ax, diff.hi * (x * 0.5));
        Self::finish(h, l)
    }

    fn powi(self, n: i32) -> Self {
        let mut base = self;
        let mut e = n.unsigned_abs();
        let mut acc = Self::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base.square();
            e >>= 1;
        }
        if n < 0 {
            Self::ONE / acc
        } else {
            acc
        }
    }

    fn from_rational(r: &BigRational) -> Self {
        let hi = rational_to_f64(r);
        if !hi.is_finite() || hi == 0.0 {
            return Self::from(hi);
        }
        let rest = r - f64_to_rational(hi);
        Self::new(hi, rational_to_f64(&rest))
    }

    fn to_rational(self) -> BigRational {
        f64_to_rational(self.hi) + f64_to_rational(self.lo)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Dd = DoubleDouble;

    // reference digits from a 50-digit mpmath evaluation
    fn close(x: Dd, hi: f64, lo: f64, rel: f64) {
        let want = Dd::new(hi, lo);
        let err = ((x - want) / want).abs();
        assert!(err.hi < rel, "{x:?} vs {want:?}: rel err {:e}", err.hi);
    }

    #[test]
    fn arithmetic_is_double_double() {
        let third = Dd::ONE / Dd::from(3.0);
        let back = third * Dd::from(3.0);
        assert!((back - Dd::ONE).abs().hi < 1e-31);
        let a = Dd::from(1.0) + Dd::from(1e-20);
        assert_eq!((a - Dd::ONE).hi, 1e-20);
    }

    #[test]
    fn exp_matches_reference() {
        close(Dd::from(-1.0).exp(), 0.36787944117144233, -1.2428753672788363e-17, 1e-30);
        close(Dd::from(0.5).exp(), 1.6487212707001282, -4.731568479435833e-17, 1e-30);
        close(Dd::from(-16.0).exp(), 1.1253517471925912e-07, -1.94396212385793e-24, 1e-30);
        close(Dd::from(-36.0).exp(), 2.3195228302435696e-16, -2.4569853636432666e-32, 1e-30);
        assert_eq!(Dd::from(-800.0).exp(), Dd::ZERO);
    }

    #[test]
    fn cos_and_ln_match_reference() {
        close(Dd::from(0.5).cos(), 0.8775825618903728, -4.2623149864279997e-17, 1e-30);
        close(Dd::from(1.5).cos(), 0.0707372016677029, 3.683512075225569e-18, 1e-29);
        close(Dd::from(1.5).ln(), 0.4054651081081644, -2.8811380259626426e-18, 1e-30);
        close(Dd::from(0.5).ln(), -0.6931471805599453, -2.3190468138462996e-17, 1e-30);
        assert!(Dd::FRAC_PI_2.cos().abs().hi < 1e-32);
    }

    #[test]
    fn sqrt_squares_back() {
        let two = Dd::from(2.0);
        let s = two.sqrt();
        assert!((s * s - two).abs().hi < 1e-31);
    }

    #[test]
    fn rational_round_trip() {
        let x = Dd::new(0.1, 1e-18);
        assert_eq!(Dd::from_rational(&x.to_rational()), x);
        assert_eq!(Dd::from_i64(1 << 60).unwrap().to_i64(), Some(1 << 60));
    }

    #[test]
    fn display_carries_thirty_digits() {
        let s = Dd::PI.to_string();
        assert!(s.starts_with("3.14159265358979323846264338327"), "{s}");
    }
}
