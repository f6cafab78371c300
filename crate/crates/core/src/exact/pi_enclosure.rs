//! Certified rational enclosure of π from the Machin identity
//! `π/4 = 4·arctan(1/5) − arctan(1/239)`.
//!
//! Each arctangent series is summed in fixed point with directed rounding:
//! the lower sum floors every positive term and ceils every negative one, the
//! upper sum does the opposite. The alternating-series remainder closes the
//! bracket, so the result contains π with no floating point involved.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::interval::Interval;
use super::rational::sqrt_bounds;
use crate::error::{invalid, Result};

pub const MAX_PI_DIGITS: u32 = 1000;

/// A rational interval that provably contains π, of width at most `10^-digits`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiEnclosure {
    interval: Interval<BigRational>,
    digits: u32,
}

impl PiEnclosure {
    pub fn interval(&self) -> &Interval<BigRational> {
        &self.interval
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Enclosure of √π with `10^-(digits+3)` outward rounding on each side.
    pub fn sqrt_pi(&self) -> Interval<BigRational> {
        let d = self.digits + 3;
        let (lo, _) = sqrt_bounds(self.interval.lo(), d);
        let (_, hi) = sqrt_bounds(self.interval.hi(), d);
        Interval::new(lo, hi).expect("monotone square root keeps order")
    }

    /// The same enclosure recomputed with more digits, capped at the maximum.
    pub fn refined(&self, digits: u32) -> Result<PiEnclosure> {
        pi_enclosure(digits.min(MAX_PI_DIGITS))
    }
}

/// Bounds `[lo, hi]` on `scale·arctan(1/x)` from `terms` series terms.
fn arctan_inv_scaled(x: u64, terms: u64, scale: &BigInt) -> (BigInt, BigInt) {
    let x2 = BigInt::from(x) * BigInt::from(x);
    let mut power = BigInt::from(x);
    let mut lo = BigInt::zero();
    let mut hi = BigInt::zero();
    for k in 0..terms {
        let denom = &power * BigInt::from(2 * k + 1);
        let (q, r) = scale.div_rem(&denom);
        let ceil = if r.is_zero() { q.clone() } else { &q + 1 };
        if k % 2 == 0 {
            lo += &q;
            hi += ceil;
        } else {
            lo -= ceil;
            hi -= q;
        }
        power *= &x2;
    }
    // first omitted term; the true value lies between S_m and S_m ± t_m
    let denom = &power * BigInt::from(2 * terms + 1);
    let tail = scale.div_ceil(&denom);
    if terms % 2 == 0 {
        hi += tail;
    } else {
        lo -= tail;
    }
    (lo, hi)
}

fn terms_for(x: u64, digits: u32) -> u64 {
    // (2m+1)·log10(x) ≥ digits + 3
    let need = (digits as f64 + 3.0) / (x as f64).log10();
    ((need - 1.0) / 2.0).ceil().max(1.0) as u64 + 1
}

/// Certified enclosure of π with width at most `10^-digits`, `1 ≤ digits ≤ 1000`.
pub fn pi_enclosure(digits: u32) -> Result<PiEnclosure> {
    if digits == 0 || digits > MAX_PI_DIGITS {
        return Err(invalid(format!(
            "pi enclosure digits must lie in 1..={MAX_PI_DIGITS}, got {digits}"
        )));
    }
    let work = digits + 6;
    let scale = BigInt::from(10u32).pow(work);
    let (a_lo, a_hi) = arctan_inv_scaled(5, terms_for(5, digits), &scale);
    let (b_lo, b_hi) = arctan_inv_scaled(239, terms_for(239, digits), &scale);
    let lo = a_lo * BigInt::from(16) - b_hi * BigInt::from(4);
    let hi = a_hi * BigInt::from(16) - b_lo * BigInt::from(4);

    // outward rounding onto the coarser grid 10^-(digits+3)
    let shrink = BigInt::from(1000u32);
    let out_den = BigInt::from(10u32).pow(digits + 3);
    let lo = BigRational::new(lo.div_floor(&shrink), out_den.clone());
    let hi = BigRational::new(hi.div_ceil(&shrink), out_den);

    let interval = Interval::new(lo, hi)?;
    debug_assert!(interval.width() <= BigRational::new(BigInt::one(), BigInt::from(10u32).pow(digits)));
    debug_assert!(*interval.lo() > BigRational::from_integer(3.into()));
    debug_assert!(*interval.hi() < BigRational::from_integer(4.into()));
    Ok(PiEnclosure { interval, digits })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::decimal::truncate_decimal;

    fn r(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn one_digit() {
        let e = pi_enclosure(1).unwrap();
        let iv = e.interval();
        assert!(*iv.lo() >= r(31, 10) && *iv.hi() <= r(32, 10));
        assert!(iv.contains(&r(314159, 100000)));
    }

    #[test]
    fn ten_digits() {
        let e = pi_enclosure(10).unwrap();
        let iv = e.interval();
        // π = 3.14159265358979323846…
        assert!(*iv.lo() < r(314159265358979324, 100_000_000_000_000_000));
        assert!(*iv.hi() > r(314159265358979323, 100_000_000_000_000_000));
        assert!(iv.width() <= r(1, 10_000_000_000));
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(pi_enclosure(0).is_err());
        assert!(pi_enclosure(1001).is_err());
    }

    #[test]
    fn agrees_with_known_digits() {
        let known = "3.14159265358979323846264338327950288419716939937510582097494459";
        let e = pi_enclosure(60).unwrap();
        assert_eq!(&truncate_decimal(e.interval().lo(), 60), &known[..62]);
    }

    #[test]
    fn thousand_digits() {
        let e = pi_enclosure(1000).unwrap();
        let w = e.interval().width();
        assert!(w <= BigRational::new(BigInt::one(), BigInt::from(10u32).pow(1000)));
    }

    #[test]
    fn sqrt_pi_squares_back() {
        let e = pi_enclosure(20).unwrap();
        let s = e.sqrt_pi();
        let sq = &s * &s;
        assert!(e.interval().is_subset_of(&sq));
        assert_eq!(truncate_decimal(s.lo(), 15), "1.772453850905516");
        assert_eq!(truncate_decimal(s.hi(), 15), "1.772453850905516");
    }
}
