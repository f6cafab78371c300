//! Helpers on top of `num_rational::BigRational` for the long products in
//! this crate.
//!
//! Multiplying a large reduced rational by a small fraction only needs gcds
//! against machine words, so partial products of tens of thousands of factors
//! never pay for a big-by-big gcd.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Multiplies a reduced rational by `num/den` and returns the reduced result.
///
/// Reduction is done with word-sized gcds only: if `p/q` and `a/b` are both
/// reduced then `(p/g2 · a/g1) / (q/g1 · b/g2)` is reduced, where
/// `g1 = gcd(a, q)` and `g2 = gcd(b, p)`.
pub fn mul_small(r: &BigRational, num: u64, den: u64) -> BigRational {
    assert!(den != 0, "mul_small: zero denominator");
    if num == 0 || r.is_zero() {
        return BigRational::zero();
    }
    let g = num.gcd(&den);
    let (a, b) = (num / g, den / g);
    let p = r.numer();
    let q = r.denom();
    let g1 = a.gcd(&rem_u64(q, a));
    let g2 = b.gcd(&rem_u64(p, b));
    let numer = (p / g2) * (a / g1);
    let denom = (q / g1) * (b / g2);
    BigRational::new_raw(numer, denom)
}

/// Squares a rational. The square of a reduced fraction is reduced.
pub fn square(r: &BigRational) -> BigRational {
    BigRational::new_raw(r.numer() * r.numer(), r.denom() * r.denom())
}

fn rem_u64(x: &BigInt, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    (x.magnitude() % m).to_u64().expect("remainder fits in u64")
}

fn ceil_sqrt(m: &BigUint) -> BigUint {
    let s = m.sqrt();
    if &(&s * &s) == m {
        s
    } else {
        s + 1u32
    }
}

/// Rational bounds `lo ≤ √r ≤ hi` with denominator `10^digits`.
///
/// `r` must be nonnegative.
pub fn sqrt_bounds(r: &BigRational, digits: u32) -> (BigRational, BigRational) {
    assert!(!r.is_negative(), "sqrt_bounds: negative argument");
    let scale = BigUint::from(10u32).pow(digits);
    let scaled = BigRational::from_integer(BigInt::from(&scale * &scale)) * r;
    let lo_arg = scaled.floor().to_integer();
    let hi_arg = scaled.ceil().to_integer();
    let lo = lo_arg.magnitude().sqrt();
    let hi = ceil_sqrt(hi_arg.magnitude());
    let den = BigInt::from(scale);
    (
        BigRational::new(BigInt::from(lo), den.clone()),
        BigRational::new(BigInt::from(hi), den),
    )
}

/// Product tree over big unsigned integers.
pub fn product_tree(mut xs: Vec<BigUint>) -> BigUint {
    if xs.is_empty() {
        return BigUint::one();
    }
    while xs.len() > 1 {
        let mut next = Vec::with_capacity(xs.len().div_ceil(2));
        let mut it = xs.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(a * b),
                None => next.push(a),
            }
        }
        xs = next;
    }
    xs.pop().unwrap()
}

/// A rational held as a vector of prime exponents.
///
/// Every factor pushed must lie in `1..=limit`. Evaluating builds numerator
/// and denominator by balanced product trees of prime powers, so the result is
/// reduced without a single gcd.
#[derive(Debug, Clone)]
pub struct FactorProduct {
    smallest_factor: Vec<u32>,
    exponents: Vec<i64>,
}

impl FactorProduct {
    pub fn new(limit: u32) -> Self {
        let limit = limit.max(2) as usize;
        let mut spf = vec![0u32; limit + 1];
        for i in 2..=limit {
            if spf[i] == 0 {
                let mut j = i;
                while j <= limit {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                    j += i;
                }
            }
        }
        Self {
            smallest_factor: spf,
            exponents: vec![0; limit + 1],
        }
    }

    fn add(&mut self, mut k: u32, sign: i64) {
        assert!(k >= 1 && (k as usize) < self.smallest_factor.len(), "factor {k} out of range");
        while k > 1 {
            let p = self.smallest_factor[k as usize];
            self.exponents[p as usize] += sign;
            k /= p;
        }
    }

    pub fn mul(&mut self, k: u32) {
        self.add(k, 1);
    }

    pub fn div(&mut self, k: u32) {
        self.add(k, -1);
    }

    /// Doubles every exponent.
    pub fn square(&mut self) {
        for e in &mut self.exponents {
            *e *= 2;
        }
    }

    pub fn to_rational(&self) -> BigRational {
        let mut num = Vec::new();
        let mut den = Vec::new();
        for (p, &e) in self.exponents.iter().enumerate() {
            if e > 0 {
                num.push(BigUint::from(p).pow(e as u32));
            } else if e < 0 {
                den.push(BigUint::from(p).pow((-e) as u32));
            }
        }
        BigRational::new_raw(
            BigInt::from_biguint(Sign::Plus, product_tree(num)),
            BigInt::from_biguint(Sign::Plus, product_tree(den)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn mul_small_matches_generic_multiplication() {
        let r = rat(-35, 66);
        for (a, b) in [(6u64, 7u64), (11, 5), (22, 35), (0, 3), (12, 18)] {
            let expect = &r * rat(a as i64, b as i64);
            let got = mul_small(&r, a, b);
            assert_eq!(got, expect);
            assert_eq!(got.numer().gcd(got.denom()), BigInt::one());
        }
    }

    #[test]
    fn sqrt_bounds_bracket() {
        let two = rat(2, 1);
        let (lo, hi) = sqrt_bounds(&two, 20);
        assert!(square(&lo) <= two && square(&hi) >= two);
        assert!(&hi - &lo <= rat(1, 10).pow(20));
        let (lo, hi) = sqrt_bounds(&rat(9, 4), 5);
        assert_eq!(lo, rat(3, 2));
        assert_eq!(hi, rat(3, 2));
    }

    #[test]
    fn factor_product_reduces() {
        let mut f = FactorProduct::new(100);
        for k in [12, 35, 64] {
            f.mul(k);
        }
        for k in [18, 14, 100] {
            f.div(k);
        }
        assert_eq!(f.to_rational(), rat(12 * 35 * 64, 18 * 14 * 100));
    }
}
