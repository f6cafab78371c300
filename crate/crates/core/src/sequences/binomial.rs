//! Central binomial coefficients and the ratio `C(2n,n)·√(πn)/4ⁿ`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use crate::error::{invalid, Result};
use crate::exact::decimal::truncate_decimal;
use crate::exact::{pi_enclosure, scalar_to_interval, Interval, PiScalar, MAX_PI_DIGITS};

/// Exact `C(2n, n)` through `C(2k, k) = C(2k−2, k−1)·(4k−2)/k`.
pub fn central_binomial(n: u64) -> BigUint {
    let mut c = BigUint::one();
    for k in 1..=n {
        c *= 4 * k - 2;
        c /= k;
    }
    c
}

/// A certified decimal value: an enclosing interval and its truncated rendering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxValue {
    pub interval: Interval<BigRational>,
    pub decimal: String,
    /// Width of `interval`; bounds the distance between `decimal` and the true value
    /// up to the truncation of the last digit.
    pub error_bound: BigRational,
}

/// `(C(2n,n)/4ⁿ)² · n` as an exact rational; the ratio squared is this times π.
pub fn central_binomial_ratio_squared(n: u64) -> PiScalar {
    let c = BigInt::from(central_binomial(n));
    let q = BigRational::new(&c * &c * BigInt::from(n), BigInt::one() << (4 * n) as usize);
    PiScalar::new(q, 2)
}

/// `C(2n,n)·√(πn)/4ⁿ` to `digits` decimals, `n ≥ 1`.
pub fn central_binomial_ratio(n: u64, digits: u32) -> Result<ApproxValue> {
    if n == 0 {
        return Err(invalid("central_binomial_ratio is defined for n ≥ 1"));
    }
    if digits == 0 {
        return Err(invalid("digits must be positive"));
    }
    let squared = central_binomial_ratio_squared(n);
    let work = (digits + 4).min(MAX_PI_DIGITS);
    let enc = pi_enclosure(work)?;
    let interval = scalar_to_interval(&squared, &enc).sqrt_outward(work)?;
    let decimal = truncate_decimal(interval.lo(), digits);
    let error_bound = interval.width();
    Ok(ApproxValue {
        interval,
        decimal,
        error_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn small_coefficients() {
        let got: Vec<u64> = (0..6).map(|n| central_binomial(n).to_u64().unwrap()).collect();
        assert_eq!(got, vec![1, 2, 6, 20, 70, 252]);
    }

    #[test]
    fn ratio_examples() {
        let r1 = central_binomial_ratio(1, 4).unwrap();
        assert_eq!(r1.decimal, "0.8862");
        let r5 = central_binomial_ratio(5, 4).unwrap();
        assert_eq!(r5.decimal, "0.9753");
        assert!(central_binomial_ratio(0, 4).is_err());
    }
}
