//! Wallis integrals `I_n = ∫₀^{π/2} cosⁿx dx` and Gaussian moments
//! `E_n = ∫₀^∞ xⁿ e^{−x²} dx` as exact `q·π^(k/2)` values.
//!
//! The primary routes iterate the reduction formulas
//! `I_n = (n−1)/n · I_{n−2}` and `E_{n+2} = (n+1)/2 · E_n`. The closed forms are
//! computed independently from factorials and double factorials.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use crate::exact::rational::mul_small;
use crate::exact::PiScalar;

fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

/// `E_0 = √π/2`, the probability integral.
///
/// This is the single place where the value of `E_0` enters; every even
/// moment is a rational multiple of it.
pub fn probability_integral() -> PiScalar {
    PiScalar::new(half(), 1)
}

/// `I_0 = π/2`, `I_1 = 1`.
fn wallis_base(parity: u64) -> PiScalar {
    if parity == 0 {
        PiScalar::new(half(), 2)
    } else {
        PiScalar::one()
    }
}

/// Exact `I_n` by iterating the reduction formula from `I_0` or `I_1`.
pub fn wallis_integral(n: u64) -> PiScalar {
    let base = wallis_base(n % 2);
    let mut coeff = base.coeff().clone();
    let mut m = n % 2 + 2;
    while m <= n {
        coeff = mul_small(&coeff, m - 1, m);
        m += 2;
    }
    PiScalar::new(coeff, base.half_pi_power())
}

/// `I_0, …, I_max` by the reduction formula.
pub fn wallis_integrals(max_n: u64) -> Vec<PiScalar> {
    let mut out: Vec<PiScalar> = Vec::with_capacity(max_n as usize + 1);
    for n in 0..=max_n {
        let v = if n < 2 {
            wallis_base(n)
        } else {
            let prev = &out[(n - 2) as usize];
            PiScalar::new(mul_small(prev.coeff(), n - 1, n), prev.half_pi_power())
        };
        out.push(v);
    }
    out
}

/// `I_{2m} = π/2 · (1/2)(3/4)···((2m−1)/(2m))`, `I_{2m+1} = (2/3)(4/5)···(2m/(2m+1))`.
pub fn wallis_integral_closed_form(n: u64) -> PiScalar {
    let m = n / 2;
    let (num, den) = if n % 2 == 0 {
        (odd_double_factorial(m), even_double_factorial(m))
    } else {
        (even_double_factorial(m), odd_double_factorial(m + 1))
    };
    let q = BigRational::new(BigInt::from(num), BigInt::from(den));
    if n % 2 == 0 {
        PiScalar::new(q * half(), 2)
    } else {
        PiScalar::rational(q)
    }
}

/// `1·3·5···(2m−1)`.
fn odd_double_factorial(m: u64) -> BigUint {
    (1..=m).fold(BigUint::one(), |acc, k| acc * (2 * k - 1))
}

/// `2·4···2m`.
fn even_double_factorial(m: u64) -> BigUint {
    (1..=m).fold(BigUint::one(), |acc, k| acc * (2 * k))
}

fn factorial(m: u64) -> BigUint {
    (1..=m).fold(BigUint::one(), |acc, k| acc * k)
}

fn moment_base(parity: u64) -> PiScalar {
    if parity == 0 {
        probability_integral()
    } else {
        PiScalar::new(half(), 0)
    }
}

/// Exact `E_n` by iterating `E_{n+2} = (n+1)/2 · E_n` from `E_0` or `E_1 = 1/2`.
pub fn moment_integral(n: u64) -> PiScalar {
    let base = moment_base(n % 2);
    let mut coeff = base.coeff().clone();
    let mut m = n % 2;
    while m + 2 <= n {
        coeff = mul_small(&coeff, m + 1, 2);
        m += 2;
    }
    PiScalar::new(coeff, base.half_pi_power())
}

/// `E_0, …, E_max` by the reduction formula.
pub fn moment_integrals(max_n: u64) -> Vec<PiScalar> {
    let mut out: Vec<PiScalar> = Vec::with_capacity(max_n as usize + 1);
    for n in 0..=max_n {
        let v = if n < 2 {
            moment_base(n)
        } else {
            let prev = &out[(n - 2) as usize];
            PiScalar::new(mul_small(prev.coeff(), n - 1, 2), prev.half_pi_power())
        };
        out.push(v);
    }
    out
}

/// `E_{2m} = (1·3···(2m−1))/2^m · E_0` and `E_{2m+1} = m!/2`.
pub fn moment_integral_closed_form(n: u64) -> PiScalar {
    let m = n / 2;
    if n % 2 == 1 {
        return PiScalar::rational(BigRational::new(BigInt::from(factorial(m)), 2.into()));
    }
    let q = BigRational::new(
        BigInt::from(odd_double_factorial(m)),
        BigInt::from(BigUint::one() << m as usize),
    );
    &PiScalar::rational(q) * &probability_integral()
}
