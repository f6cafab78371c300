use std::fmt;

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::One;

use super::certified::evens_over_odds_squared;
use crate::error::{invalid, Result};
use crate::exact::rational::square;
use crate::exact::{mul_small, pi_enclosure, scalar_to_interval, Interval};
use crate::sequences::{wallis_integral, wallis_product, ProductForm};

/// Decimals kept by the outward square roots.
const ROOT_DIGITS: u32 = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EnclosureTarget {
    Pi,
    SqrtPi,
    /// `∫₀^∞ e^{−x²} dx = √π/2`.
    ProbabilityIntegral,
    /// `∫₀^{√n} e^{−x²} dx`.
    TruncatedProbabilityIntegral,
}

impl EnclosureTarget {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Pi => "PI",
            Self::SqrtPi => "SQRT_PI",
            Self::ProbabilityIntegral => "PROBABILITY_INTEGRAL",
            Self::TruncatedProbabilityIntegral => "TRUNCATED_PROBABILITY_INTEGRAL",
        }
    }
}

impl fmt::Display for EnclosureTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Exact rational bounds `lo ≤ target ≤ hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enclosure {
    pub target: EnclosureTarget,
    pub n: u64,
    pub lo: BigRational,
    pub hi: BigRational,
    pub width: BigRational,
}

impl Enclosure {
    pub fn new(target: EnclosureTarget, n: u64, interval: Interval<BigRational>) -> Self {
        let width = interval.width();
        let (lo, hi) = interval.into_bounds();
        Self { target, n, lo, hi, width }
    }

    pub fn interval(&self) -> Interval<BigRational> {
        Interval::new(self.lo.clone(), self.hi.clone()).expect("enclosure endpoints are ordered")
    }
}

/// `π ∈ [2a_n, 2a_n·(2n+1)/(2n)]`, of width `a_n/n`.
pub fn pi_enclosure_wallis(n: u64) -> Result<Enclosure> {
    let a = wallis_product(n, ProductForm::Paired)?;
    let lo = mul_small(&a, 2, 1);
    let hi = mul_small(&a, 2 * n + 1, n);
    Ok(Enclosure::new(EnclosureTarget::Pi, n, Interval::new(lo, hi)?))
}

/// `π = (2E_0)² ∈ [2P_n²/(2n+1), P_n²/n]` with `P_n = Π 2k/(2k−1)`.
pub fn pi_enclosure_moments(n: u64) -> Result<Enclosure> {
    if n == 0 {
        return Err(invalid("moment enclosure needs n ≥ 1"));
    }
    let p_sq = evens_over_odds_squared(n);
    let lo = mul_small(&p_sq, 2, 2 * n + 1);
    let hi = mul_small(&p_sq, 1, n);
    Ok(Enclosure::new(EnclosureTarget::Pi, n, Interval::new(lo, hi)?))
}

/// Outward square root of [`pi_enclosure_moments`].
pub fn sqrtpi_enclosure_moments(n: u64) -> Result<Enclosure> {
    let pi = pi_enclosure_moments(n)?;
    let root = pi.interval().sqrt_outward(ROOT_DIGITS)?;
    Ok(Enclosure::new(EnclosureTarget::SqrtPi, n, root))
}

/// Bounds on `∫₀^{√n} e^{−x²} dx` from `√n·I_{2n+1} ≤ · ≤ √n·I_{2n−2}`, and on
/// the full integral after adding the tail beyond `√n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbabilityIntegralEnclosure {
    pub n: u64,
    /// Squared bounds `[n·I_{2n+1}², n·I_{2n−2}²]` before the root; the upper
    /// one is widened through a π² enclosure.
    pub truncated_squared: Interval<BigRational>,
    pub truncated: Enclosure,
    /// Rational upper bound on `∫_{√n}^∞ e^{−x²} dx`.
    pub tail_bound: BigRational,
    pub full: Enclosure,
}

/// Rational bound `≥ e^{−n}/(2√n)`, from `e^{−n} ≤ 2^{−⌊1.4426·n⌋}` and `√n ≥ ⌊√n⌋`.
fn gauss_tail_rational(n: u64) -> BigRational {
    let shift = (n as f64 * 1.4426).floor() as usize;
    let denom = (BigInt::one() << (shift + 1)) * BigInt::from(n.sqrt());
    BigRational::new(BigInt::one(), denom)
}

pub fn probability_integral_enclosure(n: u64) -> Result<ProbabilityIntegralEnclosure> {
    if n < 2 {
        return Err(invalid("probability-integral enclosure needs n ≥ 2"));
    }
    let enc = pi_enclosure(ROOT_DIGITS)?;
    let nq = BigRational::from_integer(n.into());
    let lower_sq = &nq * square(wallis_integral(2 * n + 1).coeff());
    let upper_sq = scalar_to_interval(&wallis_integral(2 * n - 2).squared().scale(&nq), &enc);
    let truncated_squared = Interval::new(lower_sq.clone(), upper_sq.hi().clone())?;
    let truncated = Enclosure::new(
        EnclosureTarget::TruncatedProbabilityIntegral,
        n,
        truncated_squared.sqrt_outward(ROOT_DIGITS)?,
    );
    let tail_bound = gauss_tail_rational(n);
    let full = Enclosure::new(
        EnclosureTarget::ProbabilityIntegral,
        n,
        Interval::new(truncated.lo.clone(), &truncated.hi + &tail_bound)?,
    );
    Ok(ProbabilityIntegralEnclosure {
        n,
        truncated_squared,
        truncated,
        tail_bound,
        full,
    })
}
