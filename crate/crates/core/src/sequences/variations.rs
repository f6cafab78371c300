//! The five equivalent restatements of Wallis's formula and their limits.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::binomial::central_binomial;
use super::wallis::{ProductForm, WallisPartials};
use crate::error::{invalid, Error, Result};
use crate::exact::rational::square;
use crate::exact::{scalar_to_interval, Interval, PiEnclosure, PiScalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VariationId {
    /// `(1/√n)·(2/1 · 4/3 ··· 2n/(2n−1)) → √π`
    V1,
    /// `√n·(2/3 · 4/5 ··· 2n/(2n+1)) → √π/2`
    V2,
    /// `√n·(1/2 · 3/4 ··· (2n−1)/(2n)) → 1/√π`
    V3,
    /// `Π (1 − 1/(2k)²) → 2/π`
    V4,
    /// `(2n)!·√(πn) / ((n!)²·4ⁿ) → 1`
    V5,
}

impl VariationId {
    pub const ALL: [VariationId; 5] = [Self::V1, Self::V2, Self::V3, Self::V4, Self::V5];

    pub fn limit(self) -> Limit {
        let half = BigRational::new(1.into(), 2.into());
        match self {
            Self::V1 => Limit::Value(PiScalar::sqrt_pi()),
            Self::V2 => Limit::Value(PiScalar::new(half, 1)),
            Self::V3 => Limit::Reciprocal(PiScalar::sqrt_pi()),
            Self::V4 => Limit::Reciprocal(PiScalar::new(half, 2)),
            Self::V5 => Limit::Value(PiScalar::one()),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::V1 => "v1",
            Self::V2 => "v2",
            Self::V3 => "v3",
            Self::V4 => "v4",
            Self::V5 => "v5",
        }
    }
}

impl fmt::Display for VariationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for VariationId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "v1" => Ok(Self::V1),
            "v2" => Ok(Self::V2),
            "v3" => Ok(Self::V3),
            "v4" => Ok(Self::V4),
            "v5" => Ok(Self::V5),
            _ => Err(invalid(format!("unknown variation `{s}`"))),
        }
    }
}

/// A limit value: either a `PiScalar` or the reciprocal of one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Limit {
    Value(PiScalar),
    Reciprocal(PiScalar),
}

impl Limit {
    pub fn to_interval(&self, enc: &PiEnclosure) -> Result<Interval<BigRational>> {
        match self {
            Limit::Value(x) => Ok(scalar_to_interval(x, enc)),
            Limit::Reciprocal(x) => scalar_to_interval(x, enc).recip(),
        }
    }
}

impl fmt::Display for Limit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Limit::Value(x) => write!(f, "{x}"),
            Limit::Reciprocal(x) => write!(f, "1/({x})"),
        }
    }
}

/// `rational · √radicand · π^(k/2)`.
///
/// Squaring removes the root, so `squared()` is an exact `PiScalar`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariationTerm {
    pub rational: BigRational,
    pub radicand: BigRational,
    pub half_pi_power: u32,
}

impl VariationTerm {
    pub fn squared(&self) -> PiScalar {
        PiScalar::new(square(&self.rational) * &self.radicand, 2 * self.half_pi_power)
    }

    /// Interval for the (positive) term via the square of it.
    pub fn to_interval(&self, enc: &PiEnclosure, digits: u32) -> Result<Interval<BigRational>> {
        scalar_to_interval(&self.squared(), enc).sqrt_outward(digits)
    }
}

impl fmt::Display for VariationTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rational)?;
        if !self.radicand.is_one() {
            write!(f, "·√({})", self.radicand)?;
        }
        match self.half_pi_power {
            0 => Ok(()),
            1 => write!(f, "·√π"),
            2 => write!(f, "·π"),
            k => write!(f, "·π^({k}/2)"),
        }
    }
}

fn nat(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Builds the term from partial products already advanced to `n`.
pub(crate) fn term_from_partials(v: VariationId, p: &WallisPartials) -> VariationTerm {
    let n = p.n();
    let (rational, radicand, k) = match v {
        VariationId::V1 => (p.evens_over_odds().clone(), nat(n).recip(), 0),
        VariationId::V2 => (p.evens_over_next_odds().clone(), nat(n), 0),
        VariationId::V3 => (p.evens_over_odds().recip(), nat(n), 0),
        VariationId::V4 => (p.value(ProductForm::Paired).recip(), BigRational::one(), 0),
        VariationId::V5 => {
            let c = BigInt::from(central_binomial(n));
            (BigRational::new(c, BigInt::one() << (2 * n) as usize), nat(n), 1)
        }
    };
    VariationTerm {
        rational,
        radicand,
        half_pi_power: k,
    }
}

/// Exact n-th term of a variation, `n ≥ 1`.
pub fn variation_term(v: VariationId, n: u64) -> Result<VariationTerm> {
    if n == 0 {
        return Err(invalid("variation terms are indexed from n = 1"));
    }
    let mut p = WallisPartials::new();
    for _ in 0..n {
        p.advance();
    }
    Ok(term_from_partials(v, &p))
}
