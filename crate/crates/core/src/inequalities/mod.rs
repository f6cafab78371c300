//! Checkers for the inequalities and squeezes around Wallis's formula, and the
//! enclosures of π, √π and the probability integral they produce.
//!
//! Certified checks compare exact values of the form `q·π^(k/2)`; after
//! squaring every comparison is rational against rational·π or rational·π².
//! Numeric checks run on quadrature and carry its uncertainty.

mod certified;
mod enclosures;
mod numeric;
mod suite;

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::exact::{scalar_compare, scalar_to_interval, truncate_decimal, Comparison, PiEnclosure, PiScalar, MAX_PI_DIGITS};

pub use certified::{
    check_moment_squeeze, check_moment_squeeze_with, check_product_identity, check_sqrt_limit_bounds,
    check_sqrt_limit_bounds_with, check_stieltjes, check_stieltjes_with, check_wallis_monotone,
    check_wallis_monotone_with,
};
pub use enclosures::{
    pi_enclosure_moments, pi_enclosure_wallis, probability_integral_enclosure, sqrtpi_enclosure_moments,
    Enclosure, EnclosureTarget, ProbabilityIntegralEnclosure,
};
pub use numeric::{
    check_disguise_poly, check_disguise_reciprocal, check_quadrature_moment, check_quadrature_wallis,
    check_spivak_sandwich, check_spivak_sandwich_with,
    check_truncated_containment,
};
pub use suite::{run_suite, Suite, SuiteConfig, SuiteReport, VerdictCounts};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Grade {
    /// Decided in exact arithmetic, possibly with a π enclosure.
    Certified,
    /// Decided from quadrature values and their reported uncertainty.
    Numeric,
}

impl Grade {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Certified => "CERTIFIED",
            Self::Numeric => "NUMERIC",
        }
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Grade {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "CERTIFIED" => Ok(Self::Certified),
            "NUMERIC" => Ok(Self::Numeric),
            _ => Err(invalid(format!("unknown grade `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Holds,
    Fails,
    Undecided,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Holds => "HOLDS",
            Self::Fails => "FAILS",
            Self::Undecided => "UNDECIDED",
        }
    }

    /// Both must hold; any failure fails.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Self::Fails, _) | (_, Self::Fails) => Self::Fails,
            (Self::Undecided, _) | (_, Self::Undecided) => Self::Undecided,
            _ => Self::Holds,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Verdict {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "HOLDS" => Ok(Self::Holds),
            "FAILS" => Ok(Self::Fails),
            "UNDECIDED" => Ok(Self::Undecided),
            _ => Err(invalid(format!("unknown verdict `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub n: u64,
    pub grade: Grade,
    pub verdict: Verdict,
    /// Both sides of the checked relation.
    pub witness: String,
}

impl CheckOutcome {
    pub(crate) fn new(name: &str, n: u64, grade: Grade, verdict: Verdict, witness: String) -> Self {
        Self {
            name: name.to_string(),
            n,
            grade,
            verdict,
            witness,
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

/// How often an undecided comparison is retried with a doubled enclosure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Escalation {
    pub retries: u32,
}

impl Default for Escalation {
    fn default() -> Self {
        Self { retries: 4 }
    }
}

impl Escalation {
    pub const NONE: Escalation = Escalation { retries: 0 };
}

/// Which relation a certified comparison must establish.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Less,
    LessOrEqual,
    Equal,
}

impl Relation {
    fn symbol(self) -> &'static str {
        match self {
            Self::Less => "<",
            Self::LessOrEqual => "≤",
            Self::Equal => "=",
        }
    }

    fn verdict(self, c: Comparison) -> Verdict {
        match (self, c) {
            (_, Comparison::Undecided) => Verdict::Undecided,
            (Self::Less, Comparison::Less) => Verdict::Holds,
            (Self::LessOrEqual, Comparison::Less | Comparison::Equal) => Verdict::Holds,
            (Self::Equal, Comparison::Equal) => Verdict::Holds,
            _ => Verdict::Fails,
        }
    }
}

/// Compares with `enc`, doubling its digits on an undecided result up to
/// `policy.retries` times. Returns the comparison and the digits used last.
pub fn compare_escalating(a: &PiScalar, b: &PiScalar, enc: &PiEnclosure, policy: Escalation) -> Result<(Comparison, u32)> {
    let mut c = scalar_compare(a, b, enc);
    let mut current = enc.clone();
    let mut tries = 0;
    while !c.is_decided() && tries < policy.retries && current.digits() < MAX_PI_DIGITS {
        current = current.refined(current.digits().saturating_mul(2))?;
        c = scalar_compare(a, b, &current);
        tries += 1;
    }
    Ok((c, current.digits()))
}

pub(crate) fn approx(x: &PiScalar, enc: &PiEnclosure) -> String {
    let iv = scalar_to_interval(x, enc);
    truncate_decimal(&iv.midpoint(), 12)
}

pub(crate) fn side(x: &PiScalar, enc: &PiEnclosure) -> String {
    if x.half_pi_power() == 0 {
        x.to_string()
    } else {
        format!("{x} ≈ {}", approx(x, enc))
    }
}

/// Certified check that `lhs rel rhs`, with escalation.
pub fn check_relation(
    name: &str,
    n: u64,
    lhs: &PiScalar,
    rel: Relation,
    rhs: &PiScalar,
    enc: &PiEnclosure,
    policy: Escalation,
) -> Result<CheckOutcome> {
    let (c, digits) = compare_escalating(lhs, rhs, enc, policy)?;
    let verdict = rel.verdict(c);
    let mut witness = format!("{} {} {}", side(lhs, enc), rel.symbol(), side(rhs, enc));
    if verdict != Verdict::Holds {
        witness.push_str(&format!(" [{}, π digits {digits}]", comparison_name(c)));
    }
    Ok(CheckOutcome::new(name, n, Grade::Certified, verdict, witness))
}

fn comparison_name(c: Comparison) -> &'static str {
    match c {
        Comparison::Less => "LESS",
        Comparison::Greater => "GREATER",
        Comparison::Equal => "EQUAL",
        Comparison::Undecided => "UNDECIDED",
    }
}
