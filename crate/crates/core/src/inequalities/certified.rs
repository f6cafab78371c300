use num_rational::BigRational;

use super::{check_relation, side, CheckOutcome, Escalation, Grade, Relation, Verdict};
use crate::error::{invalid, Result};
use crate::exact::{mul_small, PiEnclosure, PiScalar};
use crate::sequences::{moment_integral, probability_integral, wallis_integral, WallisPartials};

fn ratio(p: u64, q: u64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

pub fn check_stieltjes(n: u64, enc: &PiEnclosure) -> Result<CheckOutcome> {
    check_stieltjes_with(n, enc, Escalation::default())
}

/// `E_n² < E_{n+1}·E_{n−1}` for `n ≥ 1`.
pub fn check_stieltjes_with(n: u64, enc: &PiEnclosure, policy: Escalation) -> Result<CheckOutcome> {
    if n == 0 {
        return Err(invalid("log-convexity check needs n ≥ 1"));
    }
    let lhs = moment_integral(n).squared();
    let rhs = &moment_integral(n + 1) * &moment_integral(n - 1);
    check_relation("stieltjes", n, &lhs, Relation::Less, &rhs, enc, policy)
}

pub fn check_moment_squeeze(n: u64, enc: &PiEnclosure) -> Result<CheckOutcome> {
    check_moment_squeeze_with(n, enc, Escalation::default())
}

/// With `P_n = Π 2k/(2k−1)`, the squared chain
/// `(2n/(2n+1))·P_n²/n ≤ (2E_0)² ≤ P_n²/n`.
pub fn check_moment_squeeze_with(n: u64, enc: &PiEnclosure, policy: Escalation) -> Result<CheckOutcome> {
    if n == 0 {
        return Err(invalid("moment squeeze needs n ≥ 1"));
    }
    let p_sq = evens_over_odds_squared(n);
    let upper = PiScalar::rational(mul_small(&p_sq, 1, n));
    let lower = PiScalar::rational(mul_small(&p_sq, 2, 2 * n + 1));
    let middle = (&PiScalar::from_ratio(2, 1) * &probability_integral()).squared();
    let lo = check_relation("moment_squeeze", n, &lower, Relation::LessOrEqual, &middle, enc, policy)?;
    let hi = check_relation("moment_squeeze", n, &middle, Relation::LessOrEqual, &upper, enc, policy)?;
    let witness = format!("{} ≤ (2E_0)² = {} ≤ {}", side(&lower, enc), side(&middle, enc), side(&upper, enc));
    Ok(CheckOutcome::new(
        "moment_squeeze",
        n,
        Grade::Certified,
        lo.verdict.and(hi.verdict),
        witness,
    ))
}

pub(crate) fn evens_over_odds_squared(n: u64) -> BigRational {
    let mut p = WallisPartials::new();
    while p.n() < n {
        p.advance();
    }
    let e = p.evens_over_odds();
    BigRational::new_raw(e.numer() * e.numer(), e.denom() * e.denom())
}

pub fn check_wallis_monotone(n: u64, enc: &PiEnclosure) -> Result<CheckOutcome> {
    check_wallis_monotone_with(n, enc, Escalation::default())
}

/// `I_{n+1} < I_n`.
pub fn check_wallis_monotone_with(n: u64, enc: &PiEnclosure, policy: Escalation) -> Result<CheckOutcome> {
    let lhs = wallis_integral(n + 1);
    let rhs = wallis_integral(n);
    check_relation("wallis_monotone", n, &lhs, Relation::Less, &rhs, enc, policy)
}

/// `n·I_n·I_{n−1} = π/2`, exactly.
pub fn check_product_identity(n: u64) -> Result<CheckOutcome> {
    if n == 0 {
        return Err(invalid("product identity needs n ≥ 1"));
    }
    let lhs = (&wallis_integral(n) * &wallis_integral(n - 1)).scale(&ratio(n, 1));
    let rhs = PiScalar::new(ratio(1, 2), 2);
    let verdict = if lhs == rhs { Verdict::Holds } else { Verdict::Fails };
    Ok(CheckOutcome::new(
        "product_identity",
        n,
        Grade::Certified,
        verdict,
        format!("{lhs} = {rhs}"),
    ))
}

pub fn check_sqrt_limit_bounds(n: u64, enc: &PiEnclosure) -> Result<CheckOutcome> {
    check_sqrt_limit_bounds_with(n, enc, Escalation::default())
}

/// `(n/(n+1))·π/2 ≤ n·I_n² ≤ π/2`.
pub fn check_sqrt_limit_bounds_with(n: u64, enc: &PiEnclosure, policy: Escalation) -> Result<CheckOutcome> {
    if n == 0 {
        return Err(invalid("square-root limit bounds need n ≥ 1"));
    }
    let middle = wallis_integral(n).squared().scale(&ratio(n, 1));
    let upper = PiScalar::new(ratio(1, 2), 2);
    let lower = upper.scale(&ratio(n, n + 1));
    let lo = check_relation("sqrt_limit_bounds", n, &lower, Relation::LessOrEqual, &middle, enc, policy)?;
    let hi = check_relation("sqrt_limit_bounds", n, &middle, Relation::LessOrEqual, &upper, enc, policy)?;
    let witness = format!("{} ≤ n·I_n² = {} ≤ {}", side(&lower, enc), side(&middle, enc), side(&upper, enc));
    Ok(CheckOutcome::new(
        "sqrt_limit_bounds",
        n,
        Grade::Certified,
        lo.verdict.and(hi.verdict),
        witness,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::pi_enclosure;

    fn enc() -> PiEnclosure {
        pi_enclosure(20).unwrap()
    }

    #[test]
    fn stieltjes_small() {
        for n in [1, 2, 3, 10] {
            assert!(check_stieltjes(n, &enc()).unwrap().holds(), "n = {n}");
        }
        let coarse = pi_enclosure(1).unwrap();
        assert!(check_stieltjes_with(1, &coarse, Escalation::NONE).unwrap().holds());
        assert!(check_stieltjes(0, &enc()).is_err());
    }

    #[test]
    fn squeeze_examples() {
        let out = check_moment_squeeze(1, &enc()).unwrap();
        assert!(out.holds());
        assert!(out.witness.starts_with("8/3 ≤"), "{}", out.witness);
        assert!(check_moment_squeeze(10, &enc()).unwrap().holds());
        assert!(check_moment_squeeze(0, &enc()).is_err());
    }

    #[test]
    fn wallis_checks() {
        for n in [0, 1, 20] {
            assert!(check_wallis_monotone(n, &enc()).unwrap().holds());
        }
        for n in [1, 2, 7] {
            let out = check_product_identity(n).unwrap();
            assert!(out.holds());
            assert_eq!(out.grade, Grade::Certified);
        }
        for n in [1, 2, 50] {
            assert!(check_sqrt_limit_bounds(n, &enc()).unwrap().holds());
        }
    }
}
