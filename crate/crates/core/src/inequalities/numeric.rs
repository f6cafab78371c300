use num_rational::BigRational;

use super::enclosures::probability_integral_enclosure;
use super::{CheckOutcome, Grade, Verdict};
use crate::error::{invalid, Result};
use crate::exact::{scalar_to_interval, PiEnclosure, PiScalar};
use crate::quadrature::{gauss_truncated_with, integrate_with, IntegrandFamily, QuadConfig, QuadResult};
use crate::scalar::Scalar;
use crate::sequences::{moment_integral, wallis_integral};
use crate::Working;

fn dd(x: f64) -> Working {
    Working::from(x)
}

/// Quadrature runs at `tol` but never looser than 1e-6.
fn quad_tol(tol: f64) -> Working {
    dd(tol.min(1e-6).max(crate::quadrature::MIN_TOL))
}

/// Value and half-width of a quadrature member; the half-width is never below `tol`.
fn member(r: &QuadResult<Working>, tol: Working) -> (Working, Working) {
    (r.value, r.total_uncertainty().max(tol))
}

/// Decides `a < b` given half-widths: HOLDS when the gap beats both, FAILS when
/// the reverse gap does, UNDECIDED in between.
fn ordered(a: (Working, Working), b: (Working, Working)) -> Verdict {
    let margin = b.0 - a.0;
    let spread = a.1 + b.1;
    if margin > spread {
        Verdict::Holds
    } else if margin < -spread {
        Verdict::Fails
    } else {
        Verdict::Undecided
    }
}

fn show(x: (Working, Working)) -> String {
    format!("{:.14} ± {:.2e}", x.0.to_float(), x.1.to_float())
}

pub fn check_spivak_sandwich(n: u64, tol: f64) -> Result<CheckOutcome> {
    check_spivak_sandwich_with(n, tol, &QuadConfig::default())
}

/// `∫₀¹(1−x²)ⁿ ≤ (1/√n)∫₀^{√n} e^{−x²} ≤ ∫₀^∞(1+x²)^{−n}`, all three by
/// quadrature. Each member counts as uncertain by at least `tol`.
pub fn check_spivak_sandwich_with(n: u64, tol: f64, config: &QuadConfig) -> Result<CheckOutcome> {
    if n == 0 {
        return Err(invalid("sandwich needs n ≥ 1"));
    }
    let k = u32::try_from(n).map_err(|_| invalid("n too large"))?;
    let t = dd(tol);
    let qt = quad_tol(tol);
    let left = integrate_with(&IntegrandFamily::PolyPow(k), qt, config)?;
    let root = dd(n as f64).sqrt();
    let mid = gauss_truncated_with(root, qt, config)?.scaled(Working::ONE / root);
    let right = integrate_with(&IntegrandFamily::ReciprocalPow(k), qt, config)?;
    let (l, m, r) = (member(&left, t), member(&mid, t), member(&right, t));
    let verdict = ordered(l, m).and(ordered(m, r));
    let witness = format!("{} ≤ {} ≤ {}", show(l), show(m), show(r));
    Ok(CheckOutcome::new("spivak_sandwich", n, Grade::Numeric, verdict, witness))
}

fn agreement(name: &str, n: u64, q: &QuadResult<Working>, exact: &PiScalar, enc: &PiEnclosure, tol: f64) -> CheckOutcome {
    let iv = scalar_to_interval(exact, enc);
    let mid = Working::from_rational(&iv.midpoint());
    let half = Working::from_rational(&iv.width()) / dd(2.0) + mid.abs() * Working::epsilon() * dd(4.0);
    let diff = (q.value - mid).abs();
    let allowed = q.total_uncertainty().max(dd(tol)) + half;
    let verdict = if diff <= allowed { Verdict::Holds } else { Verdict::Fails };
    let witness = format!(
        "quadrature {:.14} vs {exact} ≈ {:.14}, |diff| = {:.2e} ≤ {:.2e}",
        q.value.to_float(),
        mid.to_float(),
        diff.to_float(),
        allowed.to_float()
    );
    CheckOutcome::new(name, n, Grade::Numeric, verdict, witness)
}

/// `∫₀^∞ (1+x²)^{−n} dx = I_{2n−2}`.
pub fn check_disguise_reciprocal(n: u64, tol: f64, enc: &PiEnclosure, config: &QuadConfig) -> Result<CheckOutcome> {
    if n == 0 {
        return Err(invalid("reciprocal power needs n ≥ 1"));
    }
    let k = u32::try_from(n).map_err(|_| invalid("n too large"))?;
    let q = integrate_with(&IntegrandFamily::ReciprocalPow(k), quad_tol(tol), config)?;
    Ok(agreement("disguise_reciprocal", n, &q, &wallis_integral(2 * n - 2), enc, tol))
}

/// `∫₀¹ (1−x²)ⁿ dx = I_{2n+1}`.
pub fn check_disguise_poly(n: u64, tol: f64, enc: &PiEnclosure, config: &QuadConfig) -> Result<CheckOutcome> {
    let k = u32::try_from(n).map_err(|_| invalid("n too large"))?;
    let q = integrate_with(&IntegrandFamily::PolyPow(k), quad_tol(tol), config)?;
    Ok(agreement("disguise_poly", n, &q, &wallis_integral(2 * n + 1), enc, tol))
}

/// `∫₀^{π/2} cosⁿ x dx = I_n`.
pub fn check_quadrature_wallis(n: u64, tol: f64, enc: &PiEnclosure, config: &QuadConfig) -> Result<CheckOutcome> {
    let k = u32::try_from(n).map_err(|_| invalid("n too large"))?;
    let q = integrate_with(&IntegrandFamily::CosPow(k), quad_tol(tol), config)?;
    Ok(agreement("quadrature_wallis", n, &q, &wallis_integral(n), enc, tol))
}

/// `∫₀^∞ xⁿ e^{−x²} dx = E_n`, to `tol` relative to `max(1, E_n)`.
pub fn check_quadrature_moment(n: u64, tol: f64, enc: &PiEnclosure, config: &QuadConfig) -> Result<CheckOutcome> {
    let k = u32::try_from(n).map_err(|_| invalid("n too large"))?;
    let exact = moment_integral(n);
    let scale = crate::scalar::rational_to_f64(&scalar_to_interval(&exact, enc).midpoint()).max(1.0);
    let q = integrate_with(&IntegrandFamily::Moment(k), quad_tol(tol * scale), config)?;
    Ok(agreement("quadrature_moment", n, &q, &exact, enc, tol * scale))
}

/// The quadrature value of `∫₀^{√n} e^{−x²}` lies inside the Wallis-integral
/// enclosure.
pub fn check_truncated_containment(n: u64, tol: f64, config: &QuadConfig) -> Result<CheckOutcome> {
    let enc = probability_integral_enclosure(n)?;
    let t = dd(tol);
    let qt = quad_tol(tol);
    let q = gauss_truncated_with(dd(n as f64).sqrt(), qt, config)?;
    let (v, u) = member(&q, t);
    let lo = to_working(&enc.truncated.lo);
    let hi = to_working(&enc.truncated.hi);
    let verdict = if v - u >= lo && v + u <= hi {
        Verdict::Holds
    } else if v + u < lo || v - u > hi {
        Verdict::Fails
    } else {
        Verdict::Undecided
    };
    let witness = format!("{:.14} ≤ {} ≤ {:.14}", lo.to_float(), show((v, u)), hi.to_float());
    Ok(CheckOutcome::new("truncated_containment", n, Grade::Numeric, verdict, witness))
}

fn to_working(r: &BigRational) -> Working {
    Working::from_rational(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::pi_enclosure;

    #[test]
    fn sandwich_examples() {
        for n in [1, 2, 4, 30] {
            let out = check_spivak_sandwich(n, 1e-9).unwrap();
            assert_eq!(out.verdict, Verdict::Holds, "n = {n}: {}", out.witness);
        }
        assert_eq!(check_spivak_sandwich(3, 10.0).unwrap().verdict, Verdict::Undecided);
    }

    #[test]
    fn disguises() {
        let enc = pi_enclosure(30).unwrap();
        let cfg = QuadConfig::default();
        for n in [1, 5, 15] {
            assert!(check_disguise_reciprocal(n, 1e-9, &enc, &cfg).unwrap().holds());
            assert!(check_disguise_poly(n, 1e-9, &enc, &cfg).unwrap().holds());
        }
    }

    #[test]
    fn quadrature_agreement() {
        let enc = pi_enclosure(30).unwrap();
        let cfg = QuadConfig::default();
        for n in [0, 1, 7, 40] {
            assert!(check_quadrature_wallis(n, 1e-9, &enc, &cfg).unwrap().holds());
        }
        for n in [0, 1, 4, 20] {
            assert!(check_quadrature_moment(n, 1e-9, &enc, &cfg).unwrap().holds());
        }
    }

    #[test]
    fn containment() {
        assert!(check_truncated_containment(2, 1e-9, &QuadConfig::default()).unwrap().holds());
        assert!(check_truncated_containment(100, 1e-9, &QuadConfig::default()).unwrap().holds());
    }
}
