use std::time::Instant;

use wallislab::exact::{mul_small, truncate_decimal};
use wallislab::inequalities::{
    check_moment_squeeze, check_product_identity, check_sqrt_limit_bounds, check_stieltjes, check_stieltjes_with,
    check_wallis_monotone, pi_enclosure_wallis, probability_integral_enclosure, run_suite, sqrtpi_enclosure_moments,
    Escalation, Grade, Suite, SuiteConfig, Verdict,
};
use wallislab::quadrature::gauss_truncated;
use wallislab::scalar::Scalar;
use wallislab::sequences::{wallis_product, ProductForm, WallisPartials};
use wallislab::{pi_enclosure, BigRational, DoubleDouble};

fn r(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

#[test]
fn certified_checkers_hold_up_to_200() {
    let enc = pi_enclosure(20).unwrap();
    for n in 1..=200 {
        for o in [
            check_stieltjes(n, &enc).unwrap(),
            check_moment_squeeze(n, &enc).unwrap(),
            check_wallis_monotone(n - 1, &enc).unwrap(),
            check_product_identity(n).unwrap(),
            check_sqrt_limit_bounds(n, &enc).unwrap(),
        ] {
            assert_eq!(o.verdict, Verdict::Holds, "{} n = {n}: {}", o.name, o.witness);
            assert_eq!(o.grade, Grade::Certified);
        }
    }
}

#[test]
fn stieltjes_coarse_enclosure() {
    let coarse = pi_enclosure(1).unwrap();
    assert_eq!(check_stieltjes_with(1, &coarse, Escalation::NONE).unwrap().verdict, Verdict::Holds);
}

#[test]
fn wallis_enclosure_examples() {
    let e = pi_enclosure_wallis(1).unwrap();
    assert_eq!((e.lo.clone(), e.hi.clone()), (r(8, 3), r(4, 1)));
    let e = pi_enclosure_wallis(10).unwrap();
    assert!(e.lo < r(314159, 100000) && e.hi > r(314160, 100000));
    assert_eq!(truncate_decimal(&e.width, 2), "0.15");
}

#[test]
fn wallis_enclosures_nest() {
    let mut prev = pi_enclosure_wallis(1).unwrap();
    for n in 2..=1001 {
        let e = pi_enclosure_wallis(n).unwrap();
        assert!(e.lo > prev.lo && e.hi < prev.hi, "n = {n}");
        prev = e;
    }
}

#[test]
fn width_scaling_law() {
    // width·2n = 2a_n, and a_1 ≤ a_n < π/2
    let machin = pi_enclosure(30).unwrap();
    let two_a1 = r(8, 3);
    for n in [1u64, 2, 10, 100, 1000] {
        let e = pi_enclosure_wallis(n).unwrap();
        let scaled = mul_small(&e.width, 2 * n, 1);
        assert_eq!(scaled, mul_small(&wallis_product(n, ProductForm::Paired).unwrap(), 2, 1));
        assert!(scaled >= two_a1 && &scaled < machin.interval().lo());
        let upper = mul_small(&e.width, 2 * n + 1, 1);
        assert_eq!(upper, e.hi);
    }
}

#[test]
fn wallis_enclosure_meets_machin() {
    let machin = pi_enclosure(40).unwrap();
    let mut p = WallisPartials::new();
    for n in 1..=300 {
        p.advance();
        let e = pi_enclosure_wallis(n).unwrap();
        assert!(machin.interval().is_subset_of(&e.interval()), "n = {n}");
    }
}

#[test]
fn sqrtpi_examples() {
    let e = sqrtpi_enclosure_moments(1).unwrap();
    assert_eq!(truncate_decimal(&e.lo, 3), "1.632");
    assert_eq!(e.hi, r(2, 1));
    let e = sqrtpi_enclosure_moments(100).unwrap();
    assert!(e.lo < r(17724539, 10000000) && e.hi > r(17724539, 10000000));
    assert!(e.width < r(45, 10000) && e.width > r(43, 10000));
}

#[test]
fn probability_integral_examples() {
    for n in 2..=40 {
        let e = probability_integral_enclosure(n).unwrap();
        assert!(e.truncated.width > BigRational::from_integer(0.into()));
        assert!(e.full.lo < r(886226925452758, 1_000_000_000_000_000));
        assert!(e.full.hi > r(886226925452759, 1_000_000_000_000_000));
    }
    let e = probability_integral_enclosure(100).unwrap();
    let lo = wallislab::scalar::rational_to_f64(&e.truncated.lo);
    let hi = wallislab::scalar::rational_to_f64(&e.truncated.hi);
    assert!((lo / 0.886_226_925 - 1.0).abs() < 0.01 && (hi / 0.886_226_925 - 1.0).abs() < 0.01);
    assert!(e.truncated.width <= r(1, 100));
    let q = gauss_truncated(DoubleDouble::from(10.0), DoubleDouble::from(1e-12)).unwrap();
    let v = q.value.to_rational();
    assert!(e.truncated.lo < v && v < e.truncated.hi);
}

#[test]
fn acceptance_scale_enclosures_are_fast() {
    let start = Instant::now();
    let e = pi_enclosure_wallis(10_000).unwrap();
    assert!(e.lo < r(314159265, 100000000) && e.hi > r(314159266, 100000000));
    assert!(e.width <= r(32, 100000));
    let s = sqrtpi_enclosure_moments(1000).unwrap();
    assert!(s.lo < r(17724539, 10000000) && s.hi > r(17724539, 10000000));
    assert!(s.width <= r(2, 1000));
    assert!(start.elapsed().as_secs() < 60);
}

#[test]
fn suites_report_no_failures() {
    let cfg = SuiteConfig {
        max_n: 12,
        ..SuiteConfig::default()
    };
    for suite in Suite::PARTS {
        let rep = run_suite(suite, &cfg).unwrap();
        let c = rep.counts();
        assert_eq!(c.fails + c.undecided, 0, "{suite}");
        assert!(c.holds > 0, "{suite}");
        for o in rep.outcomes.iter().filter(|o| o.verdict != Verdict::Holds) {
            assert!(!o.witness.is_empty());
        }
    }
    let all = run_suite(Suite::All, &cfg).unwrap();
    assert_eq!(all.conservation.len(), 25);
    assert!(!all.enclosures.is_empty());
}

#[test]
fn loose_tolerance_sandwich_is_undecided() {
    let cfg = SuiteConfig {
        max_n: 5,
        tol: 10.0,
        ..SuiteConfig::default()
    };
    let rep = run_suite(Suite::Sandwich, &cfg).unwrap();
    let c = rep.counts();
    assert!(c.undecided > 0 && c.fails == 0);
}
