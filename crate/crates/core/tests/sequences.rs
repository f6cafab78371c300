use num_bigint::BigUint;
use num_traits::One;
use wallislab::exact::{mul_small, truncate_decimal};
use wallislab::sequences::{
    central_binomial, central_binomial_ratio, moment_integral, moment_integral_closed_form, moment_integrals,
    variation_term, wallis_integral, wallis_integral_closed_form, wallis_integrals, wallis_product, ProductForm,
    VariationId, WallisPartials,
};
use wallislab::{BigRational, PiScalar};

fn r(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

#[test]
fn product_examples() {
    assert_eq!(wallis_product(1, ProductForm::Paired).unwrap(), r(4, 3));
    for form in ProductForm::ALL {
        assert_eq!(wallis_product(2, form).unwrap(), r(64, 45));
    }
    assert!(wallis_product(0, ProductForm::Paired).is_err());
}

#[test]
fn forms_agree_and_increase() {
    let mut p = WallisPartials::new();
    let mut prev = BigRational::one();
    for n in 1..=2000u64 {
        p.advance();
        let a = p.value(ProductForm::Paired);
        assert_eq!(a, p.value(ProductForm::SquaredOverOdd), "n = {n}");
        assert_eq!(a, p.value(ProductForm::SquaredTimesOdd), "n = {n}");
        assert!(a > prev);
        prev = a;
    }
    for n in [1u64, 17, 500, 2000] {
        let a = wallis_product(n, ProductForm::Paired).unwrap();
        for form in ProductForm::ALL {
            assert_eq!(wallis_product(n, form).unwrap(), a);
        }
    }
}

#[test]
fn variation_examples() {
    assert_eq!(variation_term(VariationId::V4, 1).unwrap().rational, r(3, 4));
    assert_eq!(variation_term(VariationId::V4, 3).unwrap().rational, r(175, 256));
    let v1 = variation_term(VariationId::V1, 1).unwrap();
    assert_eq!(v1.rational, r(2, 1));
    assert_eq!(v1.squared(), PiScalar::rational(r(4, 1)));
    assert!(variation_term(VariationId::V1, 0).is_err());
}

#[test]
fn v4_inverts_the_product() {
    for n in 1..=200u64 {
        let v4 = variation_term(VariationId::V4, n).unwrap().rational;
        assert!((wallis_product(n, ProductForm::Paired).unwrap() * v4).is_one());
    }
}

#[test]
fn v2_reproduces_the_product() {
    for n in 1..=200u64 {
        let v2 = variation_term(VariationId::V2, n).unwrap();
        assert_eq!(v2.radicand, r(n as i64, 1));
        let back = mul_small(&(&v2.rational * &v2.rational), 2 * n + 1, 1);
        assert_eq!(back, wallis_product(n, ProductForm::Paired).unwrap());
    }
}

#[test]
fn integral_examples() {
    assert_eq!(wallis_integral(0), PiScalar::new(r(1, 2), 2));
    assert_eq!(wallis_integral(3), PiScalar::rational(r(2, 3)));
    assert_eq!(wallis_integral(4), PiScalar::new(r(3, 16), 2));
    assert_eq!(moment_integral(1), PiScalar::rational(r(1, 2)));
    assert_eq!(moment_integral(4), PiScalar::new(r(3, 8), 1));
    assert_eq!(moment_integral(7), PiScalar::rational(r(3, 1)));
}

#[test]
fn recurrences_match_closed_forms() {
    let ws = wallis_integrals(500);
    let ms = moment_integrals(500);
    for n in 0..=500u64 {
        assert_eq!(ws[n as usize], wallis_integral_closed_form(n), "I_{n}");
        assert_eq!(ms[n as usize], moment_integral_closed_form(n), "E_{n}");
    }
}

#[test]
fn product_identity_up_to_500() {
    let ws = wallis_integrals(500);
    for n in 1..=500usize {
        let lhs = (&ws[n] * &ws[n - 1]).scale(&r(n as i64, 1));
        assert_eq!(lhs, PiScalar::new(r(1, 2), 2), "n = {n}");
    }
}

#[test]
fn moment_closed_forms_up_to_250() {
    let ms = moment_integrals(501);
    let e0 = PiScalar::new(r(1, 2), 1);
    let mut fact = BigRational::one();
    let mut dfact_over_pow = BigRational::one();
    for n in 0..=250u64 {
        if n > 0 {
            fact *= r(n as i64, 1);
            dfact_over_pow *= r(2 * n as i64 - 1, 2);
        }
        assert_eq!(ms[2 * n as usize + 1], PiScalar::rational(&fact / r(2, 1)));
        assert_eq!(ms[2 * n as usize], e0.scale(&dfact_over_pow));
    }
}

#[test]
fn binomials() {
    assert_eq!(central_binomial(0), BigUint::from(1u32));
    assert_eq!(central_binomial(1), BigUint::from(2u32));
    assert_eq!(central_binomial(5), BigUint::from(252u32));
    for n in 1..=300u64 {
        // C(2n,n) = C(2n−1,n−1)·2n/n with C(2n−1,n−1) = C(2n,n)/2
        let c = central_binomial(n);
        let prev_row = c.clone() / 2u32;
        assert_eq!(prev_row * BigUint::from(2 * n) / BigUint::from(n), c);
        // Pascal: C(2n,n) = 2·C(2n−1,n−1), C(2n−1,n−1) = C(2n−2,n−1)·(2n−1)/n
        assert_eq!(central_binomial(n - 1) * BigUint::from(2 * (2 * n - 1)) / BigUint::from(n), c);
    }
}

#[test]
fn binomial_ratio_values() {
    assert_eq!(central_binomial_ratio(1, 4).unwrap().decimal, "0.8862");
    assert_eq!(central_binomial_ratio(5, 4).unwrap().decimal, "0.9753");
    let v = central_binomial_ratio(1000, 10).unwrap();
    assert_eq!(truncate_decimal(v.interval.lo(), 3), "0.999");
}
