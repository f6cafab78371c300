use wallislab::ode_probe::{
    check_conservation, check_conservation_grid, conservation_grid, f_of_t, g_of_t, probability_integral_via_f,
};
use wallislab::quadrature::{gauss_truncated, QuadConfig};
use wallislab::scalar::Scalar;
use wallislab::DoubleDouble;

type Dd = DoubleDouble;

fn dd(x: f64) -> Dd {
    Dd::from(x)
}

#[test]
fn examples() {
    let f0 = f_of_t(dd(0.0), dd(1e-12)).unwrap();
    assert!(format!("{}", f0.value).starts_with("0.7853981633"));
    let f2 = f_of_t(dd(2.0), dd(1e-12)).unwrap();
    assert!(f2.value <= dd(0.01438));
    assert!((f2.value - dd(0.007_330_583_468_08)).abs() < dd(1e-12));
    assert!(f_of_t(dd(40.0), dd(1e-12)).unwrap().value <= dd(1e-300));
    let g1 = g_of_t(dd(1.0), dd(1e-12)).unwrap();
    assert!(format!("{}", g1.value).starts_with("0.5577462853"));
    let r5 = check_conservation(dd(5.0), dd(1e-10)).unwrap();
    assert!(r5.f.value <= dd(1.2e-11));
    assert!(r5.consistent);
}

#[test]
fn grid_conservation_and_decay() {
    let reports = check_conservation_grid(dd(1e-10), &QuadConfig::default()).unwrap();
    assert_eq!(reports.len(), 25);
    for (r, t) in reports.iter().zip(conservation_grid()) {
        assert!(r.consistent, "t = {t}");
        assert!(r.sum_deviation <= dd(1e-8), "t = {t}");
        assert!(r.sum_deviation >= Dd::ZERO);
        let cap = (-dd(t * t)).exp() * Dd::PI / dd(4.0);
        assert!(r.f.value <= cap + dd(1e-10));
    }
    for w in reports.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        let uf = a.f.total_uncertainty() + b.f.total_uncertainty();
        let ug = a.g.total_uncertainty() + b.g.total_uncertainty();
        // never reversed beyond the uncertainty; strictly separated while the steps are visible
        assert!(b.f.value <= a.f.value + uf && b.g.value + ug >= a.g.value);
        if b.t <= dd(3.0) {
            assert!(b.f.value + uf < a.f.value, "F at t = {}", b.t);
            assert!(b.g.value > a.g.value + ug, "G at t = {}", b.t);
        }
    }
}

#[test]
fn cross_method_agreement() {
    for t in conservation_grid() {
        let via = probability_integral_via_f(dd(t), dd(1e-10)).unwrap();
        let direct = gauss_truncated(dd(t), dd(1e-10)).unwrap();
        assert!((via.value - direct.value).abs() <= via.total_uncertainty() + direct.total_uncertainty(), "t = {t}");
    }
    let at4 = probability_integral_via_f(dd(4.0), dd(1e-10)).unwrap();
    assert!((at4.value - dd(0.886_226_925_5)).abs() <= dd(2e-7));
}

#[test]
fn derivatives_by_finite_differences() {
    let h = 1e-4;
    for t in [0.5, 1.0, 2.0] {
        let g = |s: f64| g_of_t(dd(s), dd(1e-14)).unwrap().value;
        let f = |s: f64| f_of_t(dd(s), dd(1e-14)).unwrap().value;
        let dg = (g(t + h) - g(t - h)) / dd(2.0 * h);
        let df = (f(t + h) - f(t - h)) / dd(2.0 * h);
        let expect = dd(2.0) * (-dd(t * t)).exp() * gauss_truncated(dd(t), dd(1e-14)).unwrap().value;
        assert!((dg - expect).abs() < dd(1e-7), "G' at {t}");
        assert!((df + expect).abs() < dd(1e-7), "F' at {t}");
        assert!((df + dg).abs() < dd(1e-7));
    }
}

#[test]
fn rejects_bad_t() {
    assert!(f_of_t(dd(-0.5), dd(1e-8)).is_err());
    assert!(check_conservation(Dd::infinity(), dd(1e-8)).is_err());
    assert!(g_of_t(dd(-1.0), dd(1e-8)).is_err());
}
