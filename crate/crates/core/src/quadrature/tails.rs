//! Analytic bounds for the parts of improper integrals cut off by truncation.

use crate::error::{invalid, Result};

// absorbs rounding in the f64 evaluation of the bounds
const INFLATE: f64 = 1.0 + 1e-12;

/// Upper bound on `∫_b^∞ xⁿ e^{−x²} dx`, valid for `b > 0` and `b² > (n−1)/2`.
///
/// Integration by parts gives `T_n(b) = b^{n−1}e^{−b²}/2 + (n−1)/2 · T_{n−2}(b)`
/// and `T_{n−2}(b) ≤ T_n(b)/b²`, so
/// `T_n(b) ≤ b^{n−1}e^{−b²}/2 · 2b²/(2b² − n + 1)`. For `n ≤ 1` the factor is 1
/// (exact for `n = 1`).
pub fn moment_tail_bound(n: u32, b: f64) -> f64 {
    assert!(b > 0.0, "truncation point must be positive");
    let nf = f64::from(n);
    let lead = ((nf - 1.0) * b.ln() - b * b).exp() / 2.0;
    let factor = if n <= 1 {
        1.0
    } else {
        let d = 2.0 * b * b - nf + 1.0;
        assert!(d > 0.0, "bound needs b² > (n−1)/2");
        2.0 * b * b / d
    };
    lead * factor * INFLATE
}

/// Smallest `b` on a 1/4 grid starting at `max(√n, 1)` whose moment tail bound
/// is at most `tail_tol`. Returns `(b, bound)`.
pub fn moment_truncation_point(n: u32, tail_tol: f64) -> Result<(f64, f64)> {
    if !(tail_tol > 0.0) || !tail_tol.is_finite() {
        return Err(invalid("tail tolerance must be positive and finite"));
    }
    let mut b = f64::from(n).sqrt().max(1.0);
    loop {
        let bound = moment_tail_bound(n, b);
        if bound <= tail_tol {
            return Ok((b, bound));
        }
        b += 0.25;
    }
}

/// Upper bound on `∫_R^∞ (1+x²)^{−n} dx` for `R ≥ 1`.
///
/// `n = 1` uses the arctan remainder `π/2 − arctan R = arctan(1/R)`; larger `n`
/// use `(1+x²)^{−n} ≤ x^{−2n}`.
pub fn reciprocal_tail_bound(n: u32, r: f64) -> f64 {
    assert!(n >= 1 && r >= 1.0);
    if n == 1 {
        (1.0 / r).atan() * INFLATE
    } else {
        let m = f64::from(2 * n - 1);
        ((1.0 - 2.0 * f64::from(n)) * r.ln()).exp() / m * INFLATE
    }
}

/// Integer truncation point `R ≥ 1` with `reciprocal_tail_bound(n, R) ≤ tail_tol`.
pub fn reciprocal_truncation_point(n: u32, tail_tol: f64) -> Result<(f64, f64)> {
    if n == 0 {
        return Err(invalid("reciprocal power needs n ≥ 1"));
    }
    if !(tail_tol > 0.0) || !tail_tol.is_finite() {
        return Err(invalid("tail tolerance must be positive and finite"));
    }
    let mut r = if n == 1 {
        (1.0 / tail_tol).ceil()
    } else {
        let m = f64::from(2 * n - 1);
        (m * tail_tol).powf(-1.0 / m).max(1.0).ceil()
    }
    .max(1.0);
    loop {
        let bound = reciprocal_tail_bound(n, r);
        if bound <= tail_tol {
            return Ok((r, bound));
        }
        r += 1.0;
    }
}
