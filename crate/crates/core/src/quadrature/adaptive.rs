//! Globally adaptive bisection over panels.

use super::gauss::GaussLegendre;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

const HIGH_ORDER: usize = 10;
const LOW_ORDER: usize = 5;
const EVALS_PER_PANEL: usize = HIGH_ORDER + LOW_ORDER;

#[derive(Debug, Clone, Copy)]
struct Panel<T> {
    a: T,
    b: T,
    value: T,
    error: T,
}

struct Rules<T> {
    high: GaussLegendre<T>,
    low: GaussLegendre<T>,
}

impl<T: Scalar> Rules<T> {
    fn panel<F: Fn(T) -> T>(&self, f: &F, a: T, b: T) -> Panel<T> {
        let (hi, abs_sum) = self.high.apply(f, a, b);
        let (lo, _) = self.low.apply(f, a, b);
        // the rounding floor keeps the estimate honest once both rules agree to the last bit
        let floor = abs_sum * T::epsilon() * T::from_float(16.0);
        Panel {
            a,
            b,
            value: hi,
            error: (hi - lo).abs().max(floor),
        }
    }
}

/// Integrates `f` over consecutive breakpoints until the summed panel
/// estimates fall to `tol`. Returns `(value, error, evaluations)`.
///
/// Panels stay ordered by left endpoint and are summed in that order, so the
/// result is reproducible.
pub(crate) fn integrate_panels<T, F>(f: F, breaks: &[T], tol: T, max_evals: usize) -> Result<(T, T, usize)>
where
    T: Scalar,
    F: Fn(T) -> T,
{
    assert!(breaks.len() >= 2, "need at least one panel");
    let rules = Rules {
        high: GaussLegendre::new(HIGH_ORDER),
        low: GaussLegendre::new(LOW_ORDER),
    };
    let mut panels: Vec<Panel<T>> = breaks.windows(2).map(|w| rules.panel(&f, w[0], w[1])).collect();
    let mut evals = panels.len() * EVALS_PER_PANEL;

    let totals = |panels: &[Panel<T>]| {
        panels
            .iter()
            .fold((T::zero(), T::zero()), |(v, e), p| (v + p.value, e + p.error))
    };

    loop {
        let (value, error) = totals(&panels);
        if error <= tol {
            return Ok((value, error, evals));
        }
        let exhausted = |evals: usize| Error::BudgetExhausted {
            value: value.to_float(),
            error: error.to_float(),
            evaluations: evals,
        };
        if evals + 2 * EVALS_PER_PANEL > max_evals {
            return Err(exhausted(evals));
        }
        let (worst, _) = panels
            .iter()
            .enumerate()
            .fold((0, T::zero() - T::one()), |(bi, be), (i, p)| if p.error > be { (i, p.error) } else { (bi, be) });
        let p = panels[worst];
        let mid = (p.a + p.b) / T::from_float(2.0);
        if !(p.a < mid && mid < p.b) {
            // cannot split further at this precision
            return Err(exhausted(evals));
        }
        let left = rules.panel(&f, p.a, mid);
        let right = rules.panel(&f, mid, p.b);
        evals += 2 * EVALS_PER_PANEL;
        panels.splice(worst..=worst, [left, right]);
    }
}
