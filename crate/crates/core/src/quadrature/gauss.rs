use crate::scalar::Scalar;

/// Gauss–Legendre nodes and weights on `[-1, 1]`, computed by Newton
/// iteration on `P_n` in the target precision.
#[derive(Debug, Clone)]
pub struct GaussLegendre<T> {
    nodes: Vec<T>,
    weights: Vec<T>,
}

impl<T: Scalar> GaussLegendre<T> {
    pub fn new(order: usize) -> Self {
        assert!(order >= 1);
        let mut nodes = vec![T::zero(); order];
        let mut weights = vec![T::zero(); order];
        for i in 0..order.div_ceil(2) {
            let guess = (std::f64::consts::PI * (i as f64 + 0.75) / (order as f64 + 0.5)).cos();
            let mut x = T::from_float(guess);
            let mut deriv = T::one();
            for _ in 0..100 {
                let (p, dp) = legendre(order, x);
                deriv = dp;
                let dx = p / dp;
                x = x - dx;
                if dx.abs() <= T::epsilon() * T::from_float(4.0) {
                    break;
                }
            }
            let (_, dp) = legendre(order, x);
            if dp != T::zero() {
                deriv = dp;
            }
            let w = T::from_float(2.0) / ((T::one() - x * x) * deriv * deriv);
            nodes[i] = -x;
            nodes[order - 1 - i] = x;
            weights[i] = w;
            weights[order - 1 - i] = w;
        }
        Self { nodes, weights }
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[T] {
        &self.nodes
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    /// `∫_a^b f` by this rule, together with `Σ|wᵢ f(xᵢ)|·h` for rounding estimates.
    pub fn apply<F: Fn(T) -> T>(&self, f: &F, a: T, b: T) -> (T, T) {
        let two = T::from_float(2.0);
        let c = (a + b) / two;
        let h = (b - a) / two;
        let mut sum = T::zero();
        let mut abs_sum = T::zero();
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            let term = *w * f(c + h * *x);
            sum = sum + term;
            abs_sum = abs_sum + term.abs();
        }
        (sum * h, abs_sum * h.abs())
    }
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre<T: Scalar>(n: usize, x: T) -> (T, T) {
    let mut p0 = T::one();
    let mut p1 = x;
    for k in 2..=n {
        let kf = T::from_float(k as f64);
        let p2 = ((T::from_float(2.0) * kf - T::one()) * x * p1 - (kf - T::one()) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let nf = T::from_float(n as f64);
    let dp = nf * (x * p1 - p0) / (x * x - T::one());
    (p1, dp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::DoubleDouble;

    #[test]
    fn integrates_polynomials_exactly() {
        let g = GaussLegendre::<DoubleDouble>::new(10);
        let total: DoubleDouble = g.weights().iter().fold(DoubleDouble::ZERO, |a, w| a + *w);
        assert!((total - DoubleDouble::from(2.0)).abs().hi() < 1e-30);
        // ∫₀¹ x¹⁹ = 1/20, degree 2n−1 = 19 is exact
        let (v, _) = g.apply(&|x: DoubleDouble| x.powi(19), DoubleDouble::ZERO, DoubleDouble::ONE);
        assert!((v - DoubleDouble::ONE / DoubleDouble::from(20.0)).abs().hi() < 1e-30);
    }

    #[test]
    fn five_point_nodes() {
        let g = GaussLegendre::<f64>::new(5);
        // largest node of P_5: 0.9061798459386640
        assert!((g.nodes()[4] - 0.906_179_845_938_664).abs() < 1e-15);
        assert!((g.nodes()[2]).abs() < 1e-15);
        assert_eq!(g.order(), 5);
    }
}
