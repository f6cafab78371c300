//! Exact and error-bounded verification of Wallis's formula and the
//! probability integral.
//!
//! * [`exact`]: reduced big rationals, `q·π^(k/2)` scalars, rational
//!   intervals and a Machin enclosure of π.
//! * [`sequences`]: Wallis products, Wallis and moment integrals, the
//!   equivalent limit forms and central binomial coefficients.
//! * [`quadrature`]: adaptive Gauss–Legendre integration with analytic tail
//!   bounds, generic over the floating scalar.
//! * [`inequalities`]: certified and numeric checkers and the enclosures of
//!   π, √π and the probability integral built from them.
//! * [`ode_probe`]: the `F(t) + G(t) = π/4` construction.

pub mod error;
pub mod exact;
pub mod inequalities;
pub mod ode_probe;
pub mod quadrature;
pub mod scalar;
pub mod sequences;

pub use error::{Error, Result};
pub use exact::{pi_enclosure, scalar_compare, scalar_to_interval, Comparison, Interval, PiEnclosure, PiScalar};
pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
pub use scalar::{DoubleDouble, Scalar};

/// Closed interval with exact rational endpoints.
pub type RatInterval = Interval<BigRational>;

/// The working precision used by the checkers (about 31 significant digits).
pub type Working = DoubleDouble;

/// Quadrature result at the working precision.
pub type QuadResult = quadrature::QuadResult<Working>;
/// Quadrature result in plain `f64`.
pub type QuadResultF64 = quadrature::QuadResult<f64>;
/// Integrand family at the working precision.
pub type IntegrandFamily = quadrature::IntegrandFamily<Working>;
/// Conservation report at the working precision.
pub type ConservationReport = ode_probe::ConservationReport<Working>;
