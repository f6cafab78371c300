//! Exact arithmetic: reduced big rationals, the `q·π^(k/2)` scalar algebra,
//! rational intervals and a Machin-series enclosure of π.

pub mod decimal;
pub mod interval;
pub mod pi_enclosure;
pub mod pi_scalar;
pub mod rational;

pub use decimal::{truncate_decimal, truncate_interval, TRUNCATION_POLICY};
pub use interval::Interval;
pub use pi_enclosure::{pi_enclosure, PiEnclosure, MAX_PI_DIGITS};
pub use pi_scalar::{scalar_compare, scalar_to_interval, Comparison, PiScalar};
pub use rational::{mul_small, sqrt_bounds, FactorProduct};
