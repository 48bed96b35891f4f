//! Exact rationals, pi-scaled exact values and ball arithmetic.

mod ball;
pub mod consts;
pub mod decimal;
mod dyadic;
mod pi_scaled;
mod precision;
mod rational;

pub use ball::{Ball, BallOrdering};
pub use dyadic::{Dyadic, Mag};
pub use pi_scaled::PiScaled;
pub(crate) use precision::check_precision;
pub use precision::{PrecisionPolicy, DEFAULT_PRECISION, MAX_PRECISION};
pub use rational::Rational;
