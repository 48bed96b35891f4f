//! Exact and rigorous computation of volumes and Euler characteristics of the
//! small arithmetic hyperbolic manifolds `M^n` and the minimal compact
//! arithmetic orbifolds `O^n`, plus the comparison engine that decides, for
//! each dimension `n >= 30`, that some manifold cover of `O^n` is larger than
//! `M^n`.

pub mod bernoulli;
pub mod error;
pub mod exact;
pub mod formulas;
pub mod lfunctions;
pub mod verdicts;

pub use bernoulli::DirichletCharacter;
pub use error::{Error, Result};
pub use exact::{Ball, BallOrdering, PiScaled, PrecisionPolicy, Rational};
pub use lfunctions::{LMode, NumberField};
pub use verdicts::{verify_dimension, verify_dimensions, Config, DimensionReport, Method, ParityRule, Verdict};
