//! The arithmetic tower: exact rationals, multivariate Laurent polynomials
//! over a fixed variable alphabet, rational functions, truncated power series
//! in `t`, and a seeded randomized identity probe.
//!
//! All values are immutable after construction and all operations are pure;
//! nothing in this module holds shared mutable state.

mod error;
mod poly;
mod probe;
mod ratfunc;
mod series;
mod vars;

pub mod rational;

pub use error::{ExactError, ExactResult};
pub use poly::LaurentPoly;
pub use probe::{random_rational_probe, ProbeConfig, ProbeVerdict, RationalSampler};
pub use ratfunc::RatFunc;
pub use rational::Rational;
pub use series::TruncSeries;
pub use vars::{Monomial, VarId, NVARS};
