//! Exact-arithmetic kernel for the Askey-Wilson hierarchy of q-orthogonal
//! polynomials.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere. The crate is organized as an arithmetic tower and
//! the modules that compute on it:
//!
//! * [`exact`] -- rationals, multivariate Laurent polynomials over a fixed
//!   variable alphabet, rational functions, truncated formal power series in
//!   `t`, a Gaussian (`I^2 = -1`) reduction, and a seeded randomized identity
//!   probe.
//! * [`qcore`] -- q-Pochhammer symbols, Gaussian binomial/multinomial
//!   coefficients, q-double factorials, and the mixed-moment kernel
//!   `opbar(n, m)` of the continuous q-Hermite functional.
//! * [`ortho`] -- recurrence- and formula-defined families of the hierarchy
//!   (q-Hermite up to Askey-Wilson), their moment functionals realized by
//!   exact basis expansion, connection coefficients, and closed mixed-moment
//!   sums.
//! * [`genfun`] -- infinite-product expansions, generating-function fixtures,
//!   the `(yt)_inf` / `1/(-yt)_inf` convolutions, and the d-term recurrence
//!   synthesizer with an exact order probe.
//! * [`dbqh`] -- discrete big q-Hermite I/II polynomials, their two moment
//!   functionals, and the addition theorem.
//! * [`combin`] -- exhaustive enumeration of colored matchings and 2-Motzkin
//!   paths with q-statistics, used as independent combinatorial oracles.
//!
//! The crate is `no_std` (with `alloc`); IO, serialization, and the CLI live
//! in the companion `qawverify` crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod combin;
pub mod dbqh;
pub mod exact;
pub mod genfun;
pub mod ortho;
pub mod qcore;

pub use exact::{
    ExactError, LaurentPoly, Monomial, ProbeConfig, ProbeVerdict, RatFunc, Rational, TruncSeries,
    VarId,
};
