//! Polynomial families of the Askey-Wilson hierarchy, their moment
//! functionals realized by exact basis expansion, connection coefficients,
//! and the closed-form mixed-moment identities.
//!
//! The moment functional is *defined* by `L(p_k) = delta_{k0}`, `L(1) = 1`,
//! and realized by a triangular solve against the family basis. That oracle
//! uses only the polynomials themselves, never a closed moment formula, so
//! every identity checked against it is checked against an independent
//! construction.

mod closed;
mod connect;
mod family;

pub use closed::{aw_moment_v1, aw_moment_v2, closed_mixed_moment, ClosedFamily};
pub use connect::{
    aw_from_cascade, bootstrap_mixed_moment, connection_coeffs, connection_coeffs_general_aw,
    AdjacentPair,
};
pub use family::{
    basis_expand, eval_at_qn, expand_in_triangular_basis, mixed_moment_oracle, moment_of_product,
    norm_closed, norm_step, sample_env, BasisExpansion, Env, FamilyKind, FamilySpec,
    RecurrenceFamily,
};
