//! The `alpha`, `beta`, `gamma` algebra of a composition and the closed forms
//! for the cofactor sum and determinant of `D(K_{n_1..n_m})`.

mod cm;
mod identities;
mod invariants;

pub use cm::{c_matrix, det_cm, det_cm_formula, reciprocal_sum, reciprocal_sum_solution};
pub use identities::{identity_suite, IdentityCounts};
pub use invariants::{alpha_excluding, cof_closed, det_closed, invariants, AlgebraicInvariants};
