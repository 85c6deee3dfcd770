//! Exact rational dense linear algebra.
//!
//! This is the brute-force side of every check in the crate: nothing here
//! knows about graphs, and every closed form elsewhere is compared against
//! these routines.

mod matrix;
mod modular;
mod ops;
mod rational;
mod serial;

pub use matrix::ExactMatrix;
pub use modular::{certify_singularity, SingularityCertificate, PRIMES};
pub use ops::{
    adjugate, ai_bj, block_assemble, cofactor_sum, determinant, inv_ai_bj, inverse, partition, schur_block_inverse,
    schur_complement, Partition,
};
pub use rational::{
    denominator_lcm, format_rational, from_bigint, minus_two_pow, parse_rational, rat, ratio, Rational,
};
pub use serial::{matrix_from_json, matrix_to_json, rational_from_json, rational_to_json, vector_to_json};

/// The all-ones vector of length `n`.
pub fn ones_vec(n: usize) -> Vec<Rational> {
    vec![rat(1); n]
}
