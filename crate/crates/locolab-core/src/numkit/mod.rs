//! Dense numeric foundation: flat parameter vectors with a named-tensor
//! layout, small dense matrices, Newton-Schulz orthogonalization, and
//! deterministic seeded RNG streams.
//!
//! All arithmetic is in 64-bit floats. Values are immutable after
//! construction or mutated only through their unique owner; every operation
//! here is a pure function of its inputs.

mod layout;
mod matrix;
mod rng;
mod vector;

pub use layout::{TensorEntry, TensorLayout};
pub use matrix::{
    matmul, newton_schulz_orthogonalize, newton_schulz_orthogonalize_with, Matrix,
    NS_COEFFS_CONVERGENT, NS_COEFFS_FAST, NS_DEFAULT_ITERATIONS,
};
pub use rng::{derive_seed, fnv1a64, splitmix64, Rng};
pub use vector::{add, axpy, dot, mean, pairwise_sum, scale, subtract, ParamVector};
