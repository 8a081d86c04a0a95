//! Generative constructions. Every generator verifies its own output with
//! the independent verifier for its structure before returning.

mod bibd;
mod difference;
mod hadamard;
mod kronecker;
mod mols;
mod rao_hamming;

pub use bibd::{bibd_complement, bibd_residual, hadamard_to_sbibd, IncidenceMatrix};
pub use difference::{
    ds_expand, gf_difference_scheme, kronecker_oa, verify_difference_scheme, DifferenceScheme,
};
pub use hadamard::{
    hadamard_double, hadamard_kronecker, hadamard_to_oa, oa_to_hadamard, paley1, paley2, sylvester,
    HadamardMatrix,
};
pub use kronecker::{generalized_kronecker, he_expand, split_rows};
pub use mols::{mols_to_oa, oa_to_mols, verify_mols, LatinSquareSet};
pub use rao_hamming::rao_hamming;
