//! Decrement matrices and their parametrisations.

mod matrix;
mod params;
mod symmetry;

pub use matrix::{
    decrement_from_phi, stick_breaking_decrement, two_param_decrement, verify_decrement_recursion,
    DecrementMatrix, RecursionReport,
};
pub use params::{
    decrement_from_first_column, phi_from_singleton_probs, phi_from_structural_moments,
    singleton_probs_from_q, structural_moments,
};
pub use symmetry::{detect_symmetry, first_part_one, last_part_one, SymmetryVerdict, SYMMETRY_FLOAT_TOL};

pub(crate) use matrix::probability_atoms;
