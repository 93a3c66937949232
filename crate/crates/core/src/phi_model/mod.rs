//! Lévy data and tabulated Laplace exponents.

mod family;
mod table;

pub use family::{Atom, DegenerateKind, LevyFamily};
pub use table::{build_phi_table, Normalization, PhiTable};

use crate::error::Result;
use crate::scalar::Scalar;

/// Alias for [`PhiTable::from_sequence`].
pub fn phi_from_sequence<S: Scalar>(
    values: &[S],
    n_max: usize,
    normalization: Normalization,
) -> Result<PhiTable<S>> {
    PhiTable::from_sequence(values, n_max, normalization)
}
