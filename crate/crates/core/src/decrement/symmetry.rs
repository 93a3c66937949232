use serde::Serialize;

use crate::error::{Error, Result};
use crate::phi_model::PhiTable;
use crate::scalar::{binomial, factorial, rising, sign, Scalar};

/// Absolute tolerance per comparison on the float backend.
pub const SYMMETRY_FLOAT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "verdict")]
pub enum SymmetryVerdict<S> {
    /// `P(F_n = 1) != P(L_n = 1)` first at `n`.
    Asymmetric {
        n: usize,
        first_part_one: S,
        last_part_one: S,
    },
    /// The exponent is `[1+alpha]_{n-1} / (n-1)!`. `alpha = 1` is the pure
    /// singleton structure and `alpha = 0` the one-block structure.
    SymmetricAlphaAlpha { alpha: S },
}

/// `P(F_n = 1) = n (Phi(n) - Phi(n-1)) / Phi(n)` for a unit-normalised table.
pub fn first_part_one<S: Scalar>(table: &PhiTable<S>, n: usize) -> S {
    S::from_usize(n) * (table.phi_or_zero(n) - table.phi_or_zero(n - 1)) / table.phi(n).clone()
}

/// `P(L_n = 1) = n [1 - sum_{k=2}^n C(n-1,k-1) (-1)^k / Phi(k)]` for a
/// unit-normalised table.
pub fn last_part_one<S: Scalar>(table: &PhiTable<S>, n: usize) -> S {
    let sum: S = (2..=n)
        .map(|k| binomial::<S>(n - 1, k - 1) * sign::<S>(k) / table.phi(k).clone())
        .sum();
    S::from_usize(n) * (S::one() - sum)
}

/// Decides whether the structure is reversible by comparing the laws of the
/// first and last part at size one for `3 <= n <= n_max`.
pub fn detect_symmetry<S: Scalar>(table: &PhiTable<S>) -> Result<SymmetryVerdict<S>> {
    if table.n_max() < 3 {
        return Err(Error::InvalidParameters(
            "symmetry detection needs n_max >= 3".into(),
        ));
    }
    let unit = table.to_unit();
    for n in 3..=unit.n_max() {
        let first = first_part_one(&unit, n);
        let last = last_part_one(&unit, n);
        if !first.approx_eq(&last, SYMMETRY_FLOAT_TOL) {
            return Ok(SymmetryVerdict::Asymmetric {
                n,
                first_part_one: first,
                last_part_one: last,
            });
        }
    }
    let alpha = unit.phi(2).clone() - S::one();
    let shifted = S::one() + alpha.clone();
    for n in 1..=unit.n_max() {
        let expected = rising(&shifted, n - 1) / factorial::<S>(n - 1);
        if !expected.approx_eq(unit.phi(n), SYMMETRY_FLOAT_TOL) {
            return Err(Error::SymmetryInconsistent { n });
        }
    }
    Ok(SymmetryVerdict::SymmetricAlphaAlpha { alpha })
}
