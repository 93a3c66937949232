//! Alternative parametrisations: structural moments `p(n) = q(n:n)`,
//! singleton probabilities `e(n)`, and the first column `q(n:1)`.
use std::cmp::Ordering;

use super::matrix::DecrementMatrix;
use crate::error::{Error, Result};
use crate::phi_model::{Normalization, PhiTable};
use crate::scalar::{binomial, sign, Scalar};

/// Diagonal `p(n) = q(n:n)`.
pub fn structural_moments<S: Scalar>(q: &DecrementMatrix<S>) -> Vec<S> {
    (1..=q.n_max()).map(|n| q.get(n, n).clone()).collect()
}

/// Recovers the unit-normalised exponent from structural moments by solving
/// `Phi(n) (p(n) + (-1)^n) = sum_{j<n} (-1)^(j+1) C(n,j) Phi(j)` with `Phi(1) = 1`.
pub fn phi_from_structural_moments<S: Scalar>(p: &[S]) -> Result<PhiTable<S>> {
    let n_max = p.len();
    if n_max == 0 || p[0] != S::one() {
        return Err(Error::InvalidParameters(
            "structural moments must start with p(1) = 1".into(),
        ));
    }
    if let Some(table) = degenerate_from_second(p, "structural moment")? {
        return Ok(table);
    }
    if let Some(n) = (2..=n_max).find(|&n| !(p[n - 1] > S::zero() && p[n - 1] < S::one())) {
        return Err(Error::InvalidParameters(format!(
            "p({n}) = {} must lie strictly between 0 and 1",
            p[n - 1]
        )));
    }
    let mut phi: Vec<S> = vec![S::one()];
    for n in 2..=n_max {
        let rhs: S = (1..n)
            .map(|j| sign::<S>(j + 1) * binomial::<S>(n, j) * phi[j - 1].clone())
            .sum();
        let value = rhs / (p[n - 1].clone() + sign::<S>(n));
        if value.partial_cmp(&S::zero()) != Some(Ordering::Greater) {
            return Err(Error::NonPositivePhi {
                n,
                value: value.to_string(),
            });
        }
        phi.push(value);
    }
    PhiTable::from_sequence(&phi, n_max, Normalization::Unit)
}

/// `e(n) = q(2:1) q(3:1) ... q(n:1)`: probability that `n` items form `n` blocks.
pub fn singleton_probs_from_q<S: Scalar>(q: &DecrementMatrix<S>) -> Vec<S> {
    let mut out = Vec::with_capacity(q.n_max());
    let mut acc = S::one();
    out.push(acc.clone());
    for n in 2..=q.n_max() {
        acc = acc * q.get(n, 1).clone();
        out.push(acc.clone());
    }
    out
}

/// Inverts `Phi(1)/Phi(n) = prod_{j=2}^n (1 - e(j) / (j e(j-1)))`.
pub fn phi_from_singleton_probs<S: Scalar>(e: &[S]) -> Result<PhiTable<S>> {
    let n_max = e.len();
    if n_max == 0 || e[0] != S::one() {
        return Err(Error::InvalidParameters(
            "singleton probabilities must start with e(1) = 1".into(),
        ));
    }
    if n_max >= 2 && e[1].is_zero() {
        // q(2:1) = 0 forces the one-part structure.
        if let Some(n) = (3..=n_max).find(|&n| !e[n - 1].is_zero()) {
            return Err(Error::InvalidParameters(format!(
                "e(2) = 0 forces e({n}) = 0, got {}",
                e[n - 1]
            )));
        }
        return PhiTable::from_sequence(&vec![S::one(); n_max], n_max, Normalization::Unit);
    }
    let mut phi = vec![S::one()];
    let mut inv = S::one();
    for j in 2..=n_max {
        if !(e[j - 1] > S::zero() && e[j - 1] <= e[j - 2]) {
            return Err(Error::InvalidParameters(format!(
                "e({j}) = {} must satisfy 0 < e({j}) <= e({})",
                e[j - 1],
                j - 1
            )));
        }
        let factor = S::one() - e[j - 1].clone() / (S::from_usize(j) * e[j - 2].clone());
        if factor.partial_cmp(&S::zero()) != Some(Ordering::Greater) {
            return Err(Error::NonPositivePhi {
                n: j,
                value: factor.to_string(),
            });
        }
        inv = inv * factor;
        phi.push(S::one() / inv.clone());
    }
    PhiTable::from_sequence(&phi, n_max, Normalization::Unit)
}

/// Rebuilds the decrement matrix from its first column; entries are polynomials
/// in `q(n:1)`:
/// `q(n:m) = C(n,m) sum_j (-1)^(m-j+1) C(m,j) prod_{k<j} (1 - q(n-k:1)/(n-k))`.
pub fn decrement_from_first_column<S: Scalar>(first: &[S]) -> DecrementMatrix<S> {
    let n_max = first.len();
    let rows = (1..=n_max)
        .map(|n| {
            // ratio[j] = prod_{k<j} (1 - q(n-k:1)/(n-k)) = Phi(n-j)/Phi(n)
            let mut ratio = Vec::with_capacity(n + 1);
            ratio.push(S::one());
            for k in 0..n {
                let prev = ratio[k].clone();
                ratio.push(prev * (S::one() - first[n - k - 1].clone() / S::from_usize(n - k)));
            }
            (1..=n)
                .map(|m| {
                    let sum: S = (0..=m)
                        .map(|j| sign::<S>(m - j + 1) * binomial::<S>(m, j) * ratio[j].clone())
                        .sum();
                    binomial::<S>(n, m) * sum
                })
                .collect()
        })
        .collect();
    DecrementMatrix::from_rows_unchecked(rows)
}

/// Short-circuits the degenerate cases where `x(2)` is 0 (pure singletons) or
/// 1 (one block): the parameter must then be constant from `n = 2` on.
fn degenerate_from_second<S: Scalar>(p: &[S], what: &str) -> Result<Option<PhiTable<S>>> {
    let n_max = p.len();
    if n_max < 2 || !(p[1].is_zero() || p[1].is_one()) {
        return Ok(None);
    }
    if let Some(n) = (3..=n_max).find(|&n| p[n - 1] != p[1]) {
        return Err(Error::InvalidParameters(format!(
            "{what} {} at n = 2 forces the same value at n = {n}, got {}",
            p[1],
            p[n - 1]
        )));
    }
    let phi: Vec<S> = if p[1].is_one() {
        vec![S::one(); n_max]
    } else {
        (1..=n_max).map(S::from_usize).collect()
    };
    PhiTable::from_sequence(&phi, n_max, Normalization::Unit).map(Some)
}
