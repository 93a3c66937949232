use crate::decrement::DecrementMatrix;
use crate::error::{Error, Result};
use crate::phi_model::PhiTable;
use crate::scalar::{binomial, sign, Scalar};

/// `g(n, j)`: probability that the decrement chain started at `n` visits `j`.
#[derive(Debug, Clone, PartialEq)]
pub struct GreenMatrix<S> {
    rows: Vec<Vec<S>>,
}

impl<S: Scalar> GreenMatrix<S> {
    pub fn n_max(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, n: usize, j: usize) -> &S {
        &self.rows[n - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<S>] {
        &self.rows
    }
}

/// Hitting-probability recursion `g(j,j) = 1`,
/// `g(n,j) = sum_{m=1}^{n-j} q(n:m) g(n-m, j)`.
pub fn green_matrix<S: Scalar>(q: &DecrementMatrix<S>) -> GreenMatrix<S> {
    let n_max = q.n_max();
    let mut rows: Vec<Vec<S>> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut row = Vec::with_capacity(n);
        for j in 1..n {
            let v: S = (1..=n - j)
                .map(|m| q.get(n, m).clone() * rows[n - m - 1][j - 1].clone())
                .sum();
            row.push(v);
        }
        row.push(S::one());
        rows.push(row);
    }
    GreenMatrix { rows }
}

/// Alternating-sum representation
/// `g(n,j) = Phi(j) C(n,j) sum_a C(n-j,a) (-1)^a / Phi(j+a)`.
///
/// Suffers catastrophic cancellation in floating point beyond moderate `n`;
/// meant as an exact cross-check of [`green_matrix`].
pub fn green_matrix_formula<S: Scalar>(table: &PhiTable<S>) -> GreenMatrix<S> {
    let rows = (1..=table.n_max())
        .map(|n| {
            (1..=n)
                .map(|j| {
                    let sum: S = (0..=n - j)
                        .map(|a| binomial::<S>(n - j, a) * sign::<S>(a) / table.phi(j + a).clone())
                        .sum();
                    table.phi(j).clone() * binomial::<S>(n, j) * sum
                })
                .collect()
        })
        .collect();
    GreenMatrix { rows }
}

/// First `(n, j)` violating
/// `g(n,j) = (j+1-q(j+1:1))/(n+1) g(n+1,j+1) + (n+1-j)/(n+1) g(n+1,j)`.
pub fn verify_green_recursion<S: Scalar>(
    g: &GreenMatrix<S>,
    q: &DecrementMatrix<S>,
    abs_tol: f64,
) -> Option<(usize, usize)> {
    let n_max = g.n_max().min(q.n_max());
    for n in 1..=n_max {
        if !g.get(n, n).approx_eq(&S::one(), abs_tol) {
            return Some((n, n));
        }
    }
    for n in 1..n_max {
        let n1 = S::from_usize(n + 1);
        for j in 1..=n {
            let rhs = (S::from_usize(j + 1) - q.get(j + 1, 1).clone()) / n1.clone()
                * g.get(n + 1, j + 1).clone()
                + S::from_usize(n + 1 - j) / n1.clone() * g.get(n + 1, j).clone();
            if !rhs.approx_eq(g.get(n, j), abs_tol) {
                return Some((n, j));
            }
        }
    }
    None
}

/// Law of the first part: row `n` of the decrement matrix.
pub fn first_part_law<S: Scalar>(q: &DecrementMatrix<S>, n: usize) -> Result<Vec<S>> {
    if n == 0 || n > q.n_max() {
        return Err(Error::SizeExceeded {
            requested: n,
            available: q.n_max(),
        });
    }
    Ok(q.row(n).to_vec())
}

/// `P(L_n = j) = g(n,j) q(j:j)` for `j = 1..=n`.
pub fn last_part_law<S: Scalar>(q: &DecrementMatrix<S>, green: &GreenMatrix<S>, n: usize) -> Result<Vec<S>> {
    if n == 0 || n > q.n_max().min(green.n_max()) {
        return Err(Error::SizeExceeded {
            requested: n,
            available: q.n_max().min(green.n_max()),
        });
    }
    Ok((1..=n)
        .map(|j| green.get(n, j).clone() * q.get(j, j).clone())
        .collect())
}

/// Same law written through the exponent:
/// `P(L_n = j) = Phi(j:j) C(n,j) sum_a C(n-j,a) (-1)^a / Phi(j+a)`.
pub fn last_part_law_from_phi<S: Scalar>(table: &PhiTable<S>, n: usize) -> Result<Vec<S>> {
    if n == 0 || n > table.n_max() {
        return Err(Error::SizeExceeded {
            requested: n,
            available: table.n_max(),
        });
    }
    Ok((1..=n)
        .map(|j| {
            let sum: S = (0..=n - j)
                .map(|a| binomial::<S>(n - j, a) * sign::<S>(a) / table.phi(j + a).clone())
                .sum();
            table.binom(j, j).clone() * binomial::<S>(n, j) * sum
        })
        .collect())
}
