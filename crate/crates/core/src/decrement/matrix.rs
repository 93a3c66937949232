use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::phi_model::{Atom, PhiTable};
use crate::scalar::{binomial, rising, Rational, Scalar};

/// Lower-triangular row-stochastic matrix `q(n:m)`: the law of the first part
/// of the composition of `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct DecrementMatrix<S> {
    rows: Vec<Vec<S>>,
}

impl<S: Scalar> DecrementMatrix<S> {
    /// Wraps rows without checking stochasticity, so that externally produced
    /// matrices can be refereed. Row `n` must hold `n` non-negative entries.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::MalformedMatrix("no rows".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != i + 1 {
                return Err(Error::MalformedMatrix(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    i + 1
                )));
            }
            if let Some(m) = row.iter().position(|v| *v < S::zero()) {
                return Err(Error::MalformedMatrix(format!(
                    "negative entry q({}:{}) = {}",
                    i + 1,
                    m + 1,
                    row[m]
                )));
            }
        }
        Ok(Self { rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<S>>) -> Self {
        Self { rows }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len()
    }

    /// `q(n:m)` for `1 <= m <= n <= n_max`.
    pub fn get(&self, n: usize, m: usize) -> &S {
        &self.rows[n - 1][m - 1]
    }

    pub fn row(&self, n: usize) -> &[S] {
        &self.rows[n - 1]
    }

    pub fn rows(&self) -> &[Vec<S>] {
        &self.rows
    }

    pub fn truncated(&self, n_max: usize) -> Self {
        Self {
            rows: self.rows[..n_max.min(self.n_max())].to_vec(),
        }
    }

    /// First row whose sum is not one, with the sum.
    pub fn row_sum_defect(&self, abs_tol: f64) -> Option<(usize, S)> {
        self.rows.iter().enumerate().find_map(|(i, row)| {
            let s: S = row.iter().cloned().sum();
            (!s.approx_eq(&S::one(), abs_tol)).then_some((i + 1, s))
        })
    }

    pub fn to_f64(&self) -> DecrementMatrix<f64> {
        DecrementMatrix {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(Scalar::to_f64).collect())
                .collect(),
        }
    }

    /// Singletons only: `q(n:1) = 1`.
    pub fn pure_singletons(n_max: usize) -> Self {
        Self::from_rows_unchecked(
            (1..=n_max)
                .map(|n| {
                    (1..=n)
                        .map(|m| if m == 1 { S::one() } else { S::zero() })
                        .collect()
                })
                .collect(),
        )
    }

    /// One block: `q(n:n) = 1`.
    pub fn one_part(n_max: usize) -> Self {
        Self::from_rows_unchecked(
            (1..=n_max)
                .map(|n| {
                    (1..=n)
                        .map(|m| if m == n { S::one() } else { S::zero() })
                        .collect()
                })
                .collect(),
        )
    }
}

/// `q(n:m) = Phi(n:m) / Phi(n)`.
pub fn decrement_from_phi<S: Scalar>(table: &PhiTable<S>) -> DecrementMatrix<S> {
    DecrementMatrix::from_rows_unchecked(
        (1..=table.n_max())
            .map(|n| {
                table
                    .binom_row(n)
                    .iter()
                    .map(|v| v.clone() / table.phi(n).clone())
                    .collect()
            })
            .collect(),
    )
}

/// Decrement matrix of the `(alpha, theta)` family,
/// `C(n,m) [1-alpha]_{m-1} / [theta+n-m]_m * ((n-m) alpha + m theta) / n`.
pub fn two_param_decrement<S: Scalar>(
    alpha: &Rational,
    theta: &Rational,
    n_max: usize,
) -> Result<DecrementMatrix<S>> {
    if *alpha < Rational::zero() || *alpha >= Rational::one() || *theta < Rational::zero() {
        return Err(Error::InvalidParameters(format!(
            "(alpha, theta) = ({alpha}, {theta}) is outside [0, 1) x [0, inf)"
        )));
    }
    let a = S::from_rational(alpha);
    let t = S::from_rational(theta);
    let one_minus_a = S::one() - a.clone();
    let rows = (1..=n_max)
        .map(|n| {
            (1..=n)
                .map(|m| {
                    if m == n {
                        // [1-alpha]_{n-1} / [1+theta]_{n-1}; avoids 0/0 at theta = 0.
                        rising(&one_minus_a, n - 1) / rising(&(S::one() + t.clone()), n - 1)
                    } else {
                        binomial::<S>(n, m) * rising(&one_minus_a, m - 1)
                            / rising(&(t.clone() + S::from_usize(n - m)), m)
                            * (S::from_usize(n - m) * a.clone() + S::from_usize(m) * t.clone())
                            / S::from_usize(n)
                    }
                })
                .collect()
        })
        .collect();
    Ok(DecrementMatrix::from_rows_unchecked(rows))
}

/// Stick-breaking with i.i.d. cut fractions `X` drawn from atoms on `(0, 1]`:
/// `q(n:m) = C(n,m) E[X^m (1-X)^(n-m)] / E[1 - (1-X)^n]`.
pub fn stick_breaking_decrement<S: Scalar>(x_law: &[Atom], n_max: usize) -> Result<DecrementMatrix<S>> {
    let atoms = probability_atoms::<S>(x_law)?;
    let rows = (1..=n_max)
        .map(|n| {
            let denom: S = atoms
                .iter()
                .map(|(x, w)| w.clone() * (S::one() - (S::one() - x.clone()).powu(n as u32)))
                .sum();
            (1..=n)
                .map(|m| {
                    let moment: S = atoms
                        .iter()
                        .map(|(x, w)| {
                            w.clone() * x.powu(m as u32) * (S::one() - x.clone()).powu((n - m) as u32)
                        })
                        .sum();
                    binomial::<S>(n, m) * moment / denom.clone()
                })
                .collect()
        })
        .collect();
    Ok(DecrementMatrix::from_rows_unchecked(rows))
}

/// Checks that atoms describe a probability law on `(0, 1]` and lowers them.
pub(crate) fn probability_atoms<S: Scalar>(x_law: &[Atom]) -> Result<Vec<(S, S)>> {
    if x_law.is_empty() {
        return Err(Error::InvalidParameters("empty law for X".into()));
    }
    for a in x_law {
        if a.x <= Rational::zero() || a.x > Rational::one() || a.w <= Rational::zero() {
            return Err(Error::InvalidParameters(format!(
                "atom ({}, {}) must have location in (0, 1] and positive weight",
                a.x, a.w
            )));
        }
    }
    let atoms: Vec<(S, S)> = x_law
        .iter()
        .map(|a| (S::from_rational(&a.x), S::from_rational(&a.w)))
        .collect();
    let total: S = atoms.iter().map(|(_, w)| w.clone()).sum();
    if !total.approx_eq(&S::one(), 1e-12) {
        return Err(Error::InvalidParameters(format!(
            "weights of X sum to {total}, not 1"
        )));
    }
    Ok(atoms)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum RecursionReport {
    Pass,
    Fail { n: usize, m: usize, residual: String },
}

impl RecursionReport {
    pub fn passed(&self) -> bool {
        matches!(self, RecursionReport::Pass)
    }
}

/// Checks `q(1:1) = 1` and
/// `q(n:m) = (m+1)/(n+1) q(n+1:m+1) + (n+1-m)/(n+1) q(n+1:m) + q(n+1:1) q(n:m)/(n+1)`
/// for all `1 <= m <= n < n_max`. The first failure in `(n, m)` order is reported;
/// a bad `q(1:1)` is reported at `(1, 1)`.
pub fn verify_decrement_recursion<S: Scalar>(q: &DecrementMatrix<S>, abs_tol: f64) -> RecursionReport {
    if !q.get(1, 1).approx_eq(&S::one(), abs_tol) {
        return RecursionReport::Fail {
            n: 1,
            m: 1,
            residual: (q.get(1, 1).clone() - S::one()).to_string(),
        };
    }
    for n in 1..q.n_max() {
        let n1 = S::from_usize(n + 1);
        for m in 1..=n {
            let rhs = S::from_usize(m + 1) / n1.clone() * q.get(n + 1, m + 1).clone()
                + S::from_usize(n + 1 - m) / n1.clone() * q.get(n + 1, m).clone()
                + q.get(n + 1, 1).clone() * q.get(n, m).clone() / n1.clone();
            if !rhs.approx_eq(q.get(n, m), abs_tol) {
                return RecursionReport::Fail {
                    n,
                    m,
                    residual: (q.get(n, m).clone() - rhs).to_string(),
                };
            }
        }
    }
    RecursionReport::Pass
}
