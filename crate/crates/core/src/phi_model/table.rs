use std::cmp::Ordering;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::family::LevyFamily;
use crate::error::{Error, Result};
use crate::scalar::{binomial, rising, sign, Rational, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Normalization {
    /// Scale as given by the Lévy data.
    Raw,
    /// Divided through by `Phi(1)`.
    #[default]
    Unit,
}

/// `Phi(n)` and the binomial moments `Phi(n:m)` for `1 <= m <= n <= n_max`.
///
/// `Phi(0) = 0` is implied and never stored. Indices are one-based in the
/// accessors.
#[derive(Debug, Clone, PartialEq)]
pub struct PhiTable<S> {
    phi: Vec<S>,
    binom: Vec<Vec<S>>,
    normalization: Normalization,
}

impl<S: Scalar> PhiTable<S> {
    pub fn n_max(&self) -> usize {
        self.phi.len()
    }

    pub fn phi(&self, n: usize) -> &S {
        &self.phi[n - 1]
    }

    /// `Phi(n)` with the convention `Phi(0) = 0`.
    pub fn phi_or_zero(&self, n: usize) -> S {
        if n == 0 {
            S::zero()
        } else {
            self.phi[n - 1].clone()
        }
    }

    pub fn binom(&self, n: usize, m: usize) -> &S {
        &self.binom[n - 1][m - 1]
    }

    pub fn phi_values(&self) -> &[S] {
        &self.phi
    }

    pub fn binom_row(&self, n: usize) -> &[S] {
        &self.binom[n - 1]
    }

    pub fn normalization(&self) -> Normalization {
        self.normalization
    }

    /// Rescales so that `Phi(1) = 1`.
    pub fn to_unit(&self) -> PhiTable<S> {
        if self.normalization == Normalization::Unit {
            return self.clone();
        }
        let scale = self.phi[0].clone();
        PhiTable {
            phi: self.phi.iter().map(|v| v.clone() / scale.clone()).collect(),
            binom: self
                .binom
                .iter()
                .map(|row| row.iter().map(|v| v.clone() / scale.clone()).collect())
                .collect(),
            normalization: Normalization::Unit,
        }
    }

    /// Restricts the table to its first `n_max` rows.
    pub fn truncated(&self, n_max: usize) -> PhiTable<S> {
        let n = n_max.min(self.n_max());
        PhiTable {
            phi: self.phi[..n].to_vec(),
            binom: self.binom[..n].to_vec(),
            normalization: self.normalization,
        }
    }

    /// Builds a table from `Phi(1..=n_max)`, filling the binomial moments by the
    /// alternating binomial sum and certifying complete alternation.
    pub fn from_sequence(values: &[S], n_max: usize, normalization: Normalization) -> Result<Self> {
        if n_max == 0 {
            return Err(Error::InvalidParameters("n_max must be at least 1".into()));
        }
        if values.len() < n_max {
            return Err(Error::SizeExceeded {
                requested: n_max,
                available: values.len(),
            });
        }
        let phi = values[..n_max].to_vec();
        for (i, v) in phi.iter().enumerate() {
            if v.partial_cmp(&S::zero()) != Some(Ordering::Greater) {
                return Err(Error::NonPositivePhi {
                    n: i + 1,
                    value: v.to_string(),
                });
            }
        }
        let binom = alternating_binomial_moments(&phi);
        for (i, row) in binom.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if v.is_definitely_negative(&phi[i]) {
                    return Err(Error::NotCompletelyAlternating {
                        n: i + 1,
                        m: j + 1,
                        value: v.to_string(),
                    });
                }
            }
        }
        Ok(PhiTable {
            phi,
            binom,
            normalization,
        })
    }

    /// First `(n, m)` where `Phi(n) = sum_m Phi(n:m)` or the Pascal-type recursion
    /// fails, with the residual.
    pub fn check_identities(&self, abs_tol: f64) -> Option<(usize, usize, S)> {
        for n in 1..=self.n_max() {
            let total: S = self.binom_row(n).iter().cloned().sum();
            if !total.approx_eq(self.phi(n), abs_tol) {
                return Some((n, 0, total - self.phi(n).clone()));
            }
        }
        for n in 1..self.n_max() {
            let n1 = S::from_usize(n + 1);
            for m in 1..=n {
                let rhs = S::from_usize(m + 1) / n1.clone() * self.binom(n + 1, m + 1).clone()
                    + S::from_usize(n - m + 1) / n1.clone() * self.binom(n + 1, m).clone();
                if !rhs.approx_eq(self.binom(n, m), abs_tol) {
                    return Some((n, m, self.binom(n, m).clone() - rhs));
                }
            }
        }
        None
    }
}

/// `Phi(n:m) = C(n,m) sum_j (-1)^(j+1) C(m,j) Phi(n-m+j)` with `Phi(0) = 0`.
pub(crate) fn alternating_binomial_moments<S: Scalar>(phi: &[S]) -> Vec<Vec<S>> {
    let at = |k: usize| if k == 0 { S::zero() } else { phi[k - 1].clone() };
    (1..=phi.len())
        .map(|n| {
            (1..=n)
                .map(|m| {
                    let sum: S = (0..=m)
                        .map(|j| sign::<S>(j + 1) * binomial::<S>(m, j) * at(n - m + j))
                        .sum();
                    binomial::<S>(n, m) * sum
                })
                .collect()
        })
        .collect()
}

/// Tabulates `Phi` and its binomial moments for a Lévy family.
pub fn build_phi_table<S: Scalar>(
    family: &LevyFamily,
    n_max: usize,
    normalization: Normalization,
) -> Result<PhiTable<S>> {
    if n_max == 0 {
        return Err(Error::InvalidParameters("n_max must be at least 1".into()));
    }
    family.validate()?;
    let (phi, binom) = match family.canonical() {
        LevyFamily::DiscreteMeasure { drift, atoms } => {
            let drift = S::from_rational(&drift);
            let atoms: Vec<(S, S)> = atoms
                .iter()
                .map(|a| (S::from_rational(&a.x), S::from_rational(&a.w)))
                .collect();
            measure_table(n_max, &drift, |n, m| {
                Ok(atoms
                    .iter()
                    .map(|(x, w)| w.clone() * x.powu(m as u32) * (S::one() - x.clone()).powu((n - m) as u32))
                    .sum())
            })?
        }
        LevyFamily::BetaDensity { drift, scale, a, b } => {
            let drift = S::from_rational(&drift);
            let scale = S::from_rational(&scale);
            measure_table(n_max, &drift, |n, m| {
                let p = a.clone() + Rational::from_integer((m as i64).into());
                let q = b.clone() + Rational::from_integer(((n - m) as i64).into());
                Ok(scale.clone() * S::beta_fn(&p, &q)?)
            })?
        }
        LevyFamily::TwoParam { alpha, theta } => two_param_table(&alpha, &theta, n_max),
        _ => unreachable!("canonical() returns a primitive family"),
    };
    let table = PhiTable {
        phi,
        binom,
        normalization: Normalization::Raw,
    };
    match normalization {
        Normalization::Unit => Ok(table.to_unit()),
        Normalization::Raw => match family.canonical() {
            LevyFamily::TwoParam { alpha, theta } => {
                // Raw scale for this family is Phi(1) = B(1 - alpha, 1 + theta).
                let phi1 = if alpha.is_zero() {
                    S::one() / (S::one() + S::from_rational(&theta))
                } else {
                    S::beta_fn(&(Rational::one() - alpha), &(Rational::one() + theta))?
                };
                let unit = table.to_unit();
                Ok(PhiTable {
                    phi: unit.phi.iter().map(|v| v.clone() * phi1.clone()).collect(),
                    binom: unit
                        .binom
                        .iter()
                        .map(|row| row.iter().map(|v| v.clone() * phi1.clone()).collect())
                        .collect(),
                    normalization: Normalization::Raw,
                })
            }
            _ => Ok(table),
        },
    }
}

type Columns<S> = (Vec<S>, Vec<Vec<S>>);

/// `Phi(n:m) = C(n,m) I(n,m) + n d 1(m = 1)` where `I(n,m)` integrates
/// `x^m (1-x)^(n-m)` against the measure.
fn measure_table<S: Scalar>(
    n_max: usize,
    drift: &S,
    integral: impl Fn(usize, usize) -> Result<S>,
) -> Result<Columns<S>> {
    let mut phi = Vec::with_capacity(n_max);
    let mut binom = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut row = Vec::with_capacity(n);
        for m in 1..=n {
            let mut v = binomial::<S>(n, m) * integral(n, m)?;
            if m == 1 {
                v = v + S::from_usize(n) * drift.clone();
            }
            row.push(v);
        }
        phi.push(row.iter().cloned().sum());
        binom.push(row);
    }
    Ok((phi, binom))
}

/// Closed forms of the two-parameter family with `Phi(1) = 1`.
fn two_param_table<S: Scalar>(alpha: &Rational, theta: &Rational, n_max: usize) -> Columns<S> {
    let alpha = S::from_rational(alpha);
    let theta = S::from_rational(theta);
    let one = S::one();
    let lower = one.clone() + one.clone() + theta.clone() - alpha.clone();
    let phi: Vec<S> = (1..=n_max)
        .map(|n| S::from_usize(n) * rising(&(theta.clone() + one.clone()), n - 1) / rising(&lower, n - 1))
        .collect();
    let binom = (1..=n_max)
        .map(|n| {
            (1..=n)
                .map(|m| {
                    if m == n {
                        // Phi(n:n) = p(n) Phi(n); the general expression is 0/0 at theta = 0.
                        rising(&(one.clone() - alpha.clone()), n - 1)
                            / rising(&(one.clone() + theta.clone()), n - 1)
                            * phi[n - 1].clone()
                    } else {
                        binomial::<S>(n, m) * rising(&(one.clone() - alpha.clone()), m - 1)
                            / rising(&lower, n - 1)
                            * rising(&(theta.clone() + one.clone()), n - 1)
                            / rising(&(theta.clone() + S::from_usize(n - m)), m)
                            * (S::from_usize(n - m) * alpha.clone() + S::from_usize(m) * theta.clone())
                    }
                })
                .collect()
        })
        .collect();
    (phi, binom)
}
