use std::collections::HashMap;

use serde::Serialize;

use super::composition::Composition;
use crate::decrement::DecrementMatrix;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Default largest `n` for exhaustive enumeration (`2^15 = 32768` compositions).
pub const DEFAULT_ENUMERATION_CAP: usize = 16;

/// `p(lambda) = prod_j q(N_j : n_j)` with tail sums `N_j`.
pub fn composition_probability<S: Scalar>(q: &DecrementMatrix<S>, lambda: &Composition) -> Result<S> {
    let n = lambda.total();
    if n > q.n_max() {
        return Err(Error::SizeExceeded {
            requested: n,
            available: q.n_max(),
        });
    }
    Ok(lambda
        .parts()
        .iter()
        .zip(lambda.tail_sums())
        .map(|(&part, tail)| q.get(tail, part).clone())
        .fold(S::one(), |acc, v| acc * v))
}

/// Exact law of the composition of `n`.
#[derive(Debug, Clone)]
pub struct CompositionLaw<S> {
    n: usize,
    entries: Vec<(Composition, S)>,
    index: HashMap<Composition, usize>,
}

impl<S: Scalar> CompositionLaw<S> {
    /// Builds a law from explicit entries; compositions must all total `n` and
    /// be distinct. Missing compositions have probability zero.
    pub fn from_entries(n: usize, entries: Vec<(Composition, S)>) -> Result<Self> {
        let mut index = HashMap::with_capacity(entries.len());
        for (i, (c, _)) in entries.iter().enumerate() {
            if c.total() != n {
                return Err(Error::InvalidComposition(format!("{c} does not sum to {n}")));
            }
            if index.insert(c.clone(), i).is_some() {
                return Err(Error::InvalidComposition(format!("{c} listed twice")));
            }
        }
        Ok(Self { n, entries, index })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn probability(&self, lambda: &Composition) -> S {
        self.index
            .get(lambda)
            .map(|&i| self.entries[i].1.clone())
            .unwrap_or_else(S::zero)
    }

    pub fn entries(&self) -> &[(Composition, S)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Composition, &S)> {
        self.entries.iter().map(|(c, p)| (c, p))
    }

    pub fn total_mass(&self) -> S {
        self.entries.iter().map(|(_, p)| p.clone()).sum()
    }

    /// Returns a copy with `lambda`'s probability replaced.
    pub fn with_probability(&self, lambda: &Composition, p: S) -> Self {
        let mut out = self.clone();
        match out.index.get(lambda) {
            Some(&i) => out.entries[i].1 = p,
            None => {
                out.index.insert(lambda.clone(), out.entries.len());
                out.entries.push((lambda.clone(), p));
            }
        }
        out
    }

    /// Marginal law of a statistic of the composition, keyed by its value.
    pub fn marginal(&self, stat: impl Fn(&Composition) -> usize) -> Vec<S> {
        let mut out = vec![S::zero(); self.n + 1];
        for (c, p) in &self.entries {
            let k = stat(c);
            out[k] = out[k].clone() + p.clone();
        }
        out
    }
}

/// All `2^(n-1)` compositions of `n` with product-formula probabilities,
/// under the default cap.
pub fn enumerate_law<S: Scalar>(q: &DecrementMatrix<S>, n: usize) -> Result<CompositionLaw<S>> {
    enumerate_law_with_cap(q, n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_law_with_cap<S: Scalar>(
    q: &DecrementMatrix<S>,
    n: usize,
    cap: usize,
) -> Result<CompositionLaw<S>> {
    if n == 0 {
        return Err(Error::InvalidParameters("n must be at least 1".into()));
    }
    if n > cap {
        return Err(Error::CapExceeded {
            what: "enumeration",
            requested: n,
            cap,
        });
    }
    if n > q.n_max() {
        return Err(Error::SizeExceeded {
            requested: n,
            available: q.n_max(),
        });
    }
    fn rec<S: Scalar>(
        q: &DecrementMatrix<S>,
        rest: usize,
        acc: S,
        prefix: &mut Vec<usize>,
        out: &mut Vec<(Composition, S)>,
    ) {
        if rest == 0 {
            out.push((Composition::new(prefix.clone()).expect("non-empty"), acc));
            return;
        }
        for first in (1..=rest).rev() {
            prefix.push(first);
            rec(
                q,
                rest - first,
                acc.clone() * q.get(rest, first).clone(),
                prefix,
                out,
            );
            prefix.pop();
        }
    }
    let mut entries = Vec::with_capacity(1 << (n - 1));
    rec(q, n, S::one(), &mut Vec::new(), &mut entries);
    CompositionLaw::from_entries(n, entries)
}

/// One-step extensions `mu` of `lambda` with their deletion coefficients
/// `kappa(lambda, mu)`: growing part `n_j` has weight `(n_j+1)/(n+1)`, inserting
/// a 1 into a run of `j >= 0` consecutive ones has weight `(j+1)/(n+1)`.
pub fn extensions<S: Scalar>(lambda: &Composition) -> Vec<(Composition, S)> {
    let parts = lambda.parts();
    let n1 = S::from_usize(lambda.total() + 1);
    let mut out = Vec::with_capacity(2 * parts.len() + 1);
    for (j, &p) in parts.iter().enumerate() {
        let mut grown = parts.to_vec();
        grown[j] += 1;
        out.push((
            Composition::new(grown).expect("positive parts"),
            S::from_usize(p + 1) / n1.clone(),
        ));
    }
    let mut pos = 0;
    while pos <= parts.len() {
        let run = parts[pos..].iter().take_while(|&&p| p == 1).count();
        let mut inserted = parts.to_vec();
        inserted.insert(pos, 1);
        out.push((
            Composition::new(inserted).expect("positive parts"),
            S::from_usize(run + 1) / n1.clone(),
        ));
        // Every slot inside the run yields the same composition.
        pos += run + 1;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum ConsistencyReport {
    Pass,
    Fail {
        composition: Composition,
        residual: String,
    },
}

impl ConsistencyReport {
    pub fn passed(&self) -> bool {
        matches!(self, ConsistencyReport::Pass)
    }
}

/// Checks `p(lambda) = sum_{mu extends lambda} kappa(lambda, mu) p(mu)` for every
/// composition of `n` (and `p((1)) = 1` when `n = 1`).
pub fn check_sampling_consistency<S: Scalar>(
    law_n: &CompositionLaw<S>,
    law_next: &CompositionLaw<S>,
    abs_tol: f64,
) -> Result<ConsistencyReport> {
    if law_next.n() != law_n.n() + 1 {
        return Err(Error::MismatchedSizes(law_n.n(), law_next.n()));
    }
    if law_n.n() == 1 {
        let one = Composition::singletons(1);
        let p = law_n.probability(&one);
        if !p.approx_eq(&S::one(), abs_tol) {
            return Ok(ConsistencyReport::Fail {
                composition: one,
                residual: (p - S::one()).to_string(),
            });
        }
    }
    for lambda in super::composition::compositions(law_n.n()) {
        let rhs: S = extensions::<S>(&lambda)
            .into_iter()
            .map(|(mu, kappa)| kappa * law_next.probability(&mu))
            .sum();
        let lhs = law_n.probability(&lambda);
        if !lhs.approx_eq(&rhs, abs_tol) {
            return Ok(ConsistencyReport::Fail {
                composition: lambda,
                residual: (lhs - rhs).to_string(),
            });
        }
    }
    Ok(ConsistencyReport::Pass)
}
