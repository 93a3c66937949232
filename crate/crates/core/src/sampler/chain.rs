use std::collections::HashMap;

use super::rng::RngStream;
use crate::decrement::DecrementMatrix;
use crate::error::{Error, Result};
use crate::law::{compositions, Composition, CompositionLaw};
use crate::scalar::Scalar;

fn check_size(n: usize, available: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameters("n must be at least 1".into()));
    }
    if n > available {
        return Err(Error::SizeExceeded {
            requested: n,
            available,
        });
    }
    Ok(())
}

/// Runs the decrement chain from `n` down to 0 and returns its decrements.
pub fn sample_composition(q: &DecrementMatrix<f64>, n: usize, rng: &mut RngStream) -> Result<Composition> {
    check_size(n, q.n_max())?;
    let mut parts = Vec::new();
    let mut rest = n;
    while rest > 0 {
        let m = rng.categorical(q.row(rest)) + 1;
        parts.push(m);
        rest -= m;
    }
    Composition::new(parts)
}

/// Exact transition probabilities from a composition of `n` to compositions of
/// `n + 1` when a new element is added.
///
/// Blocks are scanned left to right. At block `i`, with part `n_i` and tail sum
/// `N_i`, the new element opens a singleton before the block with probability
/// `q(N_i+1:1)/(N_i+1)`, joins the block with probability
/// `(n_i+1)/(N_i+1) q(N_i+1:n_i+1)/q(N_i:n_i)`, and otherwise moves on. Past the
/// last block it becomes a final singleton. Insertions that land in the same
/// run of ones give the same composition and are summed.
pub fn growth_branches<S: Scalar>(
    q: &DecrementMatrix<S>,
    current: &Composition,
) -> Result<Vec<(Composition, S)>> {
    let n = current.total();
    check_size(n + 1, q.n_max())?;
    let parts = current.parts();
    let tails = current.tail_sums();
    let mut out: Vec<(Composition, S)> = Vec::with_capacity(2 * parts.len() + 1);
    let mut add = |parts: Vec<usize>, p: S| {
        if p <= S::zero() {
            return;
        }
        let c = Composition::new(parts).expect("positive parts");
        match out.iter_mut().find(|(d, _)| *d == c) {
            Some(entry) => entry.1 = entry.1.clone() + p,
            None => out.push((c, p)),
        }
    };
    let mut reach = S::one();
    for (i, (&part, &tail)) in parts.iter().zip(&tails).enumerate() {
        let denom = q.get(tail, part);
        if denom.is_zero() {
            return Err(Error::InvalidComposition(format!(
                "{current} has probability zero under the decrement matrix"
            )));
        }
        let next = S::from_usize(tail + 1);
        let insert = q.get(tail + 1, 1).clone() / next.clone();
        let adjoin = S::from_usize(part + 1) / next * q.get(tail + 1, part + 1).clone() / denom.clone();

        let mut inserted = parts.to_vec();
        inserted.insert(i, 1);
        add(inserted, reach.clone() * insert.clone());
        let mut grown = parts.to_vec();
        grown[i] += 1;
        add(grown, reach.clone() * adjoin.clone());

        reach = reach * (S::one() - insert - adjoin);
    }
    let mut appended = parts.to_vec();
    appended.push(1);
    add(appended, reach);
    Ok(out)
}

/// One step of the growth kernel.
pub fn grow_composition(
    q: &DecrementMatrix<f64>,
    current: &Composition,
    rng: &mut RngStream,
) -> Result<Composition> {
    let branches = growth_branches(q, current)?;
    let weights: Vec<f64> = branches.iter().map(|(_, p)| *p).collect();
    let i = rng.categorical(&weights);
    Ok(branches[i].0.clone())
}

/// Grows a composition of `n` from `(1)` by repeated kernel steps.
pub fn sample_by_growth(q: &DecrementMatrix<f64>, n: usize, rng: &mut RngStream) -> Result<Composition> {
    check_size(n, q.n_max())?;
    let mut c = Composition::singletons(1);
    for _ in 1..n {
        c = grow_composition(q, &c, rng)?;
    }
    Ok(c)
}

/// Pushes the law of level `n` through [`growth_branches`], giving a law on
/// compositions of `n + 1` listed in the order of [`compositions`].
pub fn push_forward_law<S: Scalar>(
    q: &DecrementMatrix<S>,
    law: &CompositionLaw<S>,
) -> Result<CompositionLaw<S>> {
    let mut mass: HashMap<Composition, S> = HashMap::new();
    for (lambda, p) in law.iter() {
        if p.is_zero() {
            continue;
        }
        for (mu, w) in growth_branches(q, lambda)? {
            let v = mass.remove(&mu).unwrap_or_else(S::zero) + p.clone() * w;
            mass.insert(mu, v);
        }
    }
    let entries = compositions(law.n() + 1)
        .into_iter()
        .map(|c| {
            let p = mass.remove(&c).unwrap_or_else(S::zero);
            (c, p)
        })
        .collect();
    CompositionLaw::from_entries(law.n() + 1, entries)
}
