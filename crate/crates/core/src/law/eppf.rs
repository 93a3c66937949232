use itertools::Itertools;
use num_traits::{One, Zero};

use super::composition::Composition;
use super::exact::composition_probability;
use crate::decrement::DecrementMatrix;
use crate::error::{Error, Result};
use crate::scalar::{factorial, rising, Rational, Scalar};

/// Default largest number of blocks for permutation sums.
pub const DEFAULT_EPPF_CAP: usize = 9;

fn check_sizes(sizes: &[usize], cap: usize) -> Result<()> {
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(Error::InvalidComposition(format!(
            "block sizes must be positive and non-empty, got {sizes:?}"
        )));
    }
    if sizes.len() > cap {
        return Err(Error::CapExceeded {
            what: "EPPF block count",
            requested: sizes.len(),
            cap,
        });
    }
    Ok(())
}

/// Steps a slice to its next lexicographic permutation; `false` after the last.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Exchangeable partition probability function induced by a decrement matrix:
/// the composition probabilities summed over all orderings of the block sizes,
/// divided by the multinomial coefficient.
///
/// Repeated sizes are handled by summing over distinct arrangements and
/// multiplying by the product of multiplicity factorials.
pub fn eppf<S: Scalar>(q: &DecrementMatrix<S>, sizes: &[usize]) -> Result<S> {
    eppf_with_cap(q, sizes, DEFAULT_EPPF_CAP)
}

pub fn eppf_with_cap<S: Scalar>(q: &DecrementMatrix<S>, sizes: &[usize], cap: usize) -> Result<S> {
    check_sizes(sizes, cap)?;
    let n: usize = sizes.iter().sum();
    if n > q.n_max() {
        return Err(Error::SizeExceeded {
            requested: n,
            available: q.n_max(),
        });
    }
    let mut arrangement = sizes.to_vec();
    arrangement.sort_unstable();
    let mut total = S::zero();
    loop {
        let lambda = Composition::new(arrangement.clone())?;
        total = total + composition_probability(q, &lambda)?;
        if !next_permutation(&mut arrangement) {
            break;
        }
    }
    let multiplicity: S = arrangement
        .iter()
        .counts()
        .values()
        .map(|&c| factorial::<S>(c))
        .fold(S::one(), |a, b| a * b);
    let multinomial = sizes
        .iter()
        .fold(factorial::<S>(n), |acc, &s| acc / factorial::<S>(s));
    Ok(total * multiplicity / multinomial)
}

/// Closed-form `(alpha, theta)` EPPF:
/// `prod_{i<k} (theta + i alpha) / [1+theta]_{n-1} * prod_i [1-alpha]_{n_i - 1}`.
pub fn two_param_eppf<S: Scalar>(alpha: &Rational, theta: &Rational, sizes: &[usize]) -> Result<S> {
    check_sizes(sizes, usize::MAX)?;
    let a = S::from_rational(alpha);
    let t = S::from_rational(theta);
    let n: usize = sizes.iter().sum();
    let k = sizes.len();
    let numerator = (1..k).fold(S::one(), |acc, i| {
        acc * (t.clone() + S::from_usize(i) * a.clone())
    });
    let blocks = sizes
        .iter()
        .fold(S::one(), |acc, &s| acc * rising(&(S::one() - a.clone()), s - 1));
    Ok(numerator / rising(&(S::one() + t), n - 1) * blocks)
}

/// Sums, over all `k!` orderings of the block sizes, the product
/// `prod_i ((N_i - n_i) alpha + n_i theta) / (N_i ((k-i) alpha + theta))`.
/// The sum is identically one on the admissible parameter range.
pub fn ordering_factor_sum<S: Scalar>(alpha: &Rational, theta: &Rational, sizes: &[usize]) -> Result<S> {
    check_sizes(sizes, DEFAULT_EPPF_CAP)?;
    if alpha.is_zero() && theta.is_zero() {
        return Err(Error::InvalidParameters(
            "alpha = theta = 0 makes every factor 0/0".into(),
        ));
    }
    if *alpha < Rational::zero() || *alpha >= Rational::one() || *theta < Rational::zero() {
        return Err(Error::InvalidParameters(format!(
            "(alpha, theta) = ({alpha}, {theta}) is outside [0, 1) x [0, inf)"
        )));
    }
    let a = S::from_rational(alpha);
    let t = S::from_rational(theta);
    let k = sizes.len();
    let mut total = S::zero();
    for order in sizes.iter().copied().permutations(k) {
        let lambda = Composition::new(order)?;
        let tails = lambda.tail_sums();
        let mut prod = S::one();
        // The last factor is n_k theta / (n_k theta) = 1, also in the theta -> 0 limit.
        for (i, (&n_i, &big_n)) in lambda.parts().iter().zip(&tails).take(k - 1).enumerate() {
            let num = S::from_usize(big_n - n_i) * a.clone() + S::from_usize(n_i) * t.clone();
            let den = S::from_usize(big_n) * (S::from_usize(k - 1 - i) * a.clone() + t.clone());
            prod = prod * num / den;
        }
        total = total + prod;
    }
    Ok(total)
}
