//! Moments of the tripartite decomposition `(G, H, D)` of `[0, 1]` around the
//! block of a tagged element, and of the singleton frequency.

use crate::error::{Error, Result};
use crate::phi_model::PhiTable;
use crate::scalar::{binomial, factorial, sign, Scalar};

/// `E[G^i H^(j-1) D^k]` for `j >= 1`:
///
/// `(sum_{a<=i} C(i,a) (-1)^a / Phi(a+j+k)) * (sum_{b<=k} (-1)^b C(k,b) Phi(j+b : j+b))`.
///
/// The value is invariant under rescaling `Phi`.
pub fn tripartite_moment<S: Scalar>(table: &PhiTable<S>, i: usize, j: usize, k: usize) -> Result<S> {
    if j == 0 {
        return Err(Error::InvalidParameters(
            "the middle index j must be at least 1".into(),
        ));
    }
    if i + j + k > table.n_max() {
        return Err(Error::SizeExceeded {
            requested: i + j + k,
            available: table.n_max(),
        });
    }
    let before: S = (0..=i)
        .map(|a| binomial::<S>(i, a) * sign::<S>(a) / table.phi(a + j + k).clone())
        .sum();
    let block: S = (0..=k)
        .map(|b| sign::<S>(b) * binomial::<S>(k, b) * table.binom(j + b, j + b).clone())
        .sum();
    Ok(before * block)
}

/// Probability that a size-biased part of the composition of `n = i + j + k`
/// has size `j`, preceded by parts summing to `i` and followed by parts summing
/// to `k`: the multinomial `C(n-1; i, j-1, k)` times [`tripartite_moment`].
pub fn size_biased_part_probability<S: Scalar>(
    table: &PhiTable<S>,
    i: usize,
    j: usize,
    k: usize,
) -> Result<S> {
    let moment = tripartite_moment(table, i, j, k)?;
    let n = i + j + k;
    let multinomial = factorial::<S>(n - 1) / (factorial::<S>(i) * factorial::<S>(j - 1) * factorial::<S>(k));
    Ok(multinomial * moment)
}

/// `E f^n = n! d^n / prod_{i=1}^n Phi(i)`, where `f` is the asymptotic
/// frequency of singletons. The table must carry the same scale as `drift`.
pub fn singleton_frequency_moment<S: Scalar>(table: &PhiTable<S>, drift: &S, n: usize) -> Result<S> {
    if n > table.n_max() {
        return Err(Error::SizeExceeded {
            requested: n,
            available: table.n_max(),
        });
    }
    let denom = (1..=n).fold(S::one(), |acc, i| acc * table.phi(i).clone());
    Ok(factorial::<S>(n) * drift.powu(n as u32) / denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phi_model::{build_phi_table, LevyFamily, Normalization};
    use crate::scalar::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    fn table(f: LevyFamily, n: usize, norm: Normalization) -> PhiTable<Rational> {
        build_phi_table(&f, n, norm).unwrap()
    }

    #[test]
    fn ewens_mean_gap_before() {
        let t = table(LevyFamily::two_param(q(0, 1), q(1, 1)), 4, Normalization::Unit);
        assert_eq!(tripartite_moment(&t, 1, 1, 0).unwrap(), q(1, 4));
    }

    #[test]
    fn specialisations() {
        for fam in [
            LevyFamily::two_param(q(1, 2), q(1, 2)),
            LevyFamily::two_param(q(1, 3), q(0, 1)),
            LevyFamily::discrete(q(1, 1), vec![(q(1, 2), q(1, 1))]),
        ] {
            let t = table(fam, 9, Normalization::Unit);
            for n in 1..=9usize {
                // E (1-G)^(n-1) expanded through E G^i.
                let lhs: Rational = (0..n)
                    .map(|i| {
                        binomial::<Rational>(n - 1, i)
                            * sign::<Rational>(i)
                            * tripartite_moment(&t, i, 1, 0).unwrap()
                    })
                    .sum();
                assert_eq!(lhs, t.phi(1).clone() / t.phi(n).clone());
                // E D^(n-1) = Phi(n:1) / (n Phi(n)).
                assert_eq!(
                    tripartite_moment(&t, 0, 1, n - 1).unwrap(),
                    t.binom(n, 1).clone() / (q(n as i64, 1) * t.phi(n).clone())
                );
                // E H^(n-1) = p(n).
                assert_eq!(
                    tripartite_moment(&t, 0, n, 0).unwrap(),
                    t.binom(n, n).clone() / t.phi(n).clone()
                );
            }
        }
    }

    #[test]
    fn pure_drift_has_no_large_blocks() {
        let t = table(LevyFamily::discrete(q(1, 1), vec![]), 6, Normalization::Raw);
        for j in 2..=6 {
            for i in 0..=6 - j {
                assert_eq!(tripartite_moment(&t, i, j, 6 - j - i).unwrap(), q(0, 1));
            }
        }
        assert!(tripartite_moment(&t, 0, 0, 1).is_err());
        assert!(tripartite_moment(&t, 3, 3, 1).is_err());
    }

    #[test]
    fn singleton_frequency() {
        let t = table(
            LevyFamily::discrete(q(1, 1), vec![(q(1, 2), q(1, 1))]),
            3,
            Normalization::Raw,
        );
        assert_eq!(*t.phi(1), q(3, 2));
        assert_eq!(singleton_frequency_moment(&t, &q(1, 1), 1).unwrap(), q(2, 3));
        assert_eq!(singleton_frequency_moment(&t, &q(1, 1), 2).unwrap(), q(16, 33));

        let drift = table(LevyFamily::discrete(q(3, 1), vec![]), 5, Normalization::Raw);
        for n in 1..=5 {
            assert_eq!(singleton_frequency_moment(&drift, &q(3, 1), n).unwrap(), q(1, 1));
        }
        let none = table(LevyFamily::two_param(q(0, 1), q(1, 1)), 4, Normalization::Unit);
        assert_eq!(singleton_frequency_moment(&none, &q(0, 1), 3).unwrap(), q(0, 1));
    }
}
