#![allow(dead_code)]

use regcomp::decrement::{decrement_from_phi, DecrementMatrix};
use regcomp::law::{enumerate_law, CompositionLaw};
use regcomp::phi_model::{build_phi_table, DegenerateKind, LevyFamily, Normalization, PhiTable};
use regcomp::Rational;

pub fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// The families named in the acceptance criteria.
pub fn presets() -> Vec<(&'static str, LevyFamily)> {
    vec![
        ("two_param(0,1)", LevyFamily::two_param(r(0, 1), r(1, 1))),
        ("two_param(1/2,1/2)", LevyFamily::two_param(r(1, 2), r(1, 2))),
        ("two_param(1/2,0)", LevyFamily::two_param(r(1, 2), r(0, 1))),
        ("geometric(1/2)", LevyFamily::Geometric { x: r(1, 2) }),
        (
            "drift only",
            LevyFamily::Degenerate {
                structure: DegenerateKind::Singletons,
            },
        ),
        (
            "myriads(1/2, d=1)",
            LevyFamily::discrete(r(1, 1), vec![(r(1, 2), r(1, 1))]),
        ),
    ]
}

pub fn table(f: &LevyFamily, n_max: usize) -> PhiTable<Rational> {
    build_phi_table(f, n_max, Normalization::Unit).unwrap()
}

pub fn decrement(f: &LevyFamily, n_max: usize) -> DecrementMatrix<Rational> {
    decrement_from_phi(&table(f, n_max))
}

pub fn laws(q: &DecrementMatrix<Rational>, n_max: usize) -> Vec<CompositionLaw<Rational>> {
    (1..=n_max).map(|n| enumerate_law(q, n).unwrap()).collect()
}

/// `P(j is a tail sum of C_n)` by enumeration.
pub fn visit_oracle(law: &CompositionLaw<Rational>, j: usize) -> Rational {
    law.iter()
        .filter(|(c, _)| c.tail_sums().contains(&j))
        .map(|(_, p)| p.clone())
        .sum()
}

/// Probability that the part containing a uniformly chosen element has size
/// `j` and is preceded by parts summing to `i`.
pub fn size_biased_oracle(law: &CompositionLaw<Rational>, i: usize, j: usize) -> Rational {
    let n = law.n() as i64;
    let mut total = r(0, 1);
    for (c, p) in law.iter() {
        let mut before = 0;
        for &part in c.parts() {
            if part == j && before == i {
                total += p.clone() * r(part as i64, n);
            }
            before += part;
        }
    }
    total
}
