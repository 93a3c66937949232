//! Worked examples, one test per operation.

mod common;

use common::{r, table};
use regcomp::decrement::*;
use regcomp::law::*;
use regcomp::phi_model::*;
use regcomp::sampler::*;
use regcomp::scalar::{factorial, rising};
use regcomp::{Error, Rational};

fn raw(f: &LevyFamily, n: usize) -> PhiTable<Rational> {
    build_phi_table(f, n, Normalization::Raw).unwrap()
}

fn c(s: &str) -> Composition {
    s.parse().unwrap()
}

// phi_model

#[test]
fn build_phi_table_examples() {
    let t = raw(&LevyFamily::discrete(r(0, 1), vec![(r(1, 2), r(1, 1))]), 2);
    assert_eq!(
        (t.phi(2), t.binom(2, 1), t.binom(2, 2)),
        (&r(3, 4), &r(1, 2), &r(1, 4))
    );
    assert_eq!(*decrement_from_phi(&t).get(2, 1), r(2, 3));

    let t = raw(&LevyFamily::discrete(r(1, 1), vec![]), 7);
    for n in 1..=7 {
        assert_eq!(*t.phi(n), r(n as i64, 1));
        assert_eq!(*t.binom(n, 1), r(n as i64, 1));
        for m in 2..=n {
            assert_eq!(*t.binom(n, m), r(0, 1));
        }
    }

    let t = table(&LevyFamily::two_param(r(0, 1), r(1, 1)), 6);
    assert_eq!((t.phi(2), t.phi(3)), (&r(4, 3), &r(3, 2)));
    for n in 1..=6 {
        assert_eq!(*t.phi(n), r(2 * n as i64, n as i64 + 1));
    }
}

#[test]
fn exact_backend_rejects_non_integer_beta() {
    let f = LevyFamily::BetaDensity {
        drift: r(0, 1),
        scale: r(1, 1),
        a: r(1, 2),
        b: r(1, 1),
    };
    assert!(matches!(
        build_phi_table::<Rational>(&f, 3, Normalization::Unit),
        Err(Error::BackendMismatch(_))
    ));
    let t = build_phi_table::<f64>(&f, 3, Normalization::Raw).unwrap();
    // Phi(1) = B(3/2, 1) = 2/3
    assert!((t.phi(1) - 2.0 / 3.0).abs() < 1e-12);
}

#[test]
fn phi_from_sequence_examples() {
    let drift: Vec<Rational> = (1..=6).map(|n| r(n, 1)).collect();
    let t = phi_from_sequence(&drift, 6, Normalization::Raw).unwrap();
    assert_eq!(*t.binom(6, 1), r(6, 1));

    assert!(matches!(
        phi_from_sequence(&[r(1, 1), r(3, 1)], 2, Normalization::Raw),
        Err(Error::NotCompletelyAlternating { n: 2, m: 2, .. })
    ));

    let ewens: Vec<Rational> = (1..=6).map(|n| r(2 * n, n + 1)).collect();
    let t = phi_from_sequence(&ewens, 6, Normalization::Unit).unwrap();
    let preset = table(&LevyFamily::two_param(r(0, 1), r(1, 1)), 6);
    for n in 1..=6 {
        assert_eq!(t.binom_row(n), preset.binom_row(n));
    }
}

#[test]
fn single_atom_closed_form() {
    let (x, d) = (r(2, 7), r(3, 5));
    let t = raw(&LevyFamily::discrete(d.clone(), vec![(x.clone(), r(1, 1))]), 10);
    let mut tail = r(1, 1);
    for n in 1..=10 {
        tail *= r(1, 1) - x.clone();
        assert_eq!(*t.phi(n), r(1, 1) - tail.clone() + r(n as i64, 1) * d.clone());
    }
}

// decrement

#[test]
fn decrement_from_phi_examples() {
    let q = decrement_from_phi(&table(&LevyFamily::two_param(r(0, 1), r(1, 1)), 8));
    for n in 1..=8 {
        assert!(q.row(n).iter().all(|v| *v == r(1, n as i64)));
    }
    let q = decrement_from_phi(&table(&LevyFamily::discrete(r(2, 1), vec![]), 5));
    assert_eq!(q, DecrementMatrix::pure_singletons(5));
    let q = decrement_from_phi(&table(
        &LevyFamily::discrete(r(0, 1), vec![(r(1, 1), r(1, 1))]),
        5,
    ));
    assert_eq!(q, DecrementMatrix::one_part(5));
}

#[test]
fn two_param_decrement_examples() {
    let q = two_param_decrement::<Rational>(&r(1, 2), &r(1, 2), 2).unwrap();
    assert_eq!(q.row(2), &[r(2, 3), r(1, 3)]);

    let q = two_param_decrement::<Rational>(&r(1, 2), &r(0, 1), 9).unwrap();
    let f = |m: usize| r(1, 2) * rising(&r(1, 2), m - 1) / factorial::<Rational>(m);
    assert_eq!((f(1), f(2)), (r(1, 2), r(1, 8)));
    for n in 2..=9 {
        for m in 1..n {
            assert_eq!(*q.get(n, m), f(m));
        }
    }
    assert_eq!(*q.get(2, 2), r(1, 2));

    let q = two_param_decrement::<Rational>(&r(0, 1), &r(1, 1), 6).unwrap();
    for n in 1..=6 {
        assert!(q.row(n).iter().all(|v| *v == r(1, n as i64)));
    }
    assert!(two_param_decrement::<Rational>(&r(1, 1), &r(0, 1), 3).is_err());
    assert!(two_param_decrement::<Rational>(&r(0, 1), &r(-1, 2), 3).is_err());
}

#[test]
fn stick_breaking_examples() {
    let geometric = stick_breaking_decrement::<Rational>(&[Atom::new(r(1, 2), r(1, 1))], 2).unwrap();
    assert_eq!(geometric.row(2), &[r(2, 3), r(1, 3)]);

    let whole = stick_breaking_decrement::<Rational>(&[Atom::new(r(1, 1), r(1, 1))], 6).unwrap();
    assert_eq!(whole, DecrementMatrix::one_part(6));

    // Three equal atoms: E[2X(1-X)] = 5/12, E[1-(1-X)^2] = 17/24.
    let atoms: Vec<Atom> = [r(1, 4), r(1, 2), r(3, 4)]
        .into_iter()
        .map(|x| Atom::new(x, r(1, 3)))
        .collect();
    let q = stick_breaking_decrement::<Rational>(&atoms, 2).unwrap();
    let e =
        |g: &dyn Fn(&Rational) -> Rational| -> Rational { atoms.iter().map(|a| a.w.clone() * g(&a.x)).sum() };
    let one = r(1, 1);
    let num = e(&|x| r(2, 1) * x.clone() * (one.clone() - x.clone()));
    let den = e(&|x| one.clone() - (one.clone() - x.clone()) * (one.clone() - x.clone()));
    assert_eq!((num.clone(), den.clone()), (r(5, 12), r(17, 24)));
    assert_eq!(*q.get(2, 1), num / den);
    assert_eq!(*q.get(2, 1), r(10, 17));

    let short = [Atom::new(r(1, 2), r(1, 2))];
    assert!(stick_breaking_decrement::<Rational>(&short, 3).is_err());
}

#[test]
fn stick_breaking_beta_matches_ewens() {
    for theta in 1..=3 {
        let beta = LevyFamily::BetaDensity {
            drift: r(0, 1),
            scale: r(theta, 1),
            a: r(1, 1),
            b: r(theta, 1),
        };
        let q = decrement_from_phi(&table(&beta, 10));
        assert_eq!(
            q,
            two_param_decrement::<Rational>(&r(0, 1), &r(theta, 1), 10).unwrap()
        );
    }
}

fn ewens_rows(n_max: usize) -> Vec<Vec<Rational>> {
    (1..=n_max).map(|n| vec![r(1, n as i64); n]).collect()
}

#[test]
fn recursion_examples() {
    let q = two_param_decrement::<Rational>(&r(0, 1), &r(1, 1), 10).unwrap();
    assert!(verify_decrement_recursion(&q, 0.0).passed());
    let uniform = DecrementMatrix::from_rows(ewens_rows(10)).unwrap();
    assert!(verify_decrement_recursion(&uniform, 0.0).passed());

    let mut rows = ewens_rows(5);
    rows[2][0] = r(2, 5);
    let corrupted = DecrementMatrix::from_rows(rows).unwrap();
    match verify_decrement_recursion(&corrupted, 0.0) {
        RecursionReport::Fail { n, m, .. } => assert_eq!((n, m), (2, 1)),
        RecursionReport::Pass => panic!("corruption not detected"),
    }
}

#[test]
fn structural_moment_examples() {
    let p: Vec<Rational> = (1..=8).map(|n| r(1, n)).collect();
    let t = phi_from_structural_moments(&p).unwrap();
    for n in 1..=8 {
        assert_eq!(*t.phi(n), r(2 * n as i64, n as i64 + 1));
    }
    let q = decrement_from_phi(&t);
    assert_eq!(*q.get(2, 1), r(1, 1) - p[1].clone());
    assert_eq!(q, DecrementMatrix::from_rows(ewens_rows(8)).unwrap());

    let half = r(1, 2);
    let p: Vec<Rational> = (1..=8)
        .map(|n| rising(&(r(1, 1) - half.clone()), n - 1) / rising(&(r(1, 1) + half.clone()), n - 1))
        .collect();
    let t = phi_from_structural_moments(&p).unwrap();
    assert_eq!(
        decrement_from_phi(&t),
        two_param_decrement::<Rational>(&half, &half, 8).unwrap()
    );

    assert!(matches!(
        phi_from_structural_moments(&[r(1, 1), r(9, 10), r(1, 10)]),
        Err(Error::NotCompletelyAlternating { .. })
    ));
}

#[test]
fn singleton_probability_examples() {
    let q = two_param_decrement::<Rational>(&r(0, 1), &r(1, 1), 8).unwrap();
    let e = singleton_probs_from_q(&q);
    for n in 1..=8 {
        assert_eq!(e[n - 1], r(1, 1) / factorial::<Rational>(n));
    }
    let t = phi_from_singleton_probs(&e).unwrap();
    for n in 1..=8 {
        assert_eq!(*t.phi(n), r(2 * n as i64, n as i64 + 1));
    }

    let t = phi_from_singleton_probs(&vec![r(1, 1); 6]).unwrap();
    for n in 1..=6 {
        assert_eq!(*t.phi(n), r(n as i64, 1));
    }

    let (a, th) = (r(1, 3), r(2, 5));
    let q = two_param_decrement::<Rational>(&a, &th, 9).unwrap();
    let e = singleton_probs_from_q(&q);
    for n in 1..=9 {
        let expected = (0..n).fold(r(1, 1), |acc, j| {
            acc * (th.clone() + a.clone() * r(j as i64, 1)) / (th.clone() + r(j as i64, 1))
        });
        assert_eq!(e[n - 1], expected);
    }
}

#[test]
fn symmetry_examples() {
    let v = detect_symmetry(&table(&LevyFamily::two_param(r(1, 2), r(1, 2)), 10)).unwrap();
    assert_eq!(v, SymmetryVerdict::SymmetricAlphaAlpha { alpha: r(1, 2) });

    let v = detect_symmetry(&table(&LevyFamily::two_param(r(0, 1), r(1, 1)), 10)).unwrap();
    assert_eq!(
        v,
        SymmetryVerdict::Asymmetric {
            n: 3,
            first_part_one: r(1, 3),
            last_part_one: r(1, 2)
        }
    );

    let v = detect_symmetry(&table(&LevyFamily::discrete(r(1, 1), vec![]), 10)).unwrap();
    assert_eq!(v, SymmetryVerdict::SymmetricAlphaAlpha { alpha: r(1, 1) });
    assert!(detect_symmetry(&table(&LevyFamily::two_param(r(1, 2), r(1, 2)), 2)).is_err());

    let tf =
        build_phi_table::<f64>(&LevyFamily::two_param(r(1, 4), r(1, 4)), 12, Normalization::Unit).unwrap();
    match detect_symmetry(&tf).unwrap() {
        SymmetryVerdict::SymmetricAlphaAlpha { alpha } => assert!((alpha - 0.25).abs() < 1e-9),
        other => panic!("{other:?}"),
    }
}

// law

#[test]
fn composition_probability_examples() {
    let q = two_param_decrement::<Rational>(&r(0, 1), &r(1, 1), 3).unwrap();
    assert_eq!(composition_probability(&q, &c("1-2")).unwrap(), r(1, 6));
    let q = two_param_decrement::<Rational>(&r(1, 5), &r(3, 1), 7).unwrap();
    for n in 1..=7 {
        assert_eq!(
            composition_probability(&q, &Composition::new(vec![n]).unwrap()).unwrap(),
            *q.get(n, n)
        );
    }
    assert!(matches!(
        composition_probability(&q, &c("4-4")),
        Err(Error::SizeExceeded {
            requested: 8,
            available: 7
        })
    ));
}

#[test]
fn enumerate_law_examples() {
    let q = two_param_decrement::<Rational>(&r(0, 1), &r(1, 1), 3).unwrap();
    let law = enumerate_law(&q, 3).unwrap();
    for (s, p) in [
        ("3", r(1, 3)),
        ("2-1", r(1, 3)),
        ("1-2", r(1, 6)),
        ("1-1-1", r(1, 6)),
    ] {
        assert_eq!(law.probability(&c(s)), p);
    }
    let ones = DecrementMatrix::<Rational>::pure_singletons(9);
    let law = enumerate_law(&ones, 9).unwrap();
    assert_eq!(law.probability(&Composition::singletons(9)), r(1, 1));
    assert_eq!(law.entries().len(), 256);
    let q = two_param_decrement::<Rational>(&r(1, 2), &r(1, 2), 2).unwrap();
    let law = enumerate_law(&q, 2).unwrap();
    assert_eq!(
        (law.probability(&c("2")), law.probability(&c("1-1"))),
        (r(1, 3), r(2, 3))
    );
}

#[test]
fn sampling_consistency_examples() {
    for (a, t, n) in [(r(0, 1), r(1, 1), 3), (r(1, 2), r(1, 2), 4)] {
        let q = two_param_decrement::<Rational>(&a, &t, n + 1).unwrap();
        let (ln, ln1) = (enumerate_law(&q, n).unwrap(), enumerate_law(&q, n + 1).unwrap());
        assert!(check_sampling_consistency(&ln, &ln1, 0.0).unwrap().passed());
        let (x, y) = (c("2-1-1-1"), c("1-1-3"));
        let moved = ln1
            .with_probability(&x, ln1.probability(&x) - r(1, 100))
            .with_probability(&y, ln1.probability(&y) + r(1, 100));
        let moved = if n == 3 {
            let (x, y) = (c("2-2"), c("1-3"));
            ln1.with_probability(&x, ln1.probability(&x) - r(1, 100))
                .with_probability(&y, ln1.probability(&y) + r(1, 100))
        } else {
            moved
        };
        assert!(!check_sampling_consistency(&ln, &moved, 0.0).unwrap().passed());
    }
}

#[test]
fn eppf_examples() {
    let q = two_param_decrement::<Rational>(&r(0, 1), &r(1, 1), 2).unwrap();
    assert_eq!(eppf(&q, &[2]).unwrap(), r(1, 2));
    assert_eq!(
        two_param_eppf::<Rational>(&r(0, 1), &r(1, 1), &[2]).unwrap(),
        r(1, 2)
    );
    for (a, t) in [(r(1, 3), r(2, 5)), (r(3, 4), r(1, 1)), (r(0, 1), r(5, 2))] {
        let q = two_param_decrement::<Rational>(&a, &t, 3).unwrap();
        assert_eq!(
            eppf(&q, &[2, 1]).unwrap(),
            two_param_eppf::<Rational>(&a, &t, &[2, 1]).unwrap()
        );
        assert_eq!(eppf(&q, &[3]).unwrap(), *q.get(3, 3));
    }
}

#[test]
fn ordering_factor_examples() {
    for sizes in [[1usize, 1], [3, 5], [7, 2]] {
        assert_eq!(
            ordering_factor_sum::<Rational>(&r(2, 7), &r(3, 4), &sizes).unwrap(),
            r(1, 1)
        );
    }
    assert_eq!(
        ordering_factor_sum::<Rational>(&r(1, 2), &r(1, 4), &[3, 1, 2, 2]).unwrap(),
        r(1, 1)
    );
    assert_eq!(
        ordering_factor_sum::<Rational>(&r(1, 9), &r(5, 1), &[4]).unwrap(),
        r(1, 1)
    );
    assert!(ordering_factor_sum::<Rational>(&r(0, 1), &r(0, 1), &[1, 2]).is_err());
}

#[test]
fn green_examples() {
    let q = two_param_decrement::<Rational>(&r(0, 1), &r(1, 1), 3).unwrap();
    let g = green_matrix(&q);
    assert_eq!(
        (g.get(3, 1), g.get(3, 2), g.get(3, 3)),
        (&r(1, 2), &r(1, 3), &r(1, 1))
    );
    let q = two_param_decrement::<Rational>(&r(1, 2), &r(0, 1), 7).unwrap();
    assert_eq!(*green_matrix(&q).get(7, 5), r(3, 8));
}

#[test]
fn part_law_examples() {
    let t = table(&LevyFamily::two_param(r(0, 1), r(1, 1)), 3);
    let q = decrement_from_phi(&t);
    let g = green_matrix(&q);
    assert_eq!(last_part_law(&q, &g, 3).unwrap(), vec![r(1, 2), r(1, 6), r(1, 3)]);
    for (_, f) in common::presets() {
        let q = common::decrement(&f, 2);
        let g = green_matrix(&q);
        assert_eq!(
            last_part_law(&q, &g, 2).unwrap()[0],
            first_part_law(&q, 2).unwrap()[0]
        );
    }
    let whole = DecrementMatrix::<Rational>::one_part(6);
    let g = green_matrix(&whole);
    assert_eq!(last_part_law(&whole, &g, 6).unwrap()[5], r(1, 1));
}

#[test]
fn tripartite_examples() {
    let t = table(&LevyFamily::two_param(r(0, 1), r(1, 1)), 2);
    assert_eq!(r(1, 1) - tripartite_moment(&t, 1, 1, 0).unwrap(), r(3, 4));
    assert_eq!(t.phi(1).clone() / t.phi(2).clone(), r(3, 4));
}

#[test]
fn singleton_frequency_examples() {
    let t = raw(&LevyFamily::discrete(r(0, 1), vec![(r(1, 3), r(1, 1))]), 4);
    assert_eq!(singleton_frequency_moment(&t, &r(0, 1), 4).unwrap(), r(0, 1));
    let t = raw(&LevyFamily::discrete(r(5, 2), vec![]), 6);
    assert_eq!(singleton_frequency_moment(&t, &r(5, 2), 6).unwrap(), r(1, 1));
    let t = raw(&LevyFamily::discrete(r(1, 1), vec![(r(1, 2), r(1, 1))]), 6);
    for i in 1..=6 {
        assert_eq!(*t.phi(i), r(i as i64 + 1, 1) - r(1, 1 << i));
    }
    assert_eq!(singleton_frequency_moment(&t, &r(1, 1), 1).unwrap(), r(2, 3));
    assert_eq!(singleton_frequency_moment(&t, &r(1, 1), 2).unwrap(), r(16, 33));
}

// sampler

fn freq_within(emp: &EmpiricalLaw, s: &str, p: f64, sigmas: f64) {
    let size = emp.sample_size() as f64;
    let sd = (p * (1.0 - p) / size).sqrt();
    let f = emp.frequency(&c(s));
    assert!((f - p).abs() <= sigmas * sd, "{s}: {f} vs {p}");
}

#[test]
fn chain_sampler_examples() {
    let mut rng = RngStream::new(1);
    let ones = DecrementMatrix::<f64>::pure_singletons(5);
    let whole = DecrementMatrix::<f64>::one_part(5);
    for _ in 0..50 {
        assert_eq!(
            sample_composition(&ones, 5, &mut rng).unwrap(),
            Composition::singletons(5)
        );
        assert_eq!(sample_composition(&whole, 5, &mut rng).unwrap(), c("5"));
    }
    let q = two_param_decrement::<f64>(&r(0, 1), &r(1, 1), 3).unwrap();
    let samples = sample_batch(100_000, 20240601, 1, |g| sample_composition(&q, 3, g)).unwrap();
    let emp = empirical_law(&samples).unwrap();
    for (s, p) in [
        ("3", 1.0 / 3.0),
        ("2-1", 1.0 / 3.0),
        ("1-2", 1.0 / 6.0),
        ("1-1-1", 1.0 / 6.0),
    ] {
        freq_within(&emp, s, p, 3.0);
    }
}

#[test]
fn growth_examples() {
    let q = two_param_decrement::<Rational>(&r(1, 2), &r(1, 2), 4).unwrap();
    let b = growth_branches(&q, &c("1")).unwrap();
    assert_eq!(
        b,
        vec![(c("1-1"), q.get(2, 1).clone()), (c("2"), q.get(2, 2).clone())]
    );
    let ones = DecrementMatrix::<f64>::pure_singletons(6);
    let mut rng = RngStream::new(4);
    assert_eq!(
        grow_composition(&ones, &c("1-1-1"), &mut rng).unwrap(),
        Composition::singletons(4)
    );
    let q = two_param_decrement::<Rational>(&r(0, 1), &r(1, 1), 4).unwrap();
    let pushed = push_forward_law(&q, &enumerate_law(&q, 3).unwrap()).unwrap();
    assert_eq!(pushed.entries(), enumerate_law(&q, 4).unwrap().entries());
}

fn cut(atoms: &[(i64, i64)]) -> CutLaw {
    let w = r(1, atoms.len() as i64);
    CutLaw::new(
        &atoms
            .iter()
            .map(|&(p, q)| Atom::new(r(p, q), w.clone()))
            .collect::<Vec<_>>(),
    )
    .unwrap()
}

#[test]
fn stick_breaking_sampler_examples() {
    let mut rng = RngStream::new(8);
    let whole = cut(&[(1, 1)]);
    for _ in 0..100 {
        assert_eq!(sample_stick_breaking(&whole, 7, &mut rng).unwrap(), c("7"));
    }
    let half = cut(&[(1, 2)]);
    let samples = sample_batch(100_000, 77, 2, |g| sample_stick_breaking(&half, 2, g)).unwrap();
    freq_within(&empirical_law(&samples).unwrap(), "1-1", 2.0 / 3.0, 3.0);

    let atoms = [(1, 4), (1, 2), (3, 4)];
    let law = cut(&atoms);
    let exact_atoms: Vec<Atom> = atoms.iter().map(|&(p, q)| Atom::new(r(p, q), r(1, 3))).collect();
    let q = stick_breaking_decrement::<Rational>(&exact_atoms, 5).unwrap();
    let samples = sample_batch(100_000, 99, 2, |g| sample_stick_breaking(&law, 5, g)).unwrap();
    let chi = chi_square(&empirical_law(&samples).unwrap(), &enumerate_law(&q, 5).unwrap()).unwrap();
    assert!(!chi.rejects(1e-3), "{chi:?}");
}

#[test]
fn myriads_examples() {
    let half = cut(&[(1, 2)]);
    let draws = sample_batch(100_000, 5, 4, |g| sample_myriads_frequency(&half, 1.0, 1e-8, g)).unwrap();
    let n = draws.len() as f64;
    let mean = draws.iter().sum::<f64>() / n;
    let sq: Vec<f64> = draws.iter().map(|f| f * f).collect();
    let m2 = sq.iter().sum::<f64>() / n;
    let sd1 = (m2 - mean * mean).sqrt() / n.sqrt();
    let m4 = sq.iter().map(|v| v * v).sum::<f64>() / n;
    let sd2 = (m4 - m2 * m2).sqrt() / n.sqrt();
    assert!((mean - 2.0 / 3.0).abs() < 3.0 * sd1, "{mean}");
    assert!((m2 - 16.0 / 33.0).abs() < 3.0 * sd2, "{m2}");

    // f = Z + (1-Z)(1-X) f' in law.
    let mut rng = RngStream::new(6);
    let rhs: Vec<f64> = (0..100_000)
        .map(|_| {
            let z = 1.0 - rng.uniform();
            let x = half.draw(&mut rng);
            z + (1.0 - z) * (1.0 - x) * sample_myriads_frequency(&half, 1.0, 1e-8, &mut rng).unwrap()
        })
        .collect();
    let ks = ks_two_sample(&draws, &rhs).unwrap();
    assert!(ks.p_value > 0.01, "{ks:?}");

    let whole = cut(&[(1, 1)]);
    let mean_at = |d: f64| {
        let v = sample_batch(20_000, 3, 1, |g| sample_myriads_frequency(&whole, d, 1e-10, g)).unwrap();
        v.iter().sum::<f64>() / v.len() as f64
    };
    let means: Vec<f64> = [0.5, 2.0, 8.0, 50.0].into_iter().map(mean_at).collect();
    assert!(
        means.windows(2).all(|w| w[0] < w[1]) && means[3] < 1.0,
        "{means:?}"
    );
}

#[test]
fn statistics_examples() {
    let q = two_param_decrement::<Rational>(&r(0, 1), &r(1, 1), 10).unwrap();
    let exact = enumerate_law(&q, 4).unwrap();
    let mut emp = EmpiricalLaw::new(4);
    for (comp, p) in exact.iter() {
        let k = (p.clone() * r(24, 1)).to_integer().try_into().unwrap();
        for _ in 0..k {
            emp.record(comp.clone()).unwrap();
        }
    }
    assert_eq!(tv_distance(&emp, &exact).unwrap(), 0.0);

    let one = empirical_law([&c("4")]).unwrap();
    let p4 = 1.0 / 4.0;
    assert!((tv_distance(&one, &exact).unwrap() - (1.0 - p4)).abs() < 1e-15);
    assert!(matches!(
        tv_distance(&one, &enumerate_law(&q, 3).unwrap()),
        Err(Error::MismatchedSizes(4, 3))
    ));

    let qf = q.to_f64();
    let samples = sample_batch(100_000, 10, 4, |g| sample_composition(&qf, 10, g)).unwrap();
    let tv = tv_distance(&empirical_law(&samples).unwrap(), &enumerate_law(&q, 10).unwrap()).unwrap();
    // 512 cells: the expected distance at this sample size is already about 0.016.
    assert!(tv < 0.02, "{tv}");
}
