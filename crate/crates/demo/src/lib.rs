//! wasm-bindgen exports for the static page in `www/`.
//!
//! Every function takes plain strings and numbers and returns flat data, so
//! the page needs no glue beyond what wasm-bindgen generates.

use wasm_bindgen::prelude::*;

use regcomp::decrement::{detect_symmetry, two_param_decrement, SymmetryVerdict};
use regcomp::law::{enumerate_law, first_part_law, green_matrix, last_part_law};
use regcomp::phi_model::{build_phi_table, Atom, LevyFamily, Normalization};
use regcomp::sampler::{chi_square, empirical_law, sample_batch, sample_stick_breaking, tv_distance, CutLaw};
use regcomp::scalar::parse_rational;
use regcomp::{Rational, Scalar};

const MAX_N: usize = 40;
const MAX_ENUMERATED_N: usize = 10;
const MAX_SAMPLES: usize = 1_000_000;

fn parse(name: &str, text: &str) -> Result<Rational, String> {
    parse_rational(text.trim()).map_err(|e| format!("{name}: {e}"))
}

fn check_n(n: usize, max: usize) -> Result<(), String> {
    if n == 0 || n > max {
        return Err(format!("n must be between 1 and {max}"));
    }
    Ok(())
}

/// Two-parameter decrement matrix as a row-major `n_max * n_max` grid,
/// zero above the diagonal.
#[wasm_bindgen]
pub fn decrement_heatmap(alpha: &str, theta: &str, n_max: usize) -> Result<Vec<f64>, String> {
    check_n(n_max, MAX_N)?;
    let (a, t) = (parse("alpha", alpha)?, parse("theta", theta)?);
    let q = two_param_decrement::<Rational>(&a, &t, n_max).map_err(|e| e.to_string())?;
    let mut grid = vec![0.0; n_max * n_max];
    for n in 1..=n_max {
        for m in 1..=n {
            grid[(n - 1) * n_max + m - 1] = q.get(n, m).to_f64();
        }
    }
    Ok(grid)
}

#[wasm_bindgen(getter_with_clone)]
pub struct PartLaws {
    pub first: Vec<f64>,
    pub last: Vec<f64>,
    pub verdict: String,
}

/// Laws of the first and last part at size `n`, and the symmetry verdict of
/// the exponent up to `n`.
#[wasm_bindgen]
pub fn part_laws(alpha: &str, theta: &str, n: usize) -> Result<PartLaws, String> {
    check_n(n, MAX_N)?;
    let family = LevyFamily::two_param(parse("alpha", alpha)?, parse("theta", theta)?);
    let table =
        build_phi_table::<Rational>(&family, n.max(3), Normalization::Unit).map_err(|e| e.to_string())?;
    let q = regcomp::decrement::decrement_from_phi(&table);
    let first = first_part_law(&q, n).map_err(|e| e.to_string())?;
    let last = last_part_law(&q, &green_matrix(&q), n).map_err(|e| e.to_string())?;
    let verdict = match detect_symmetry(&table).map_err(|e| e.to_string())? {
        SymmetryVerdict::SymmetricAlphaAlpha { alpha } => format!("reversible, alpha = {alpha}"),
        SymmetryVerdict::Asymmetric {
            n,
            first_part_one,
            last_part_one,
        } => format!("not reversible: P(F_{n}=1) = {first_part_one}, P(L_{n}=1) = {last_part_one}"),
    };
    Ok(PartLaws {
        first: first.iter().map(Scalar::to_f64).collect(),
        last: last.iter().map(Scalar::to_f64).collect(),
        verdict,
    })
}

/// Parses `x:w` pairs separated by whitespace or commas.
fn parse_atoms(text: &str) -> Result<Vec<Atom>, String> {
    let atoms = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|pair| {
            let (x, w) = pair
                .split_once(':')
                .ok_or_else(|| format!("expected x:w, got {pair:?}"))?;
            Ok(Atom::new(parse("x", x)?, parse("w", w)?))
        })
        .collect::<Result<Vec<_>, String>>()?;
    if atoms.is_empty() {
        return Err("no atoms given".into());
    }
    Ok(atoms)
}

#[wasm_bindgen(getter_with_clone)]
pub struct StickRun {
    pub compositions: Vec<String>,
    pub observed: Vec<f64>,
    pub expected: Vec<f64>,
    pub tv: f64,
    pub p_value: f64,
}

/// Stick-breaking samples with a discrete cut law, against the exact law.
#[wasm_bindgen]
pub fn stick_breaking_run(atoms: &str, n: usize, count: usize, seed: u64) -> Result<StickRun, String> {
    check_n(n, MAX_ENUMERATED_N)?;
    if count == 0 || count > MAX_SAMPLES {
        return Err(format!("count must be between 1 and {MAX_SAMPLES}"));
    }
    let atoms = parse_atoms(atoms)?;
    let q = regcomp::decrement::stick_breaking_decrement::<Rational>(&atoms, n).map_err(|e| e.to_string())?;
    let exact = enumerate_law(&q, n).map_err(|e| e.to_string())?;
    let cut = CutLaw::new(&atoms).map_err(|e| e.to_string())?;
    let samples =
        sample_batch(count, seed, 1, |g| sample_stick_breaking(&cut, n, g)).map_err(|e| e.to_string())?;
    let emp = empirical_law(&samples).map_err(|e| e.to_string())?;
    let chi = chi_square(&emp, &exact).map_err(|e| e.to_string())?;
    let (compositions, expected) = exact
        .entries()
        .iter()
        .map(|(c, p)| (c.to_string(), p.to_f64()))
        .unzip();
    let observed = exact.entries().iter().map(|(c, _)| emp.frequency(c)).collect();
    Ok(StickRun {
        compositions,
        observed,
        expected,
        tv: tv_distance(&emp, &exact).map_err(|e| e.to_string())?,
        p_value: chi.p_value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ewens_heatmap_is_uniform_rows() {
        let grid = decrement_heatmap("0", "1", 5).unwrap();
        for n in 1..=5 {
            for m in 1..=5 {
                let want = if m <= n { 1.0 / n as f64 } else { 0.0 };
                assert!((grid[(n - 1) * 5 + m - 1] - want).abs() < 1e-15);
            }
        }
        assert!(decrement_heatmap("0", "1", 0).is_err());
        assert!(decrement_heatmap("2", "1", 4).is_err());
    }

    #[test]
    fn part_laws_match_ewens() {
        let laws = part_laws("0", "1", 3).unwrap();
        assert_eq!(laws.last, vec![0.5, 1.0 / 6.0, 1.0 / 3.0]);
        assert!(laws.verdict.starts_with("not reversible"));
        let sym = part_laws("1/2", "1/2", 6).unwrap();
        assert_eq!(sym.verdict, "reversible, alpha = 1/2");
        for (f, l) in sym.first.iter().zip(&sym.last) {
            assert!((f - l).abs() < 1e-12);
        }
    }

    #[test]
    fn stick_run_tracks_exact_law() {
        let run = stick_breaking_run("1/4:1/3, 1/2:1/3, 3/4:1/3", 4, 20_000, 7).unwrap();
        assert_eq!(run.compositions.len(), 8);
        assert!((run.expected.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert!(run.tv < 0.03);
        assert!(run.p_value > 1e-3);
        assert!(stick_breaking_run("1/2", 4, 10, 0).is_err());
        assert!(stick_breaking_run("1/2:1", 11, 10, 0).is_err());
    }
}
