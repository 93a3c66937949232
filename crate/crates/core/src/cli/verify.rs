use serde::Serialize;

use crate::decrement::{
    decrement_from_first_column, decrement_from_phi, detect_symmetry, phi_from_singleton_probs,
    phi_from_structural_moments, singleton_probs_from_q, structural_moments, verify_decrement_recursion,
    DecrementMatrix, RecursionReport, SymmetryVerdict,
};
use crate::error::{Error, Result};
use crate::io::SpecFile;
use crate::law::{
    check_sampling_consistency, enumerate_law_with_cap, eppf_with_cap, green_matrix, green_matrix_formula,
    last_part_law, last_part_law_from_phi, partitions, two_param_eppf, verify_green_recursion,
    ConsistencyReport,
};
use crate::phi_model::PhiTable;
use crate::scalar::{Backend, Rational};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
    pub symmetry: Option<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Largest `n` for enumeration-based checks; defaults to `min(n_max - 1, 8)`.
    pub n_limit: Option<usize>,
    pub enumeration_cap: usize,
    pub eppf_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            n_limit: None,
            enumeration_cap: crate::law::DEFAULT_ENUMERATION_CAP,
            eppf_cap: crate::law::DEFAULT_EPPF_CAP,
        }
    }
}

pub fn format_verdict(v: &SymmetryVerdict<Rational>) -> String {
    match v {
        SymmetryVerdict::SymmetricAlphaAlpha { alpha } => format!("SymmetricAlphaAlpha{{{alpha}}}"),
        SymmetryVerdict::Asymmetric {
            n,
            first_part_one,
            last_part_one,
        } => format!("Asymmetric{{{n}}} (P(F_{n}=1) = {first_part_one}, P(L_{n}=1) = {last_part_one})"),
    }
}

/// Table of the spec file, or the unit exponent recovered from `q` for a raw matrix.
pub fn table_for(spec: &SpecFile, q: &DecrementMatrix<Rational>) -> Result<PhiTable<Rational>> {
    match spec.phi_table::<Rational>()? {
        Some(t) => Ok(t),
        None => phi_from_structural_moments(&structural_moments(q)),
    }
}

fn outcome(name: &str, r: Result<Option<String>>) -> Check {
    let (passed, detail) = match r {
        Ok(None) => (true, String::new()),
        Ok(Some(why)) => (false, why),
        Err(e) => (false, e.to_string()),
    };
    Check {
        name: name.to_string(),
        passed,
        detail,
    }
}

fn same_matrix(a: &DecrementMatrix<Rational>, b: &DecrementMatrix<Rational>) -> Option<String> {
    for n in 1..=a.n_max() {
        for m in 1..=n {
            if a.get(n, m) != b.get(n, m) {
                return Some(format!(
                    "differs at ({n},{m}): {} vs {}",
                    a.get(n, m),
                    b.get(n, m)
                ));
            }
        }
    }
    None
}

/// Runs the exact verification suite on a spec.
pub fn verify_spec(spec: &SpecFile, opts: VerifyOptions) -> Result<VerifyReport> {
    if spec.backend != Backend::Exact {
        return Err(Error::InvalidParameters(
            "verify requires the exact backend".into(),
        ));
    }
    let q = spec.decrement::<Rational>()?;
    let n_max = q.n_max();
    let limit = opts.n_limit.unwrap_or(8.min(n_max.saturating_sub(1)));
    let mut checks = Vec::new();

    checks.push(outcome(
        "row sums",
        Ok(q.row_sum_defect(0.0).map(|(n, s)| format!("row {n} sums to {s}"))),
    ));
    checks.push(outcome(
        "decrement recursion",
        Ok(match verify_decrement_recursion(&q, 0.0) {
            RecursionReport::Pass => None,
            RecursionReport::Fail { n, m, residual } => {
                Some(format!("fails at (n,m) = ({n},{m}), residual {residual}"))
            }
        }),
    ));
    checks.push(outcome(
        &format!("sampling consistency n <= {limit}"),
        (|| {
            if limit + 1 > n_max {
                return Err(Error::SizeExceeded {
                    requested: limit + 1,
                    available: n_max,
                });
            }
            let mut prev = enumerate_law_with_cap(&q, 1, opts.enumeration_cap)?;
            for n in 1..=limit {
                let next = enumerate_law_with_cap(&q, n + 1, opts.enumeration_cap)?;
                if let ConsistencyReport::Fail {
                    composition,
                    residual,
                } = check_sampling_consistency(&prev, &next, 0.0)?
                {
                    return Ok(Some(format!("fails at {composition}, residual {residual}")));
                }
                prev = next;
            }
            Ok(None)
        })(),
    ));

    let table = table_for(spec, &q);
    let green = green_matrix(&q);
    checks.push(outcome(
        "green recursion",
        Ok(verify_green_recursion(&green, &q, 0.0).map(|(n, j)| format!("fails at (n,j) = ({n},{j})"))),
    ));
    checks.push(outcome(
        "green dp vs formula",
        table.clone().map(|t| {
            let f = green_matrix_formula(&t);
            (1..=n_max)
                .flat_map(|n| (1..=n).map(move |j| (n, j)))
                .find(|&(n, j)| green.get(n, j) != f.get(n, j))
                .map(|(n, j)| format!("differs at (n,j) = ({n},{j})"))
        }),
    ));
    checks.push(outcome(
        &format!("last part law n <= {}", limit.max(1)),
        (|| {
            let t = table.clone()?;
            for n in 1..=limit.max(1).min(n_max) {
                let from_green = last_part_law(&q, &green, n)?;
                if from_green != last_part_law_from_phi(&t, n)? {
                    return Ok(Some(format!("Green and exponent forms differ at n = {n}")));
                }
                let law = enumerate_law_with_cap(&q, n, opts.enumeration_cap)?;
                let marginal = law.marginal(|c| *c.parts().last().expect("non-empty"));
                if marginal[1..] != from_green[..] {
                    return Ok(Some(format!("enumeration oracle differs at n = {n}")));
                }
            }
            Ok(None)
        })(),
    ));
    checks.push(outcome(
        "roundtrip q -> p -> phi -> q",
        phi_from_structural_moments(&structural_moments(&q))
            .map(|t| same_matrix(&q, &decrement_from_phi(&t))),
    ));
    checks.push(outcome(
        "roundtrip q -> e -> phi -> q",
        phi_from_singleton_probs(&singleton_probs_from_q(&q))
            .map(|t| same_matrix(&q, &decrement_from_phi(&t))),
    ));
    checks.push(outcome(
        "roundtrip q(.:1) -> q",
        Ok(same_matrix(
            &q,
            &decrement_from_first_column(&(1..=n_max).map(|n| q.get(n, 1).clone()).collect::<Vec<_>>()),
        )),
    ));
    if let Some((alpha, theta)) = spec.family().and_then(|f| f.two_param_parameters()) {
        let eppf_limit = limit.max(1).min(n_max);
        checks.push(outcome(
            &format!("eppf closed form n <= {eppf_limit}"),
            (|| {
                for n in 1..=eppf_limit {
                    for sizes in partitions(n) {
                        let lhs = eppf_with_cap(&q, &sizes, opts.eppf_cap)?;
                        if lhs != two_param_eppf::<Rational>(&alpha, &theta, &sizes)? {
                            return Ok(Some(format!("differs at {sizes:?}")));
                        }
                    }
                }
                Ok(None)
            })(),
        ));
    }

    let symmetry = match table {
        Ok(t) if t.n_max() >= 3 => Some(
            detect_symmetry(&t)
                .map(|v| format_verdict(&v))
                .unwrap_or_else(|e| format!("undetermined: {e}")),
        ),
        _ => None,
    };
    Ok(VerifyReport { checks, symmetry })
}
