//! JSON spec files shared by every subcommand.
//!
//! ```json
//! {"family": {"kind": "two_param", "alpha": "1/2", "theta": "1/2"},
//!  "n_max": 10, "backend": "exact", "normalization": "unit"}
//! ```
//!
//! A decrement matrix produced elsewhere can be supplied instead of a family:
//! `{"matrix": [["1"], ["1/2", "1/2"]], "backend": "exact"}`.

use std::path::Path;

use serde::Deserialize;

use super::rational_serde;
use crate::decrement::{decrement_from_phi, DecrementMatrix};
use crate::error::{Error, Result};
use crate::phi_model::{build_phi_table, LevyFamily, Normalization, PhiTable};
use crate::scalar::{Backend, Rational, Scalar};

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(transparent)]
struct Entry(#[serde(with = "rational_serde")] Rational);

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    family: Option<LevyFamily>,
    matrix: Option<Vec<Vec<Entry>>>,
    n_max: Option<usize>,
    #[serde(default = "default_backend")]
    backend: Backend,
    #[serde(default)]
    normalization: Normalization,
}

fn default_backend() -> Backend {
    Backend::Exact
}

#[derive(Debug, Clone, PartialEq)]
pub enum ModelSource {
    Family(Box<LevyFamily>),
    Matrix(Vec<Vec<Rational>>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpecFile {
    pub source: ModelSource,
    pub n_max: usize,
    pub backend: Backend,
    pub normalization: Normalization,
}

impl SpecFile {
    pub fn from_family(family: LevyFamily, n_max: usize, backend: Backend) -> Self {
        Self {
            source: ModelSource::Family(Box::new(family)),
            n_max,
            backend,
            normalization: Normalization::Unit,
        }
    }

    /// Parses and validates a spec. Errors name the offending field path and
    /// the line and column of the problem.
    pub fn parse(text: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let raw: RawSpec = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            let inner = e.into_inner();
            if path == "." {
                Error::Spec(inner.to_string())
            } else {
                Error::Spec(format!("at `{path}`: {inner}"))
            }
        })?;
        let (source, n_max) = match (raw.family, raw.matrix) {
            (Some(family), None) => {
                family.validate()?;
                let n = raw
                    .n_max
                    .ok_or_else(|| Error::Spec("missing field `n_max`".into()))?;
                (ModelSource::Family(Box::new(family)), n)
            }
            (None, Some(rows)) => {
                let rows: Vec<Vec<Rational>> = rows
                    .into_iter()
                    .map(|r| r.into_iter().map(|e| e.0).collect())
                    .collect();
                let n = raw.n_max.unwrap_or(rows.len());
                if n > rows.len() {
                    return Err(Error::Spec(format!(
                        "`n_max` is {n} but the matrix has {} rows",
                        rows.len()
                    )));
                }
                (ModelSource::Matrix(rows), n)
            }
            (Some(_), Some(_)) => {
                return Err(Error::Spec("give either `family` or `matrix`, not both".into()))
            }
            (None, None) => return Err(Error::Spec("missing field `family` (or `matrix`)".into())),
        };
        if n_max == 0 {
            return Err(Error::Spec("`n_max` must be at least 1".into()));
        }
        Ok(Self {
            source,
            n_max,
            backend: raw.backend,
            normalization: raw.normalization,
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn family(&self) -> Option<&LevyFamily> {
        match &self.source {
            ModelSource::Family(f) => Some(f),
            ModelSource::Matrix(_) => None,
        }
    }

    /// The Laplace exponent table; `None` for a raw matrix spec.
    pub fn phi_table<S: Scalar>(&self) -> Result<Option<PhiTable<S>>> {
        match &self.source {
            ModelSource::Family(f) => build_phi_table(f, self.n_max, self.normalization).map(Some),
            ModelSource::Matrix(_) => Ok(None),
        }
    }

    pub fn decrement<S: Scalar>(&self) -> Result<DecrementMatrix<S>> {
        match &self.source {
            ModelSource::Family(_) => {
                let table = self.phi_table::<S>()?.expect("family spec");
                Ok(decrement_from_phi(&table))
            }
            ModelSource::Matrix(rows) => {
                let rows = rows[..self.n_max]
                    .iter()
                    .map(|r| r.iter().map(S::from_rational).collect())
                    .collect();
                DecrementMatrix::from_rows(rows)
            }
        }
    }
}
