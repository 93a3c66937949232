use std::collections::BTreeMap;

use serde::Serialize;
use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::error::{Error, Result};
use crate::law::{Composition, CompositionLaw};
use crate::scalar::Scalar;

/// Cells with expected count below this are pooled before a χ² test.
pub const MIN_EXPECTED_COUNT: f64 = 5.0;

/// Sample counts of compositions of a fixed `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmpiricalLaw {
    n: usize,
    counts: BTreeMap<Composition, u64>,
    sample_size: u64,
}

impl EmpiricalLaw {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            counts: BTreeMap::new(),
            sample_size: 0,
        }
    }

    pub fn record(&mut self, c: Composition) -> Result<()> {
        if c.total() != self.n {
            return Err(Error::MismatchedSizes(self.n, c.total()));
        }
        *self.counts.entry(c).or_insert(0) += 1;
        self.sample_size += 1;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sample_size(&self) -> u64 {
        self.sample_size
    }

    pub fn count(&self, c: &Composition) -> u64 {
        self.counts.get(c).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> impl Iterator<Item = (&Composition, u64)> {
        self.counts.iter().map(|(c, k)| (c, *k))
    }

    pub fn frequency(&self, c: &Composition) -> f64 {
        self.count(c) as f64 / self.sample_size as f64
    }
}

/// Tallies samples that must all be compositions of the same `n`.
pub fn empirical_law<'a>(samples: impl IntoIterator<Item = &'a Composition>) -> Result<EmpiricalLaw> {
    let mut iter = samples.into_iter().peekable();
    let n = iter
        .peek()
        .map(|c| c.total())
        .ok_or_else(|| Error::InvalidParameters("no samples".into()))?;
    let mut law = EmpiricalLaw::new(n);
    for c in iter {
        law.record(c.clone())?;
    }
    Ok(law)
}

fn check_same_n<S: Scalar>(emp: &EmpiricalLaw, exact: &CompositionLaw<S>) -> Result<()> {
    if emp.n() != exact.n() {
        return Err(Error::MismatchedSizes(emp.n(), exact.n()));
    }
    if emp.sample_size() == 0 {
        return Err(Error::InvalidParameters("empty empirical law".into()));
    }
    Ok(())
}

/// Total variation distance `1/2 sum |freq - p|`.
pub fn tv_distance<S: Scalar>(emp: &EmpiricalLaw, exact: &CompositionLaw<S>) -> Result<f64> {
    check_same_n(emp, exact)?;
    let mut sum = 0.0;
    for (c, p) in exact.iter() {
        sum += (emp.frequency(c) - p.to_f64()).abs();
    }
    for (c, k) in emp.counts() {
        if exact.probability(c).is_zero() {
            sum += k as f64 / emp.sample_size() as f64;
        }
    }
    Ok(sum / 2.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChiSquare {
    pub statistic: f64,
    pub dof: usize,
    pub p_value: f64,
}

impl ChiSquare {
    fn from_statistic(statistic: f64, dof: usize) -> Self {
        let p_value = if statistic.is_infinite() {
            0.0
        } else if dof == 0 {
            1.0
        } else {
            ChiSquared::new(dof as f64).expect("positive dof").sf(statistic)
        };
        Self {
            statistic,
            dof,
            p_value,
        }
    }

    pub fn rejects(&self, level: f64) -> bool {
        self.p_value < level
    }
}

/// Merges cells, smallest `size` first, until every cell has size at least
/// `min`. Each cell is a vector of per-sample observed counts.
fn pool(mut cells: Vec<(f64, Vec<f64>)>, min: f64) -> Vec<(f64, Vec<f64>)> {
    cells.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut out: Vec<(f64, Vec<f64>)> = Vec::new();
    let mut acc: Option<(f64, Vec<f64>)> = None;
    for cell in cells {
        acc = Some(match acc {
            None => cell,
            Some((s, v)) => (s + cell.0, v.iter().zip(&cell.1).map(|(a, b)| a + b).collect()),
        });
        if acc.as_ref().is_some_and(|(s, _)| *s >= min) {
            out.push(acc.take().expect("set above"));
        }
    }
    if let Some((s, v)) = acc {
        match out.last_mut() {
            Some(last) => {
                last.0 += s;
                for (a, b) in last.1.iter_mut().zip(v) {
                    *a += b;
                }
            }
            None => out.push((s, v)),
        }
    }
    out
}

/// Pearson goodness-of-fit test of an empirical law against an exact law.
/// Cells with expected count below 5 are pooled; an observation on a
/// zero-probability composition gives an infinite statistic.
pub fn chi_square<S: Scalar>(emp: &EmpiricalLaw, exact: &CompositionLaw<S>) -> Result<ChiSquare> {
    check_same_n(emp, exact)?;
    if emp.counts().any(|(c, _)| exact.probability(c).is_zero()) {
        return Ok(ChiSquare::from_statistic(f64::INFINITY, 0));
    }
    let size = emp.sample_size() as f64;
    let cells: Vec<(f64, Vec<f64>)> = exact
        .iter()
        .filter(|(_, p)| !p.is_zero())
        .map(|(c, p)| {
            let e = p.to_f64() * size;
            (e, vec![emp.count(c) as f64, e])
        })
        .collect();
    let pooled = pool(cells, MIN_EXPECTED_COUNT);
    let statistic = pooled.iter().map(|(_, v)| (v[0] - v[1]).powi(2) / v[1]).sum();
    Ok(ChiSquare::from_statistic(
        statistic,
        pooled.len().saturating_sub(1),
    ))
}

/// Two-sample χ² homogeneity test between empirical laws of the same `n`.
pub fn chi_square_two_sample(a: &EmpiricalLaw, b: &EmpiricalLaw) -> Result<ChiSquare> {
    if a.n() != b.n() {
        return Err(Error::MismatchedSizes(a.n(), b.n()));
    }
    let (na, nb) = (a.sample_size() as f64, b.sample_size() as f64);
    if na == 0.0 || nb == 0.0 {
        return Err(Error::InvalidParameters("empty empirical law".into()));
    }
    let mut keys: Vec<&Composition> = a.counts().map(|(c, _)| c).collect();
    keys.extend(b.counts().map(|(c, _)| c));
    keys.sort();
    keys.dedup();
    let smaller = na.min(nb) / (na + nb);
    let cells = keys
        .into_iter()
        .map(|c| {
            let (x, y) = (a.count(c) as f64, b.count(c) as f64);
            ((x + y) * smaller, vec![x, y])
        })
        .collect();
    let pooled = pool(cells, MIN_EXPECTED_COUNT);
    let statistic = pooled
        .iter()
        .map(|(_, v)| {
            let total = v[0] + v[1];
            let ea = total * na / (na + nb);
            let eb = total * nb / (na + nb);
            (v[0] - ea).powi(2) / ea + (v[1] - eb).powi(2) / eb
        })
        .sum();
    Ok(ChiSquare::from_statistic(
        statistic,
        pooled.len().saturating_sub(1),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KolmogorovSmirnov {
    pub statistic: f64,
    pub p_value: f64,
}

/// Two-sample Kolmogorov–Smirnov test with the asymptotic p-value.
pub fn ks_two_sample(a: &[f64], b: &[f64]) -> Result<KolmogorovSmirnov> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::InvalidParameters("empty sample".into()));
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let (mut i, mut j, mut d) = (0, 0, 0.0f64);
    while i < a.len() && j < b.len() {
        let x = a[i].min(b[j]);
        while i < a.len() && a[i] <= x {
            i += 1;
        }
        while j < b.len() && b[j] <= x {
            j += 1;
        }
        d = d.max((i as f64 / na - j as f64 / nb).abs());
    }
    let en = (na * nb / (na + nb)).sqrt();
    let lambda = (en + 0.12 + 0.11 / en) * d;
    Ok(KolmogorovSmirnov {
        statistic: d,
        p_value: kolmogorov_sf(lambda),
    })
}

/// `P(K > lambda)` for the Kolmogorov distribution.
fn kolmogorov_sf(lambda: f64) -> f64 {
    if lambda < 0.2 {
        return 1.0;
    }
    let mut sum = 0.0;
    for k in 1..=100 {
        let term = (-2.0 * (k * k) as f64 * lambda * lambda).exp();
        sum += if k % 2 == 1 { term } else { -term };
        if term < 1e-16 {
            break;
        }
    }
    (2.0 * sum).clamp(0.0, 1.0)
}

/// Summary of a sampling run against the exact law.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleSummary {
    pub seed: u64,
    pub n: usize,
    pub sample_size: u64,
    pub tv: f64,
    pub chi_square: f64,
    pub dof: usize,
    pub p_value: f64,
}

impl SampleSummary {
    pub fn new<S: Scalar>(seed: u64, emp: &EmpiricalLaw, exact: &CompositionLaw<S>) -> Result<Self> {
        let chi = chi_square(emp, exact)?;
        Ok(Self {
            seed,
            n: emp.n(),
            sample_size: emp.sample_size(),
            tv: tv_distance(emp, exact)?,
            chi_square: chi.statistic,
            dof: chi.dof,
            p_value: chi.p_value,
        })
    }
}
