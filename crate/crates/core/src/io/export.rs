//! CSV and text encodings of tables, laws and samples.

use std::io::Write;

use crate::decrement::DecrementMatrix;
use crate::error::{Error, Result};
use crate::law::{Composition, CompositionLaw, GreenMatrix};
use crate::phi_model::PhiTable;
use crate::scalar::Scalar;

fn csv_err(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

fn write_triangle<W: Write, S: Scalar>(
    out: W,
    first: &[&str],
    rows: &[(Vec<String>, &[S])],
    width: usize,
) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let header: Vec<String> = first
        .iter()
        .map(|s| s.to_string())
        .chain((1..=width).map(|m| m.to_string()))
        .collect();
    w.write_record(&header).map_err(csv_err)?;
    for (lead, values) in rows {
        let mut record = lead.clone();
        record.extend(values.iter().map(|v| v.to_string()));
        record.resize(first.len() + width, String::new());
        w.write_record(&record).map_err(csv_err)?;
    }
    w.flush().map_err(|e| csv_err(e.into()))
}

/// Columns `n, phi, 1..n_max` holding `Phi(n)` and `Phi(n:m)`.
pub fn write_phi_csv<W: Write, S: Scalar>(out: W, table: &PhiTable<S>) -> Result<()> {
    let rows: Vec<_> = (1..=table.n_max())
        .map(|n| (vec![n.to_string(), table.phi(n).to_string()], table.binom_row(n)))
        .collect();
    write_triangle(out, &["n", "phi"], &rows, table.n_max())
}

/// Columns `n, 1..n_max` holding `q(n:m)`.
pub fn write_decrement_csv<W: Write, S: Scalar>(out: W, q: &DecrementMatrix<S>) -> Result<()> {
    let rows: Vec<_> = (1..=q.n_max()).map(|n| (vec![n.to_string()], q.row(n))).collect();
    write_triangle(out, &["n"], &rows, q.n_max())
}

/// Columns `n, 1..n_max` holding `g(n,j)`.
pub fn write_green_csv<W: Write, S: Scalar>(out: W, g: &GreenMatrix<S>) -> Result<()> {
    let rows: Vec<_> = g
        .rows()
        .iter()
        .enumerate()
        .map(|(i, r)| (vec![(i + 1).to_string()], r.as_slice()))
        .collect();
    write_triangle(out, &["n"], &rows, g.n_max())
}

/// Columns `composition, probability`.
pub fn write_law_csv<W: Write, S: Scalar>(out: W, law: &CompositionLaw<S>) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["composition", "probability"]).map_err(csv_err)?;
    for (c, p) in law.iter() {
        w.write_record([c.to_string(), p.to_string()]).map_err(csv_err)?;
    }
    w.flush().map_err(|e| csv_err(e.into()))
}

/// One dash-joined composition per line.
pub fn write_samples<W: Write>(mut out: W, samples: &[Composition]) -> Result<()> {
    for c in samples {
        writeln!(out, "{c}").map_err(|e| Error::Io(e.to_string()))?;
    }
    Ok(())
}
