//! Plain-text file formats: matrix CSV and Random Index tables.
//!
//! Matrix files hold `n` lines of `n` comma-separated decimals with no
//! header. Random Index files hold `n,RI` lines, optionally followed by a
//! `provenance,...` row.

use std::fs;
use std::path::Path;

use crate::indices::{IndexError, Provenance, RandomIndexTable};
use crate::matrix::{MatrixError, PairwiseComparisonMatrix, DEFAULT_RECIPROCITY_TOL};

fn parse_decimal(field: &str, line: usize) -> Result<f64, MatrixError> {
    let field = field.trim();
    field.parse::<f64>().map_err(|_| MatrixError::ParseError {
        line,
        message: format!("`{field}` is not a decimal number"),
    })
}

/// Parses matrix CSV text and validates it at the default reciprocity tolerance.
pub fn parse_matrix_csv(text: &str) -> Result<PairwiseComparisonMatrix, MatrixError> {
    let mut rows = Vec::new();
    for (k, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let row = line
            .split(',')
            .map(|f| parse_decimal(f, k + 1))
            .collect::<Result<Vec<f64>, _>>()?;
        rows.push(row);
    }
    PairwiseComparisonMatrix::from_rows(&rows, DEFAULT_RECIPROCITY_TOL)
}

/// Full grid with shortest round-trip decimals, so re-reading is exact.
pub fn format_matrix_csv(a: &PairwiseComparisonMatrix) -> String {
    a.to_string()
}

pub fn read_matrix_csv(path: impl AsRef<Path>) -> Result<PairwiseComparisonMatrix, MatrixError> {
    parse_matrix_csv(&fs::read_to_string(path)?)
}

pub fn write_matrix_csv(
    a: &PairwiseComparisonMatrix,
    path: impl AsRef<Path>,
) -> Result<(), MatrixError> {
    fs::write(path, format_matrix_csv(a))?;
    Ok(())
}

pub fn format_random_index_table(table: &RandomIndexTable) -> String {
    let mut out = String::new();
    for (n, ri) in table.entries() {
        out.push_str(&format!("{n},{ri}\n"));
    }
    if let Provenance::MonteCarlo { .. } = table.provenance() {
        out.push_str(&format!("provenance,{}\n", table.provenance()));
    }
    out
}

pub fn parse_random_index_table(text: &str) -> Result<RandomIndexTable, IndexError> {
    let mut entries = Vec::new();
    let mut provenance = Provenance::UserSupplied;
    for (k, line) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        let bad = |message: String| MatrixError::ParseError {
            line: line_no,
            message,
        };
        if fields[0] == "provenance" {
            provenance = match fields.as_slice() {
                ["provenance", "monte-carlo", seed, samples] => Provenance::MonteCarlo {
                    seed: seed
                        .parse()
                        .map_err(|_| bad(format!("bad seed `{seed}`")))?,
                    samples: samples
                        .parse()
                        .map_err(|_| bad(format!("bad sample count `{samples}`")))?,
                },
                ["provenance", "user-supplied"] => Provenance::UserSupplied,
                _ => return Err(bad(format!("unrecognized provenance row `{line}`")).into()),
            };
            continue;
        }
        let [order, ri] = fields.as_slice() else {
            return Err(bad(format!("expected `n,RI`, got `{line}`")).into());
        };
        let order: usize = order
            .parse()
            .map_err(|_| bad(format!("bad order `{order}`")))?;
        entries.push((order, parse_decimal(ri, line_no)?));
    }
    RandomIndexTable::new(entries, provenance)
}

pub fn read_random_index_table(path: impl AsRef<Path>) -> Result<RandomIndexTable, IndexError> {
    let text = fs::read_to_string(path).map_err(MatrixError::from)?;
    parse_random_index_table(&text)
}
