use std::fmt::Write as _;

use crate::indices::IndexDescriptor;

use super::{run_check, Axiom, AxiomConfig, AxiomError, AxiomReport, Counterexamples, Verdict};

/// Entry of the published conformance table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    Satisfied,
    Violated,
    /// Left open in the literature.
    Unknown,
}

impl Expectation {
    fn symbol(self) -> &'static str {
        match self {
            Expectation::Satisfied => "Y",
            Expectation::Violated => "N",
            Expectation::Unknown => "?",
        }
    }
}

/// Published verdict for a named index, `None` for indices outside the table.
pub fn published_expectation(index_name: &str, axiom: Axiom) -> Option<Expectation> {
    use Expectation::{Satisfied as Y, Unknown as U, Violated as N};
    let row = match index_name {
        "ci" | "gci" | "ci_star" => [Y, Y, Y, Y, Y],
        "gw" => [Y, Y, N, U, Y],
        "re" => [Y, Y, Y, N, N],
        "hci" => [Y, Y, N, Y, Y],
        "ni" => [Y, Y, U, N, Y],
        "i1" => [N, Y, Y, Y, Y],
        "i2" => [Y, N, Y, Y, Y],
        "i4" => [Y, Y, Y, N, Y],
        "i5" => [Y, Y, Y, Y, N],
        _ => return None,
    };
    Some(row[axiom as usize])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellStatus {
    NoViolationFound,
    Violated,
    /// No violation found on a cell the literature leaves open.
    SearchedNoViolation,
}

impl CellStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CellStatus::NoViolationFound => "no-violation-found",
            CellStatus::Violated => "violated",
            CellStatus::SearchedNoViolation => "searched-no-violation",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConformanceCell {
    pub expectation: Option<Expectation>,
    pub status: CellStatus,
    pub report: AxiomReport,
}

impl ConformanceCell {
    /// A proven violation that was not found, or a violation of a proven
    /// property.
    pub fn is_mismatch(&self) -> bool {
        match self.expectation {
            Some(Expectation::Violated) => self.status != CellStatus::Violated,
            Some(Expectation::Satisfied) => self.status == CellStatus::Violated,
            _ => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConformanceTable {
    pub indices: Vec<String>,
    pub axioms: Vec<Axiom>,
    /// Row-major: one row per index, one column per axiom.
    pub cells: Vec<ConformanceCell>,
}

impl ConformanceTable {
    pub fn cell(&self, index_name: &str, axiom: Axiom) -> Option<&ConformanceCell> {
        let row = self.indices.iter().position(|n| n == index_name)?;
        let col = self.axioms.iter().position(|a| *a == axiom)?;
        self.cells.get(row * self.axioms.len() + col)
    }

    pub fn violated(&self) -> Vec<(String, Axiom)> {
        self.cells
            .iter()
            .filter(|c| c.status == CellStatus::Violated)
            .map(|c| (c.report.index_name.clone(), c.report.axiom))
            .collect()
    }

    pub fn mismatches(&self) -> Vec<&ConformanceCell> {
        self.cells.iter().filter(|c| c.is_mismatch()).collect()
    }

    /// Grid of `Y`/`N`/`?` with sample counts, then one line per witness.
    pub fn render_plain(&self) -> String {
        let mut out = format!("{:<8}", "index");
        for a in &self.axioms {
            let _ = write!(out, " {:<16}", a.to_string());
        }
        out = out.trim_end().to_string();
        out.push('\n');
        for (row, name) in self.indices.iter().enumerate() {
            let _ = write!(out, "{name:<8}");
            for col in 0..self.axioms.len() {
                let cell = &self.cells[row * self.axioms.len() + col];
                let symbol = match cell.status {
                    CellStatus::NoViolationFound => "Y",
                    CellStatus::Violated => "N",
                    CellStatus::SearchedNoViolation => "?",
                };
                let flag = if cell.is_mismatch() { "!" } else { "" };
                let _ = write!(
                    out,
                    " {:<16}",
                    format!("{symbol}{flag} ({})", cell.report.samples_run)
                );
            }
            out = out.trim_end().to_string();
            out.push('\n');
        }
        for cell in &self.cells {
            if let Some(w) = &cell.report.witness {
                let _ = writeln!(
                    out,
                    "{} {}: {} observed {} -> {} margin {}",
                    cell.report.index_name,
                    cell.report.axiom,
                    w.transform,
                    w.observed.0,
                    w.observed.1,
                    w.margin
                );
            }
        }
        out
    }

    pub fn render_csv(&self) -> String {
        let mut out =
            String::from("index,axiom,expected,status,samples,skipped,witness_sample,margin\n");
        for cell in &self.cells {
            let r = &cell.report;
            let expected = cell.expectation.map_or("", Expectation::symbol);
            let (ordinal, margin) = match &r.witness {
                Some(w) => (w.ordinal.to_string(), w.margin.to_string()),
                None => (String::new(), String::new()),
            };
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                r.index_name,
                r.axiom,
                expected,
                cell.status.as_str(),
                r.samples_run,
                r.skipped,
                ordinal,
                margin
            );
        }
        out
    }

    /// Every underlying report record, in table order.
    pub fn render_reports(&self) -> String {
        self.cells.iter().map(|c| c.report.to_string()).collect()
    }
}

/// Runs every selected axiom check on every index.
pub fn conformance_table(
    indices: &[IndexDescriptor],
    axioms: &[Axiom],
    config: &AxiomConfig,
    seeds: &Counterexamples,
) -> Result<ConformanceTable, AxiomError> {
    if indices.is_empty() || axioms.is_empty() {
        return Err(AxiomError::InvalidConfig(
            "conformance table needs at least one index and one axiom".into(),
        ));
    }
    config.validate()?;
    let mut cells = Vec::with_capacity(indices.len() * axioms.len());
    for index in indices {
        for &axiom in axioms {
            let report = run_check(axiom, index, config, seeds)?;
            let expectation = published_expectation(index.name(), axiom);
            let status = match (report.verdict, expectation) {
                (Verdict::Violated, _) => CellStatus::Violated,
                (Verdict::NoViolationFound, Some(Expectation::Unknown)) => {
                    CellStatus::SearchedNoViolation
                }
                (Verdict::NoViolationFound, _) => CellStatus::NoViolationFound,
            };
            cells.push(ConformanceCell {
                expectation,
                status,
                report,
            });
        }
    }
    Ok(ConformanceTable {
        indices: indices.iter().map(|i| i.name().to_string()).collect(),
        axioms: axioms.to_vec(),
        cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expectations() {
        assert_eq!(
            published_expectation("hci", Axiom::A3),
            Some(Expectation::Violated)
        );
        assert_eq!(
            published_expectation("gw", Axiom::A4),
            Some(Expectation::Unknown)
        );
        assert_eq!(
            published_expectation("ci", Axiom::A5),
            Some(Expectation::Satisfied)
        );
        assert_eq!(published_expectation("cr", Axiom::A1), None);
    }

    #[test]
    fn rejects_empty_selection() {
        let config = AxiomConfig::default();
        let seeds = Counterexamples::none();
        assert!(conformance_table(&[], &Axiom::ALL, &config, &seeds).is_err());
        assert!(conformance_table(&[IndexDescriptor::ci()], &[], &config, &seeds).is_err());
        let zero = AxiomConfig {
            samples: 0,
            ..Default::default()
        };
        assert!(conformance_table(&[IndexDescriptor::ci()], &Axiom::ALL, &zero, &seeds).is_err());
    }
}
