use crate::catalog;
use crate::matrix::PairwiseComparisonMatrix;

/// A consistent base matrix and the entry to perturb, optionally with its
/// own exponent list instead of the configured grid.
#[derive(Clone, Debug, PartialEq)]
pub struct SeededPerturbation {
    pub matrix: PairwiseComparisonMatrix,
    pub p: usize,
    pub q: usize,
    /// Ascending; `None` uses `AxiomConfig::delta_grid`.
    pub deltas: Option<Vec<f64>>,
}

/// Known counterexamples, examined before any random sample.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Counterexamples {
    pub a1: Vec<PairwiseComparisonMatrix>,
    pub a3: Vec<PairwiseComparisonMatrix>,
    pub a4: Vec<SeededPerturbation>,
}

impl Counterexamples {
    pub fn none() -> Self {
        Self::default()
    }

    /// The matrices behind every proven violation in the conformance table
    /// and the independence witnesses.
    pub fn published() -> Self {
        // a_14 = 1/9 moved to 0.5 and to 2
        let to_half = 0.5f64.ln() / (1.0f64 / 9.0).ln();
        let to_two = 2.0f64.ln() / (1.0f64 / 9.0).ln();
        Self {
            a1: vec![catalog::doubling_chain_mild()],
            a3: vec![catalog::hci_counterexample(), catalog::gw_counterexample()],
            a4: vec![
                SeededPerturbation {
                    matrix: catalog::ni_counterexample(),
                    p: 0,
                    q: 3,
                    deltas: Some(vec![to_two, to_half]),
                },
                SeededPerturbation {
                    matrix: catalog::doubling_chain(),
                    p: 0,
                    q: 2,
                    deltas: None,
                },
                SeededPerturbation {
                    matrix: catalog::spread_counterexample(),
                    p: 0,
                    q: 2,
                    deltas: Some(vec![0.75, 0.9]),
                },
            ],
        }
    }
}
