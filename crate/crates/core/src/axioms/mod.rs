//! Executable versions of the five axioms.
//!
//! Every axiom quantifies over all comparison matrices, so none can be
//! verified by sampling. The checks here are falsification searches: they
//! either return a concrete, replayable [`Witness`] or report that no
//! violation was found in the samples drawn. Known counterexamples can be
//! seeded so that proven violations are always found.

mod checks;
mod seeds;
mod sweep;
mod table;

use std::fmt;

use thiserror::Error;

use crate::indices::{IndexDescriptor, IndexError};
use crate::matrix::{MatrixError, PairwiseComparisonMatrix, PermutationMap, PerturbationSpec};
use crate::sample::RngSeed;

pub use checks::{check_a1, check_a2, check_a3, check_a4, check_a5, run_check};
pub use seeds::{Counterexamples, SeededPerturbation};
pub use sweep::{geomspace, linspace, sweep_entry, sweep_power, SweepCurve};
pub use table::{
    conformance_table, published_expectation, CellStatus, ConformanceCell, ConformanceTable,
    Expectation,
};

#[derive(Error, Debug)]
pub enum AxiomError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Index(#[from] IndexError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    A1,
    A2,
    A3,
    A4,
    A5,
}

impl Axiom {
    pub const ALL: [Axiom; 5] = [Axiom::A1, Axiom::A2, Axiom::A3, Axiom::A4, Axiom::A5];

    pub fn parse(s: &str) -> Option<Axiom> {
        match s.trim().to_ascii_lowercase().as_str() {
            "a1" => Some(Axiom::A1),
            "a2" => Some(Axiom::A2),
            "a3" => Some(Axiom::A3),
            "a4" => Some(Axiom::A4),
            "a5" => Some(Axiom::A5),
            _ => None,
        }
    }

    fn stream_tag(self) -> u64 {
        (self as u64 + 1) << 40
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{}", *self as u8 + 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    NoViolationFound,
    Violated,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::NoViolationFound => "no-violation-found",
            Verdict::Violated => "violated",
        })
    }
}

/// Sampling configuration shared by all five checks.
#[derive(Clone, Debug, PartialEq)]
pub struct AxiomConfig {
    /// Random samples per check, on top of any seeded counterexamples.
    pub samples: usize,
    pub min_order: usize,
    pub max_order: usize,
    /// Entries are drawn from `[1/σ, σ]`.
    pub sigma: f64,
    pub seed: RngSeed,
    /// Margin a comparison must fail by before it counts as a violation,
    /// scaled by `max(1, |reference value|)`.
    pub tol: f64,
    /// Tolerance of the transitivity test that labels matrices consistent.
    pub consistency_tol: f64,
    /// Exponents `b > 1` for A3, ascending.
    pub b_grid: Vec<f64>,
    /// Exponents for A4, ascending, with values on both sides of 1.
    pub delta_grid: Vec<f64>,
    /// Offsets for A5, strictly decreasing toward 0.
    pub h_sequence: Vec<f64>,
    /// Smallest index change A5 treats as a jump.
    pub continuity_jump: f64,
}

impl Default for AxiomConfig {
    fn default() -> Self {
        Self {
            samples: 500,
            min_order: 3,
            max_order: 7,
            sigma: 9.0,
            seed: RngSeed(1),
            tol: 1e-7,
            consistency_tol: 1e-9,
            b_grid: vec![1.1, 1.5, 2.0, 3.0, 5.0, 10.0, 20.0],
            delta_grid: vec![
                -2.0, -1.0, -0.5, -0.25, 0.1, 0.25, 0.5, 0.75, 1.25, 1.5, 2.0, 3.0,
            ],
            h_sequence: (1..=8).map(|k| 10f64.powi(-k)).collect(),
            continuity_jump: 1e-6,
        }
    }
}

impl AxiomConfig {
    pub fn validate(&self) -> Result<(), AxiomError> {
        let bad = |m: &str| Err(AxiomError::InvalidConfig(m.to_string()));
        if self.samples == 0 {
            return bad("samples must be at least 1");
        }
        if self.min_order < 3 || self.max_order < self.min_order {
            return bad("order range must satisfy 3 <= min_order <= max_order");
        }
        if !(self.sigma.is_finite() && self.sigma > 1.0) {
            return bad("sigma must be finite and greater than 1");
        }
        if !(self.tol >= 0.0 && self.consistency_tol >= 0.0 && self.continuity_jump >= 0.0) {
            return bad("tolerances must be non-negative");
        }
        let ascending = |g: &[f64]| g.windows(2).all(|w| w[0] < w[1]);
        if self.b_grid.is_empty()
            || !ascending(&self.b_grid)
            || self.b_grid.iter().any(|b| !(b.is_finite() && *b > 1.0))
        {
            return bad("b_grid must be a non-empty ascending list of finite values above 1");
        }
        if !ascending(&self.delta_grid)
            || self.delta_grid.iter().any(|d| !d.is_finite())
            || !self.delta_grid.iter().any(|d| *d > 1.0)
            || !self.delta_grid.iter().any(|d| *d < 1.0)
        {
            return bad("delta_grid must be ascending, finite, with values on both sides of 1");
        }
        if self.h_sequence.len() < 2
            || !self.h_sequence.windows(2).all(|w| w[0] > w[1])
            || self.h_sequence.iter().any(|h| !(h.is_finite() && *h > 0.0))
        {
            return bad("h_sequence must be at least two strictly decreasing positive values");
        }
        Ok(())
    }

    /// One-line rendering of every field, echoed in reports.
    pub fn echo(&self) -> String {
        let list = |g: &[f64]| {
            g.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        format!(
            "samples={} orders={}..={} sigma={} seed={} tol={} consistency_tol={} \
             b_grid=[{}] delta_grid=[{}] h_sequence=[{}] continuity_jump={}",
            self.samples,
            self.min_order,
            self.max_order,
            self.sigma,
            self.seed.0,
            self.tol,
            self.consistency_tol,
            list(&self.b_grid),
            list(&self.delta_grid),
            list(&self.h_sequence),
            self.continuity_jump,
        )
    }
}

/// How the compared matrix is obtained from the witness base matrix.
#[derive(Clone, Debug, PartialEq)]
pub enum Transform {
    /// A1: the base matrix itself; `consistent` says which side of the
    /// equivalence it breaks.
    Membership { consistent: bool },
    /// A2: `P A P^T` against `A`.
    Permutation(PermutationMap),
    /// A3: `A(b)` against `A`.
    Power { b: f64 },
    /// A4: `A_pq(δ')` against `A_pq(δ)`.
    PerturbationPair {
        p: usize,
        q: usize,
        delta: f64,
        delta_prime: f64,
    },
    /// A5: `a_pq ↦ a_pq (1 + h)` against `A`.
    Offset { p: usize, q: usize, h: f64 },
    /// A5: `A(b)` against the indifference matrix, as `b → 0`.
    PowerLimit { b: f64 },
}

impl fmt::Display for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Transform::Membership { consistent } => {
                write!(f, "membership consistent={consistent}")
            }
            Transform::Permutation(p) => write!(f, "permutation {p}"),
            Transform::Power { b } => write!(f, "power b={b}"),
            Transform::PerturbationPair {
                p,
                q,
                delta,
                delta_prime,
            } => write!(
                f,
                "perturbation p={} q={} delta={delta} delta_prime={delta_prime}",
                p + 1,
                q + 1
            ),
            Transform::Offset { p, q, h } => write!(f, "offset p={} q={} h={h}", p + 1, q + 1),
            Transform::PowerLimit { b } => write!(f, "power-limit b={b}"),
        }
    }
}

/// A concrete violation, replayable through the public index operations.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub base_matrix: PairwiseComparisonMatrix,
    pub transform: Transform,
    /// `(reference value, compared value)`.
    pub observed: (f64, f64),
    /// Amount by which the violating inequality exceeds its threshold.
    pub margin: f64,
    /// Position of the sample in the run; seeded cases come first.
    pub ordinal: usize,
}

/// Scale used to turn `tol` into a comparison threshold.
pub(crate) fn scaled_tol(tol: f64, reference: f64) -> f64 {
    tol * reference.abs().max(1.0)
}

impl Witness {
    /// Recomputes the observed pair and margin from the base matrix.
    pub fn replay(
        &self,
        index: &IndexDescriptor,
        config: &AxiomConfig,
    ) -> Result<((f64, f64), f64), AxiomError> {
        let a = &self.base_matrix;
        let (reference, compared, margin) = match &self.transform {
            Transform::Membership { consistent } => {
                if a.is_consistent(config.consistency_tol) != *consistent {
                    return Err(AxiomError::InvalidConfig(
                        "witness matrix changed consistency class".into(),
                    ));
                }
                let v = index.evaluate(a)?;
                let gap = (v - index.nu()).abs();
                let margin = if *consistent {
                    gap - config.tol
                } else {
                    config.tol - gap
                };
                (index.nu(), v, margin)
            }
            Transform::Permutation(p) => {
                let r = index.evaluate(a)?;
                let c = index.evaluate(&a.permute(p)?)?;
                (r, c, (c - r).abs() - scaled_tol(config.tol, r))
            }
            Transform::Power { b } => {
                let r = index.evaluate(a)?;
                let c = index.evaluate(&a.hadamard_power(*b)?)?;
                (r, c, (r - c) - scaled_tol(config.tol, r))
            }
            Transform::PerturbationPair {
                p,
                q,
                delta,
                delta_prime,
            } => {
                let r =
                    index.evaluate(&a.perturb_entry(&PerturbationSpec::new(*p, *q, *delta)?)?)?;
                let c = index.evaluate(&a.perturb_entry(&PerturbationSpec::new(
                    *p,
                    *q,
                    *delta_prime,
                )?)?)?;
                (r, c, (r - c) - scaled_tol(config.tol, r))
            }
            Transform::Offset { p, q, h } => {
                let r = index.evaluate(a)?;
                let c = index.evaluate(&a.with_entry(*p, *q, a.get(*p, *q) * (1.0 + h))?)?;
                (r, c, (c - r).abs() - config.continuity_jump)
            }
            Transform::PowerLimit { b } => {
                let r = index.evaluate(&PairwiseComparisonMatrix::ones(a.order())?)?;
                let c = index.evaluate(&a.hadamard_power(*b)?)?;
                (r, c, (c - r).abs() - config.continuity_jump)
            }
        };
        Ok(((reference, compared), margin))
    }
}

/// Outcome of one axiom check for one index.
#[derive(Clone, Debug, PartialEq)]
pub struct AxiomReport {
    pub axiom: Axiom,
    pub index_name: String,
    pub verdict: Verdict,
    /// Seeded plus random samples examined.
    pub samples_run: usize,
    /// Evaluations dropped because the index was undefined there.
    pub skipped: usize,
    pub witness: Option<Witness>,
    pub config_echo: String,
}

impl fmt::Display for AxiomReport {
    /// One record: a header line, the witness description and its base
    /// matrix as an inline CSV block, closed by `end`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "record index={} axiom={} verdict={} samples={} skipped={}",
            self.index_name, self.axiom, self.verdict, self.samples_run, self.skipped
        )?;
        writeln!(f, "config {}", self.config_echo)?;
        if self.axiom == Axiom::A5 {
            writeln!(
                f,
                "note finite continuity probe; cannot establish continuity on the whole domain"
            )?;
        }
        if let Some(w) = &self.witness {
            writeln!(
                f,
                "witness sample={} transform={} observed={},{} margin={}",
                w.ordinal, w.transform, w.observed.0, w.observed.1, w.margin
            )?;
            writeln!(f, "matrix")?;
            write!(f, "{}", w.base_matrix)?;
        }
        writeln!(f, "end")
    }
}
