//! Inconsistency indices and the descriptor type the axiom checks run on.

mod deviation;
mod saaty;
mod scaled;
mod triads;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::matrix::{MatrixError, PairwiseComparisonMatrix};
use crate::priorities::EigenError;

pub use deviation::{gci, gw, gw_with, hci, re, PriorityMethod};
pub use saaty::{ci, cr, estimate_random_index, Provenance, RandomIndexEstimate, RandomIndexTable};
pub use scaled::{ni, ni_gamma, ni_gamma_branches, ni_gamma_threshold, SCALE_SLACK};
pub use triads::{
    ci_star, i1, i2, i4, i5, triad_ratios, triad_term, TriadWeights, CI_STAR_ROUNDOFF,
};

/// Default `ε` for [`i4`].
pub const I4_EPSILON: f64 = 0.1;
/// Default consistency tolerance for [`i5`].
pub const I5_TOL: f64 = 1e-9;

#[derive(Error, Debug)]
pub enum IndexError {
    #[error(transparent)]
    Eigen(#[from] EigenError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("no Random Index value for order {0}")]
    MissingRandomIndex(usize),
    #[error("Random Index for order {order} must be positive, got {value}")]
    RandomIndexNotPositive { order: usize, value: f64 },
    #[error("entry ({row}, {col}) = {value} lies outside [1/{sigma}, {sigma}]")]
    EntriesOutOfScale {
        row: usize,
        col: usize,
        value: f64,
        sigma: f64,
    },
    #[error("scale bound sigma = {0} must be finite and greater than 1")]
    InvalidSigma(f64),
    #[error("invalid triad weights: {0}")]
    InvalidTriadWeights(String),
    #[error("epsilon must be finite and positive, got {0}")]
    InvalidEpsilon(f64),
    #[error("sample count must be at least 1")]
    InvalidSampleCount,
    #[error("unknown index `{0}`")]
    UnknownIndex(String),
    #[error("index `ni` needs an explicit sigma")]
    MissingSigma,
}

impl IndexError {
    pub fn name(&self) -> &'static str {
        match self {
            IndexError::Eigen(EigenError::NoConvergence { .. }) => "NoConvergence",
            IndexError::Eigen(EigenError::InvalidSettings { .. }) => "InvalidSettings",
            IndexError::Matrix(e) => e.name(),
            IndexError::MissingRandomIndex(_) => "MissingRandomIndex",
            IndexError::RandomIndexNotPositive { .. } => "RandomIndexNotPositive",
            IndexError::EntriesOutOfScale { .. } => "EntriesOutOfScale",
            IndexError::InvalidSigma(_) => "InvalidSigma",
            IndexError::InvalidTriadWeights(_) => "InvalidTriadWeights",
            IndexError::InvalidEpsilon(_) => "InvalidEpsilon",
            IndexError::InvalidSampleCount => "InvalidSampleCount",
            IndexError::UnknownIndex(_) => "UnknownIndex",
            IndexError::MissingSigma => "MissingSigma",
        }
    }
}

pub type IndexFn = dyn Fn(&PairwiseComparisonMatrix) -> Result<f64, IndexError> + Send + Sync;

/// A named index together with its consistency value `ν`.
#[derive(Clone)]
pub struct IndexDescriptor {
    name: String,
    nu: f64,
    domain_note: Option<String>,
    evaluate: Arc<IndexFn>,
}

impl fmt::Debug for IndexDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IndexDescriptor")
            .field("name", &self.name)
            .field("nu", &self.nu)
            .field("domain_note", &self.domain_note)
            .finish_non_exhaustive()
    }
}

/// Canonical identifiers, in the order they are listed on the command line.
pub const INDEX_NAMES: [&str; 12] = [
    "ci", "cr", "gw", "gci", "re", "ci_star", "hci", "ni", "i1", "i2", "i4", "i5",
];

/// Per-index parameters for [`IndexDescriptor::by_name`].
#[derive(Clone, Debug, Default)]
pub struct IndexOptions {
    /// Required for `ni`.
    pub sigma: Option<f64>,
    /// Required for `cr`.
    pub random_index: Option<RandomIndexTable>,
    pub gw_method: PriorityMethod,
    /// `None` selects [`TriadWeights::canonical`] for the matrix order.
    pub triad_weights: Option<TriadWeights>,
    pub epsilon: Option<f64>,
    pub consistency_tol: Option<f64>,
}

impl IndexDescriptor {
    pub fn new<F>(name: impl Into<String>, nu: f64, evaluate: F) -> Self
    where
        F: Fn(&PairwiseComparisonMatrix) -> Result<f64, IndexError> + Send + Sync + 'static,
    {
        Self {
            name: name.into(),
            nu,
            domain_note: None,
            evaluate: Arc::new(evaluate),
        }
    }

    pub fn with_domain_note(mut self, note: impl Into<String>) -> Self {
        self.domain_note = Some(note.into());
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn domain_note(&self) -> Option<&str> {
        self.domain_note.as_deref()
    }

    pub fn evaluate(&self, a: &PairwiseComparisonMatrix) -> Result<f64, IndexError> {
        (self.evaluate)(a)
    }

    pub fn ci() -> Self {
        Self::new("ci", 0.0, ci)
    }

    pub fn cr(table: RandomIndexTable) -> Self {
        Self::new("cr", 0.0, move |a| cr(a, &table))
    }

    pub fn gw() -> Self {
        Self::new("gw", 0.0, |a| Ok(gw(a)))
    }

    pub fn gw_with(method: PriorityMethod) -> Self {
        match method {
            PriorityMethod::GeometricMean => Self::gw(),
            PriorityMethod::Eigenvector => Self::new("gw", 0.0, move |a| gw_with(a, method))
                .with_domain_note("eigenvector priorities"),
        }
    }

    pub fn gci() -> Self {
        Self::new("gci", 0.0, |a| Ok(gci(a)))
    }

    pub fn re() -> Self {
        Self::new("re", 0.0, |a| Ok(re(a)))
    }

    pub fn ci_star() -> Self {
        Self::new("ci_star", 0.0, |a| Ok(ci_star(a)))
    }

    pub fn hci() -> Self {
        Self::new("hci", 0.0, |a| Ok(hci(a)))
    }

    pub fn ni(sigma: f64) -> Self {
        Self::new("ni", 0.0, move |a| ni(a, sigma))
            .with_domain_note(format!("entries within [1/{sigma}, {sigma}]"))
    }

    pub fn i1() -> Self {
        Self::new("i1", 0.0, |a| Ok(i1(a)))
    }

    /// Uses `weights` when given, the canonical weights for the order otherwise.
    pub fn i2(weights: Option<TriadWeights>) -> Self {
        Self::new("i2", 0.0, move |a| match &weights {
            Some(w) => i2(a, w),
            None => i2(a, &TriadWeights::canonical(a.order())),
        })
    }

    pub fn i4(epsilon: f64) -> Self {
        Self::new("i4", 0.0, move |a| i4(a, epsilon))
    }

    pub fn i5(tol: f64) -> Self {
        Self::new("i5", 0.0, move |a| Ok(i5(a, tol)))
    }

    pub fn by_name(name: &str, options: &IndexOptions) -> Result<Self, IndexError> {
        Ok(match name {
            "ci" => Self::ci(),
            "cr" => Self::cr(
                options
                    .random_index
                    .clone()
                    .ok_or(IndexError::MissingRandomIndex(0))?,
            ),
            "gw" => Self::gw_with(options.gw_method),
            "gci" => Self::gci(),
            "re" => Self::re(),
            "ci_star" => Self::ci_star(),
            "hci" => Self::hci(),
            "ni" => {
                let sigma = options.sigma.ok_or(IndexError::MissingSigma)?;
                if !(sigma.is_finite() && sigma > 1.0) {
                    return Err(IndexError::InvalidSigma(sigma));
                }
                Self::ni(sigma)
            }
            "i1" => Self::i1(),
            "i2" => Self::i2(options.triad_weights.clone()),
            "i4" => {
                let eps = options.epsilon.unwrap_or(I4_EPSILON);
                if !(eps.is_finite() && eps > 0.0) {
                    return Err(IndexError::InvalidEpsilon(eps));
                }
                Self::i4(eps)
            }
            "i5" => Self::i5(options.consistency_tol.unwrap_or(I5_TOL)),
            other => return Err(IndexError::UnknownIndex(other.to_string())),
        })
    }

    /// The seven indices of the published conformance table, with `NI` on the
    /// 1..9 scale.
    pub fn published_set() -> Vec<Self> {
        vec![
            Self::ci(),
            Self::gw(),
            Self::gci(),
            Self::re(),
            Self::ci_star(),
            Self::hci(),
            Self::ni(9.0),
        ]
    }

    /// The four indices used to show the axioms are independent.
    pub fn independence_set() -> Vec<Self> {
        vec![
            Self::i1(),
            Self::i2(None),
            Self::i4(I4_EPSILON),
            Self::i5(I5_TOL),
        ]
    }
}
