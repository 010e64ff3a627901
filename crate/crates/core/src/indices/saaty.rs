//! Consistency Index, Consistency Ratio and Monte Carlo Random Index values.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use super::IndexError;
use crate::matrix::PairwiseComparisonMatrix;
use crate::priorities::perron;
use crate::sample::{random_pcm, RngSeed};

/// `(λ_max - n) / (n - 1)`.
pub fn ci(a: &PairwiseComparisonMatrix) -> Result<f64, IndexError> {
    let n = a.order() as f64;
    let eig = perron(a)?;
    Ok((eig.lambda_max - n) / (n - 1.0))
}

/// `CI / RI(n)`.
pub fn cr(a: &PairwiseComparisonMatrix, table: &RandomIndexTable) -> Result<f64, IndexError> {
    let ri = table.get(a.order())?;
    Ok(ci(a)? / ri)
}

#[derive(Clone, Debug, PartialEq)]
pub enum Provenance {
    MonteCarlo { seed: u64, samples: usize },
    UserSupplied,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::MonteCarlo { seed, samples } => write!(f, "monte-carlo,{seed},{samples}"),
            Provenance::UserSupplied => f.write_str("user-supplied"),
        }
    }
}

/// Random Index per matrix order.
#[derive(Clone, Debug, PartialEq)]
pub struct RandomIndexTable {
    entries: BTreeMap<usize, f64>,
    provenance: Provenance,
}

impl RandomIndexTable {
    pub fn new(
        entries: impl IntoIterator<Item = (usize, f64)>,
        provenance: Provenance,
    ) -> Result<Self, IndexError> {
        let entries: BTreeMap<usize, f64> = entries.into_iter().collect();
        for (&order, &value) in &entries {
            if !(value.is_finite() && value > 0.0) {
                return Err(IndexError::RandomIndexNotPositive { order, value });
            }
        }
        Ok(Self {
            entries,
            provenance,
        })
    }

    /// Estimates RI for every order in `orders` with [`estimate_random_index`].
    pub fn monte_carlo(
        orders: &[usize],
        sigma: f64,
        samples: usize,
        seed: RngSeed,
    ) -> Result<Self, IndexError> {
        let mut entries = Vec::with_capacity(orders.len());
        for &n in orders {
            let estimate = estimate_random_index(n, sigma, samples, seed)?;
            entries.push((n, estimate.value));
        }
        Self::new(
            entries,
            Provenance::MonteCarlo {
                seed: seed.0,
                samples,
            },
        )
    }

    pub fn get(&self, order: usize) -> Result<f64, IndexError> {
        self.entries
            .get(&order)
            .copied()
            .ok_or(IndexError::MissingRandomIndex(order))
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.entries.iter().map(|(&n, &v)| (n, v))
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RandomIndexEstimate {
    /// Mean CI over the successful draws.
    pub value: f64,
    pub standard_error: f64,
    pub used: usize,
    /// Draws dropped because power iteration did not converge.
    pub failed: usize,
}

/// Mean CI of `samples` matrices drawn by `random_pcm(n, sigma, ·)`.
///
/// Draw `k` uses `seed.substream(k)`. Draws whose eigen solve fails are
/// excluded and counted; the call only fails if every draw does.
pub fn estimate_random_index(
    n: usize,
    sigma: f64,
    samples: usize,
    seed: RngSeed,
) -> Result<RandomIndexEstimate, IndexError> {
    if samples == 0 {
        return Err(IndexError::InvalidSampleCount);
    }
    // validates n and sigma once, up front
    random_pcm(n, sigma, seed)?;
    let draws: Vec<Result<f64, IndexError>> = (0..samples as u64)
        .into_par_iter()
        .map(|k| {
            let a = random_pcm(n, sigma, seed.substream(k))?;
            ci(&a)
        })
        .collect();
    let mut values = Vec::with_capacity(samples);
    let mut last_error = None;
    for draw in draws {
        match draw {
            Ok(v) => values.push(v),
            Err(e) => last_error = Some(e),
        }
    }
    if values.is_empty() {
        return Err(last_error.expect("at least one draw"));
    }
    let used = values.len();
    let mean = values.iter().sum::<f64>() / used as f64;
    let variance = if used > 1 {
        values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (used - 1) as f64
    } else {
        0.0
    };
    Ok(RandomIndexEstimate {
        value: mean,
        standard_error: (variance / used as f64).sqrt(),
        used,
        failed: samples - used,
    })
}
