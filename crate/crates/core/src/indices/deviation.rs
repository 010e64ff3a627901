//! Indices that compare entries against the ratios `w_i / w_j` of a priority
//! vector, or against column structure: GW, GCI, RE, HCI.

use crate::matrix::PairwiseComparisonMatrix;
use crate::priorities::{geometric_mean_weights, perron, PriorityVector};

use super::IndexError;

/// Which priority vector GW compares the normalized columns with.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PriorityMethod {
    #[default]
    GeometricMean,
    Eigenvector,
}

/// Mean absolute deviation of the column-normalized matrix from the
/// sum-one priority vector, using geometric-mean weights.
pub fn gw(a: &PairwiseComparisonMatrix) -> f64 {
    gw_against(a, &geometric_mean_weights(a))
}

pub fn gw_with(a: &PairwiseComparisonMatrix, method: PriorityMethod) -> Result<f64, IndexError> {
    match method {
        PriorityMethod::GeometricMean => Ok(gw(a)),
        PriorityMethod::Eigenvector => Ok(gw_against(a, &perron(a)?.vector)),
    }
}

fn gw_against(a: &PairwiseComparisonMatrix, w: &PriorityVector) -> f64 {
    let n = a.order();
    let w = w.normalize_sum_one();
    let col_sums = a.column_sums();
    let mut total = 0.0;
    for i in 0..n {
        for (j, s) in col_sums.iter().enumerate() {
            total += (a.get(i, j) / s - w.weights()[i]).abs();
        }
    }
    total / n as f64
}

fn mean_log_rows(a: &PairwiseComparisonMatrix) -> Vec<f64> {
    let n = a.order();
    (0..n)
        .map(|i| (0..n).map(|j| a.get(i, j).ln()).sum::<f64>() / n as f64)
        .collect()
}

/// Geometric Consistency Index.
pub fn gci(a: &PairwiseComparisonMatrix) -> f64 {
    let n = a.order() as f64;
    let log_w = mean_log_rows(a);
    let sum: f64 = a
        .upper_entries()
        .map(|(i, j, v)| (v.ln() + log_w[j] - log_w[i]).powi(2))
        .sum();
    2.0 * sum / ((n - 1.0) * (n - 2.0))
}

/// Relative error: share of the log-matrix not explained by the nearest
/// consistent matrix. Zero for the indifference matrix.
pub fn re(a: &PairwiseComparisonMatrix) -> f64 {
    let n = a.order();
    let m = mean_log_rows(a);
    let mut explained = 0.0;
    let mut total = 0.0;
    for i in 0..n {
        for j in 0..n {
            explained += (m[i] - m[j]).powi(2);
            total += a.get(i, j).ln().powi(2);
        }
    }
    if total == 0.0 {
        return 0.0;
    }
    1.0 - explained / total
}

/// Harmonic Consistency Index built on the harmonic mean of column sums.
pub fn hci(a: &PairwiseComparisonMatrix) -> f64 {
    let n = a.order() as f64;
    let hm = n / a.column_sums().iter().map(|s| 1.0 / s).sum::<f64>();
    (hm - n) * (n + 1.0) / (n * (n - 1.0))
}
