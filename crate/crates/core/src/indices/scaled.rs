//! The scale-normalized index `NI_n^σ` for matrices with entries in `[1/σ, σ]`.

use crate::matrix::PairwiseComparisonMatrix;
use crate::priorities::geometric_mean_weights;

use super::IndexError;

/// Relative slack on the `[1/σ, σ]` bounds.
pub const SCALE_SLACK: f64 = 1e-9;

/// Order above which the two normalization branches switch: `(n/2)^(n/(n-2))`.
pub fn ni_gamma_threshold(n: usize) -> f64 {
    assert!(n >= 3, "order must be at least 3");
    let n = n as f64;
    (n / 2.0).powf(n / (n - 2.0))
}

fn first_term(n: f64, sigma: f64) -> f64 {
    sigma - sigma.powf((2.0 - 2.0 * n) / n)
}

fn below_threshold_term(n: f64, sigma: f64) -> f64 {
    let r = 2.0 / n;
    sigma * sigma * (r.powf(2.0 / (n - 2.0)) - r.powf(n / (n - 2.0)))
}

fn above_threshold_term(n: f64, sigma: f64) -> f64 {
    sigma.powf((2.0 * n - 2.0) / n) - sigma
}

/// Both branch formulas of the normalization factor evaluated at `sigma`,
/// as `(below, above)`; [`ni_gamma`] picks one of them.
pub fn ni_gamma_branches(n: usize, sigma: f64) -> (f64, f64) {
    assert!(n >= 3, "order must be at least 3");
    let nf = n as f64;
    let first = first_term(nf, sigma);
    (
        1.0 / first.max(below_threshold_term(nf, sigma)),
        1.0 / first.max(above_threshold_term(nf, sigma)),
    )
}

/// Normalization factor `γ_n^σ`. Panics unless `n >= 3` and `sigma > 1`.
pub fn ni_gamma(n: usize, sigma: f64) -> f64 {
    assert!(
        sigma > 1.0 && sigma.is_finite(),
        "sigma must be finite and > 1"
    );
    let (below, above) = ni_gamma_branches(n, sigma);
    if sigma < ni_gamma_threshold(n) {
        below
    } else {
        above
    }
}

pub fn ni(a: &PairwiseComparisonMatrix, sigma: f64) -> Result<f64, IndexError> {
    if !(sigma.is_finite() && sigma > 1.0) {
        return Err(IndexError::InvalidSigma(sigma));
    }
    let (lo, hi) = (
        (1.0 / sigma) * (1.0 - SCALE_SLACK),
        sigma * (1.0 + SCALE_SLACK),
    );
    for (i, j, v) in a.upper_entries() {
        if v < lo || v > hi {
            return Err(IndexError::EntriesOutOfScale {
                row: i,
                col: j,
                value: v,
                sigma,
            });
        }
    }
    let w = geometric_mean_weights(a);
    let w = w.weights();
    let n = a.order();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            worst = worst.max((w[i] / w[j] - a.get(i, j)).abs());
        }
    }
    Ok(ni_gamma(n, sigma) * worst)
}
