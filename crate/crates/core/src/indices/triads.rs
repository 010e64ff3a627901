//! Triad-based indices: `CI*` and the four indices that separate the axioms
//! from one another.

use crate::matrix::PairwiseComparisonMatrix;

use super::IndexError;

/// `x + 1/x - 2`, written as `(x - 1)^2 / x` so it is exactly zero at `x = 1`.
pub fn triad_term(x: f64) -> f64 {
    (x - 1.0).powi(2) / x
}

/// `a_ik / (a_ij a_jk)` for every `i < j < k`, in lexicographic order.
pub fn triad_ratios(a: &PairwiseComparisonMatrix) -> impl Iterator<Item = f64> + '_ {
    a.triads()
        .map(move |(i, j, k)| a.get(i, k) / (a.get(i, j) * a.get(j, k)))
}

fn triad_count(n: usize) -> usize {
    n * (n - 1) * (n - 2) / 6
}

/// Mean of the triad terms over all `C(n, 3)` triads.
pub fn ci_star(a: &PairwiseComparisonMatrix) -> f64 {
    let sum: f64 = triad_ratios(a).map(triad_term).sum();
    sum / triad_count(a.order()) as f64
}

/// `max{CI* - 1, 0}`: zero on every matrix whose `CI*` is at most one.
pub fn i1(a: &PairwiseComparisonMatrix) -> f64 {
    (ci_star(a) - 1.0).max(0.0)
}

/// Positive per-triad weights for [`i2`], indexed like [`triad_ratios`].
#[derive(Clone, Debug, PartialEq)]
pub struct TriadWeights(Vec<f64>);

impl TriadWeights {
    /// Rejects non-positive weights and, when there is more than one triad,
    /// an all-equal assignment.
    pub fn new(weights: Vec<f64>) -> Result<Self, IndexError> {
        if weights.is_empty() || weights.iter().any(|w| !(w.is_finite() && *w > 0.0)) {
            return Err(IndexError::InvalidTriadWeights(
                "weights must be finite and positive".into(),
            ));
        }
        if weights.len() > 1 && weights.iter().all(|w| *w == weights[0]) {
            return Err(IndexError::InvalidTriadWeights(
                "weights are all equal".into(),
            ));
        }
        Ok(Self(weights))
    }

    /// `1 + rank` of each triad in lexicographic order, rescaled to mean one.
    pub fn canonical(n: usize) -> Self {
        let count = triad_count(n);
        let mean = (count as f64 + 1.0) / 2.0;
        Self((1..=count).map(|r| r as f64 / mean).collect())
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

/// Weighted triad sum; depends on how alternatives are labelled.
pub fn i2(a: &PairwiseComparisonMatrix, weights: &TriadWeights) -> Result<f64, IndexError> {
    let expected = triad_count(a.order());
    if weights.0.len() != expected {
        return Err(IndexError::InvalidTriadWeights(format!(
            "{} weights for {} triads",
            weights.0.len(),
            expected
        )));
    }
    Ok(triad_ratios(a)
        .zip(&weights.0)
        .map(|(x, w)| triad_term(x) * w)
        .sum())
}

/// `CI*` values at or below this are treated as round-off of a consistent
/// matrix before taking the 0.1 power in [`i4`].
pub const CI_STAR_ROUNDOFF: f64 = 1e-24;

/// `(max_{i≠j} max{a_ij, a_ji} - min_{i≠j} max{a_ij, a_ji} + ε) · CI*^0.1`.
pub fn i4(a: &PairwiseComparisonMatrix, epsilon: f64) -> Result<f64, IndexError> {
    if !(epsilon.is_finite() && epsilon > 0.0) {
        return Err(IndexError::InvalidEpsilon(epsilon));
    }
    let (lo, hi) = a
        .upper_entries()
        .map(|(_, _, v)| v.max(1.0 / v))
        .fold((f64::INFINITY, 0.0f64), |(lo, hi), v| {
            (lo.min(v), hi.max(v))
        });
    let c = ci_star(a);
    let c = if c <= CI_STAR_ROUNDOFF { 0.0 } else { c };
    Ok((hi - lo + epsilon) * c.powf(0.1))
}

/// 0 on consistent matrices (at `tol`), 1 otherwise.
pub fn i5(a: &PairwiseComparisonMatrix, tol: f64) -> f64 {
    if a.is_consistent(tol) {
        0.0
    } else {
        1.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic() -> PairwiseComparisonMatrix {
        PairwiseComparisonMatrix::from_upper(3, vec![2.0, 0.5, 2.0]).unwrap()
    }

    #[test]
    fn ci_star_of_cyclic_example() {
        // one triad, x = (1/2) / (2 * 2) = 1/8, G = 1/8 + 8 - 2
        assert!((ci_star(&cyclic()) - 6.125).abs() < 1e-12);
        let cubed = ci_star(&cyclic().hadamard_power(3.0).unwrap());
        let oracle = 1.0 / 512.0 + 512.0 - 2.0;
        assert!(cubed > 6.125);
        assert!((cubed - oracle).abs() < 1e-9);
    }

    #[test]
    fn ci_star_is_zero_when_consistent() {
        let a = PairwiseComparisonMatrix::from_weights(&[2.0, 9.0, 0.3, 1.0, 4.0]).unwrap();
        assert!(ci_star(&a) < 1e-24);
        assert_eq!(triad_term(1.0), 0.0);
    }

    #[test]
    fn i1_clips_mild_inconsistency() {
        assert!((i1(&cyclic()) - 5.125).abs() < 1e-12);
        let mild = PairwiseComparisonMatrix::from_upper(3, vec![2.0, 5.0, 2.0]).unwrap();
        assert!(!mild.is_consistent(1e-9));
        assert!(ci_star(&mild) <= 1.0);
        assert_eq!(i1(&mild), 0.0);
    }

    #[test]
    fn canonical_triad_weights() {
        let w = TriadWeights::canonical(4);
        assert_eq!(w.as_slice().len(), 4);
        let mean = w.as_slice().iter().sum::<f64>() / 4.0;
        assert!((mean - 1.0).abs() < 1e-15);
        assert!(w.as_slice().windows(2).all(|p| p[0] < p[1]));
        assert!(TriadWeights::new(vec![1.0, 1.0]).is_err());
        assert!(TriadWeights::new(vec![1.0, -1.0]).is_err());
        assert!(TriadWeights::new(vec![2.0]).is_ok());
    }

    #[test]
    fn i2_weights_must_match_triad_count() {
        let a = PairwiseComparisonMatrix::ones(4).unwrap();
        assert!(i2(&a, &TriadWeights::canonical(5)).is_err());
        assert_eq!(i2(&a, &TriadWeights::canonical(4)).unwrap(), 0.0);
    }

    #[test]
    fn i4_and_i5_basics() {
        let consistent = PairwiseComparisonMatrix::from_weights(&[1.0, 3.0, 0.5, 7.0]).unwrap();
        assert_eq!(i4(&consistent, 0.1).unwrap(), 0.0);
        assert!(i4(&cyclic(), 0.1).unwrap() > 0.0);
        assert!(matches!(
            i4(&cyclic(), 0.0),
            Err(IndexError::InvalidEpsilon(_))
        ));
        assert_eq!(i5(&consistent, 1e-9), 0.0);
        assert_eq!(i5(&cyclic(), 1e-9), 1.0);
    }
}
