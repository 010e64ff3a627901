//! Priority vectors: geometric row means and the Perron eigenvector.

use thiserror::Error;

use crate::matrix::PairwiseComparisonMatrix;

/// Defaults for [`principal_eigen`].
pub const EIGEN_TOL: f64 = 1e-12;
pub const EIGEN_MAX_ITER: usize = 100_000;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum EigenError {
    #[error("power iteration did not converge: residual {residual} after {iterations} iterations")]
    NoConvergence { residual: f64, iterations: usize },
    #[error("invalid power iteration settings: tol {tol}, max_iter {max_iter}")]
    InvalidSettings { tol: f64, max_iter: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    Raw,
    SumOne,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PriorityVector {
    weights: Vec<f64>,
    normalization: Normalization,
}

impl PriorityVector {
    /// Panics unless every weight is finite and positive.
    pub fn raw(weights: Vec<f64>) -> Self {
        assert!(
            weights.iter().all(|w| w.is_finite() && *w > 0.0),
            "priority weights must be finite and positive"
        );
        Self {
            weights,
            normalization: Normalization::Raw,
        }
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn normalization(&self) -> Normalization {
        self.normalization
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Each weight divided by the total.
    pub fn normalize_sum_one(&self) -> Self {
        let total: f64 = self.weights.iter().sum();
        Self {
            weights: self.weights.iter().map(|w| w / total).collect(),
            normalization: Normalization::SumOne,
        }
    }
}

/// `w_i = (Π_j a_ij)^(1/n)`, evaluated as the exponential of the mean log.
pub fn geometric_mean_weights(a: &PairwiseComparisonMatrix) -> PriorityVector {
    let n = a.order();
    let weights = (0..n)
        .map(|i| {
            let mean_log = (0..n).map(|j| a.get(i, j).ln()).sum::<f64>() / n as f64;
            mean_log.exp()
        })
        .collect();
    PriorityVector::raw(weights)
}

#[derive(Clone, Debug, PartialEq)]
pub struct EigenSolution {
    pub lambda_max: f64,
    pub vector: PriorityVector,
    pub iterations: usize,
    /// `max_i |(A v)_i / v_i - λ| / λ` at the returned vector.
    pub residual: f64,
}

fn multiply(a: &PairwiseComparisonMatrix, v: &[f64], out: &mut [f64]) {
    let n = a.order();
    for (i, o) in out.iter_mut().enumerate() {
        *o = (0..n).map(|j| a.get(i, j) * v[j]).sum();
    }
}

/// Perron root and eigenvector by power iteration from the all-ones vector.
///
/// The iterate is sum-normalized every step. `λ_max` is the mean of the
/// component ratios `(A v)_i / v_i`; iteration stops once their largest
/// deviation from that mean, relative to `λ_max`, is within `tol`.
pub fn principal_eigen(
    a: &PairwiseComparisonMatrix,
    tol: f64,
    max_iter: usize,
) -> Result<EigenSolution, EigenError> {
    if !(tol > 0.0) || max_iter == 0 {
        return Err(EigenError::InvalidSettings { tol, max_iter });
    }
    let n = a.order();
    let mut v = vec![1.0 / n as f64; n];
    let mut av = vec![0.0; n];
    let mut residual = f64::INFINITY;
    for iteration in 1..=max_iter {
        multiply(a, &v, &mut av);
        let ratios: Vec<f64> = av.iter().zip(&v).map(|(x, y)| x / y).collect();
        let lambda = ratios.iter().sum::<f64>() / n as f64;
        residual = ratios
            .iter()
            .map(|r| (r - lambda).abs())
            .fold(0.0, f64::max)
            / lambda;
        if residual <= tol {
            return Ok(EigenSolution {
                lambda_max: lambda,
                vector: PriorityVector {
                    weights: v,
                    normalization: Normalization::SumOne,
                },
                iterations: iteration,
                residual,
            });
        }
        let total: f64 = av.iter().sum();
        for (vi, x) in v.iter_mut().zip(&av) {
            *vi = x / total;
        }
    }
    Err(EigenError::NoConvergence {
        residual,
        iterations: max_iter,
    })
}

/// [`principal_eigen`] with the default tolerance and iteration cap.
pub fn perron(a: &PairwiseComparisonMatrix) -> Result<EigenSolution, EigenError> {
    principal_eigen(a, EIGEN_TOL, EIGEN_MAX_ITER)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    // det(A - λI) for a 3x3 matrix, bisected on an interval that brackets
    // the largest root.
    fn perron_root_by_bisection(a: &PairwiseComparisonMatrix) -> f64 {
        let det = |l: f64| {
            let m = |i: usize, j: usize| a.get(i, j) - if i == j { l } else { 0.0 };
            m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
                - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
                + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
        };
        let row_max = (0..3)
            .map(|i| (0..3).map(|j| a.get(i, j)).sum::<f64>())
            .fold(0.0, f64::max);
        let (mut lo, mut hi) = (3.0, row_max + 1.0);
        // det(A - λI) -> -∞ as λ -> ∞ and is >= 0 at λ = n
        assert!(det(hi) < 0.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if det(mid) < 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn geometric_means() {
        let a = PairwiseComparisonMatrix::from_upper(3, vec![2.0, 4.0, 2.0]).unwrap();
        assert!(close(
            geometric_mean_weights(&a).weights(),
            &[2.0, 1.0, 0.5],
            1e-12
        ));

        let ni_example = PairwiseComparisonMatrix::from_upper(
            4,
            vec![1.0 / 3.0, 1.0 / 3.0, 1.0 / 9.0, 1.0, 1.0 / 3.0, 1.0 / 3.0],
        )
        .unwrap();
        let w = geometric_mean_weights(&ni_example);
        assert!(close(w.weights(), &[1.0 / 3.0, 1.0, 1.0, 3.0], 1e-12));
        assert_eq!(w.normalization(), Normalization::Raw);

        let ones = PairwiseComparisonMatrix::ones(5).unwrap();
        assert!(close(
            geometric_mean_weights(&ones).weights(),
            &[1.0; 5],
            0.0
        ));
    }

    #[test]
    fn sum_one_normalization() {
        let w = PriorityVector::raw(vec![2.0, 1.0, 0.5]).normalize_sum_one();
        assert!(close(
            w.weights(),
            &[4.0 / 7.0, 2.0 / 7.0, 1.0 / 7.0],
            1e-15
        ));
        assert_eq!(w.normalization(), Normalization::SumOne);
        assert!(close(w.normalize_sum_one().weights(), w.weights(), 1e-15));
        let u = PriorityVector::raw(vec![1.0; 4]).normalize_sum_one();
        assert!(close(u.weights(), &[0.25; 4], 0.0));
    }

    #[test]
    fn perron_root_of_consistent_matrix_is_order() {
        let a = PairwiseComparisonMatrix::from_weights(&[5.0, 1.0, 2.5, 0.4]).unwrap();
        let eig = perron(&a).unwrap();
        assert!((eig.lambda_max - 4.0).abs() < 1e-9);
        assert!(eig.residual <= EIGEN_TOL);
    }

    #[test]
    fn perron_root_exceeds_order_when_inconsistent() {
        let cyclic = PairwiseComparisonMatrix::from_upper(3, vec![2.0, 0.5, 2.0]).unwrap();
        let eig = perron(&cyclic).unwrap();
        assert!(eig.lambda_max > 3.0);
        assert!((eig.lambda_max - perron_root_by_bisection(&cyclic)).abs() < 1e-8);
    }

    #[test]
    fn perron_root_matches_characteristic_polynomial() {
        let a2 = PairwiseComparisonMatrix::from_upper(3, vec![2.0, 9.0, 2.0]).unwrap();
        let oracle = perron_root_by_bisection(&a2);
        let eig = perron(&a2).unwrap();
        assert!(
            (eig.lambda_max - oracle).abs() < 1e-8,
            "{} vs {}",
            eig.lambda_max,
            oracle
        );
        // closed form for 3x3: 1 + x^(1/3) + x^(-1/3) with x = a13 / (a12 a23)
        let x: f64 = 9.0 / 4.0;
        assert!((oracle - (1.0 + x.cbrt() + 1.0 / x.cbrt())).abs() < 1e-10);
    }

    #[test]
    fn rejects_bad_settings_and_reports_nonconvergence() {
        let a = PairwiseComparisonMatrix::from_upper(4, vec![9.0, 1.0 / 9.0, 3.0, 9.0, 0.5, 7.0])
            .unwrap();
        assert!(matches!(
            principal_eigen(&a, 0.0, 10),
            Err(EigenError::InvalidSettings { .. })
        ));
        assert!(matches!(
            principal_eigen(&a, 1e-12, 0),
            Err(EigenError::InvalidSettings { .. })
        ));
        match principal_eigen(&a, 1e-14, 2) {
            Err(EigenError::NoConvergence {
                iterations,
                residual,
            }) => {
                assert_eq!(iterations, 2);
                assert!(residual > 1e-14);
            }
            other => panic!("expected NoConvergence, got {other:?}"),
        }
    }
}
