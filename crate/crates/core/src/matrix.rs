//! Positive reciprocal matrices and the transformations the axioms are
//! phrased in terms of.
//!
//! Only the strict upper triangle is stored. The diagonal is implicitly one
//! and every lower entry is derived as the reciprocal of its mirror, so a
//! constructed matrix cannot drift out of reciprocity.

use std::fmt;

use thiserror::Error;

/// Default relative tolerance used when ingesting full grids.
pub const DEFAULT_RECIPROCITY_TOL: f64 = 1e-6;

#[derive(Error, Debug)]
pub enum MatrixError {
    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("matrix order {0} is too small, at least 3 alternatives are required")]
    OrderTooSmall(usize),
    #[error("entry ({row}, {col}) = {value} is not a finite positive number")]
    NonPositiveEntry { row: usize, col: usize, value: f64 },
    #[error("entries ({row}, {col}) and ({col}, {row}) are not reciprocal: product {product}")]
    ReciprocityViolated {
        row: usize,
        col: usize,
        product: f64,
    },
    #[error("diagonal entry {index} = {value} is not 1")]
    DiagonalNotOne { index: usize, value: f64 },
    #[error("order mismatch: matrix has order {matrix}, operand has order {operand}")]
    OrderMismatch { matrix: usize, operand: usize },
    #[error("index {index} is out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("cannot perturb diagonal entry ({0}, {0})")]
    DiagonalPerturbation(usize),
    #[error("exponent {0} is not finite")]
    InvalidExponent(f64),
    #[error("scale bound sigma = {0} must be finite and greater than 1")]
    InvalidSigma(f64),
    #[error("not a permutation of 0..{order}: {image:?}")]
    InvalidPermutation { order: usize, image: Vec<usize> },
    #[error("parse error on line {line}: {message}")]
    ParseError { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl MatrixError {
    /// Stable identifier of the failure, used by the command line front end.
    pub fn name(&self) -> &'static str {
        match self {
            MatrixError::NotSquare { .. } => "NotSquare",
            MatrixError::OrderTooSmall(_) => "OrderTooSmall",
            MatrixError::NonPositiveEntry { .. } => "NonPositiveEntry",
            MatrixError::ReciprocityViolated { .. } => "ReciprocityViolated",
            MatrixError::DiagonalNotOne { .. } => "DiagonalNotOne",
            MatrixError::OrderMismatch { .. } => "OrderMismatch",
            MatrixError::IndexOutOfRange { .. } => "IndexOutOfRange",
            MatrixError::DiagonalPerturbation(_) => "DiagonalPerturbation",
            MatrixError::InvalidExponent(_) => "InvalidExponent",
            MatrixError::InvalidSigma(_) => "InvalidSigma",
            MatrixError::InvalidPermutation { .. } => "InvalidPermutation",
            MatrixError::ParseError { .. } => "ParseError",
            MatrixError::Io(_) => "IoError",
        }
    }
}

/// A positive reciprocal square matrix of order at least 3.
#[derive(Clone, Debug, PartialEq)]
pub struct PairwiseComparisonMatrix {
    order: usize,
    upper: Vec<f64>,
}

fn check_entry(row: usize, col: usize, value: f64) -> Result<(), MatrixError> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(MatrixError::NonPositiveEntry { row, col, value })
    }
}

fn check_order(n: usize) -> Result<(), MatrixError> {
    if n < 3 {
        Err(MatrixError::OrderTooSmall(n))
    } else {
        Ok(())
    }
}

impl PairwiseComparisonMatrix {
    /// Validates a full grid and keeps its upper triangle.
    ///
    /// The lower triangle and the diagonal are only checked against
    /// `reciprocity_tol` (relative) and then discarded.
    pub fn from_rows<R: AsRef<[f64]>>(
        rows: &[R],
        reciprocity_tol: f64,
    ) -> Result<Self, MatrixError> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            let len = row.as_ref().len();
            if len != n {
                return Err(MatrixError::NotSquare {
                    row: i,
                    len,
                    expected: n,
                });
            }
        }
        check_order(n)?;
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.as_ref().iter().enumerate() {
                check_entry(i, j, v)?;
            }
        }
        for i in 0..n {
            let d = rows[i].as_ref()[i];
            if (d - 1.0).abs() > reciprocity_tol {
                return Err(MatrixError::DiagonalNotOne { index: i, value: d });
            }
        }
        let mut upper = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in (i + 1)..n {
                let a = rows[i].as_ref()[j];
                let product = a * rows[j].as_ref()[i];
                if (product - 1.0).abs() > reciprocity_tol {
                    return Err(MatrixError::ReciprocityViolated {
                        row: i,
                        col: j,
                        product,
                    });
                }
                upper.push(a);
            }
        }
        Ok(Self { order: n, upper })
    }

    /// Builds a matrix from its strict upper triangle in row-major order.
    pub fn from_upper(order: usize, upper: Vec<f64>) -> Result<Self, MatrixError> {
        check_order(order)?;
        let expected = order * (order - 1) / 2;
        if upper.len() != expected {
            return Err(MatrixError::NotSquare {
                row: 0,
                len: upper.len(),
                expected,
            });
        }
        let m = Self { order, upper };
        for (i, j, a) in m.upper_entries() {
            check_entry(i, j, a)?;
        }
        Ok(m)
    }

    /// The consistent matrix `(w_i / w_j)`.
    pub fn from_weights(weights: &[f64]) -> Result<Self, MatrixError> {
        let n = weights.len();
        check_order(n)?;
        for (i, &w) in weights.iter().enumerate() {
            check_entry(i, i, w)?;
        }
        let mut upper = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in (i + 1)..n {
                upper.push(weights[i] / weights[j]);
            }
        }
        Self::from_upper(n, upper)
    }

    /// The indifference matrix, every entry equal to one.
    pub fn ones(order: usize) -> Result<Self, MatrixError> {
        check_order(order)?;
        Ok(Self {
            order,
            upper: vec![1.0; order * (order - 1) / 2],
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Upper triangle in row-major order.
    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    #[inline]
    fn slot(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.order);
        i * self.order - i * (i + 1) / 2 + (j - i - 1)
    }

    /// Entry `a_ij`. Panics if either index is out of range.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        assert!(i < self.order && j < self.order, "index out of range");
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => 1.0,
            std::cmp::Ordering::Less => self.upper[self.slot(i, j)],
            std::cmp::Ordering::Greater => 1.0 / self.upper[self.slot(j, i)],
        }
    }

    /// Iterates `(i, j, a_ij)` over the strict upper triangle.
    pub fn upper_entries(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        let n = self.order;
        (0..n)
            .flat_map(move |i| ((i + 1)..n).map(move |j| (i, j)))
            .zip(self.upper.iter().copied())
            .map(|((i, j), a)| (i, j, a))
    }

    /// Full grid, row by row.
    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// Column sums `s_j`.
    pub fn column_sums(&self) -> Vec<f64> {
        (0..self.order)
            .map(|j| (0..self.order).map(|i| self.get(i, j)).sum())
            .collect()
    }

    /// True when every triad satisfies `|a_ik / (a_ij a_jk) - 1| <= tol`.
    pub fn is_consistent(&self, tol: f64) -> bool {
        self.triads().all(|(i, j, k)| {
            let ratio = self.get(i, k) / (self.get(i, j) * self.get(j, k));
            (ratio - 1.0).abs() <= tol
        })
    }

    /// All index triples `i < j < k` in lexicographic order.
    pub fn triads(&self) -> impl Iterator<Item = (usize, usize, usize)> {
        let n = self.order;
        (0..n)
            .flat_map(move |i| ((i + 1)..n).flat_map(move |j| ((j + 1)..n).map(move |k| (i, j, k))))
    }

    /// `P A P^T`: entry `(i, j)` of the result is `a_{π⁻¹(i) π⁻¹(j)}`.
    pub fn permute(&self, perm: &PermutationMap) -> Result<Self, MatrixError> {
        if perm.order() != self.order {
            return Err(MatrixError::OrderMismatch {
                matrix: self.order,
                operand: perm.order(),
            });
        }
        let inv = perm.inverse();
        let n = self.order;
        let mut upper = Vec::with_capacity(self.upper.len());
        for i in 0..n {
            for j in (i + 1)..n {
                upper.push(self.get(inv.image[i], inv.image[j]));
            }
        }
        Ok(Self { order: n, upper })
    }

    /// Entry-wise power `A(b) = (a_ij^b)`.
    ///
    /// Fails only when `b` is not finite or an entry over- or underflows.
    pub fn hadamard_power(&self, b: f64) -> Result<Self, MatrixError> {
        if !b.is_finite() {
            return Err(MatrixError::InvalidExponent(b));
        }
        let upper = self.upper.iter().map(|a| a.powf(b)).collect();
        Self::from_upper(self.order, upper)
    }

    /// `A_pq(δ)`: `a_pq ↦ a_pq^δ` and `a_qp ↦ a_qp^δ`, everything else kept.
    pub fn perturb_entry(&self, spec: &PerturbationSpec) -> Result<Self, MatrixError> {
        let (p, q) = self.check_off_diagonal(spec.p, spec.q)?;
        let (lo, hi) = if p < q { (p, q) } else { (q, p) };
        let slot = self.slot(lo, hi);
        let value = self.upper[slot].powf(spec.delta);
        check_entry(lo, hi, value)?;
        let mut upper = self.upper.clone();
        upper[slot] = value;
        Ok(Self {
            order: self.order,
            upper,
        })
    }

    /// Copy with `a_pq = value` and `a_qp = 1 / value`.
    pub fn with_entry(&self, p: usize, q: usize, value: f64) -> Result<Self, MatrixError> {
        let (p, q) = self.check_off_diagonal(p, q)?;
        check_entry(p, q, value)?;
        let mut upper = self.upper.clone();
        if p < q {
            upper[self.slot(p, q)] = value;
        } else {
            let stored = 1.0 / value;
            check_entry(q, p, stored)?;
            upper[self.slot(q, p)] = stored;
        }
        Ok(Self {
            order: self.order,
            upper,
        })
    }

    fn check_off_diagonal(&self, p: usize, q: usize) -> Result<(usize, usize), MatrixError> {
        for index in [p, q] {
            if index >= self.order {
                return Err(MatrixError::IndexOutOfRange {
                    index,
                    order: self.order,
                });
            }
        }
        if p == q {
            return Err(MatrixError::DiagonalPerturbation(p));
        }
        Ok((p, q))
    }
}

impl fmt::Display for PairwiseComparisonMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.order {
            let row: Vec<String> = (0..self.order)
                .map(|j| self.get(i, j).to_string())
                .collect();
            writeln!(f, "{}", row.join(","))?;
        }
        Ok(())
    }
}

/// A relabelling of alternatives: alternative `k` moves to position `image[k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationMap {
    image: Vec<usize>,
}

impl PermutationMap {
    pub fn new(image: Vec<usize>) -> Result<Self, MatrixError> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &k in &image {
            if k >= n || seen[k] {
                return Err(MatrixError::InvalidPermutation { order: n, image });
            }
            seen[k] = true;
        }
        Ok(Self { image })
    }

    pub fn identity(order: usize) -> Self {
        Self {
            image: (0..order).collect(),
        }
    }

    /// Transposition of positions `i` and `j`.
    pub fn swap(order: usize, i: usize, j: usize) -> Result<Self, MatrixError> {
        for index in [i, j] {
            if index >= order {
                return Err(MatrixError::IndexOutOfRange { index, order });
            }
        }
        let mut image: Vec<usize> = (0..order).collect();
        image.swap(i, j);
        Ok(Self { image })
    }

    pub fn order(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0; self.image.len()];
        for (k, &target) in self.image.iter().enumerate() {
            image[target] = k;
        }
        Self { image }
    }
}

impl fmt::Display for PermutationMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.image.iter().map(|k| k.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Which comparison to intensify and by which exponent.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PerturbationSpec {
    pub p: usize,
    pub q: usize,
    pub delta: f64,
}

impl PerturbationSpec {
    /// `delta` may be any finite real; negative exponents push the entry past
    /// indifference, which is where several indices lose monotonicity.
    pub fn new(p: usize, q: usize, delta: f64) -> Result<Self, MatrixError> {
        if p == q {
            return Err(MatrixError::DiagonalPerturbation(p));
        }
        if !delta.is_finite() {
            return Err(MatrixError::InvalidExponent(delta));
        }
        Ok(Self { p, q, delta })
    }
}
