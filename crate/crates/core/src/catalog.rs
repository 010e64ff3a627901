//! Worked matrices from the literature on inconsistency axioms, used as
//! fixtures and as seeded counterexamples.

use crate::matrix::PairwiseComparisonMatrix;

fn upper(order: usize, entries: &[f64]) -> PairwiseComparisonMatrix {
    PairwiseComparisonMatrix::from_upper(order, entries.to_vec()).expect("catalog matrix is valid")
}

/// `[[1,2,5],[1/2,1,2],[1/5,1/2,1]]`, the relabelling illustration.
pub fn relabelling_example() -> PairwiseComparisonMatrix {
    upper(3, &[2.0, 5.0, 2.0])
}

/// `[[1,2,1/2],[1/2,1,2],[2,1/2,1]]`: a single cyclic triad.
pub fn cyclic_triad() -> PairwiseComparisonMatrix {
    upper(3, &[2.0, 0.5, 2.0])
}

/// `[[1,2,4],[1/2,1,2],[1/4,1/2,1]]`, consistent.
pub fn doubling_chain() -> PairwiseComparisonMatrix {
    upper(3, &[2.0, 4.0, 2.0])
}

/// [`doubling_chain`] with `a_13 = 5`.
pub fn doubling_chain_mild() -> PairwiseComparisonMatrix {
    upper(3, &[2.0, 5.0, 2.0])
}

/// [`doubling_chain`] with `a_13 = 9`.
pub fn doubling_chain_strong() -> PairwiseComparisonMatrix {
    upper(3, &[2.0, 9.0, 2.0])
}

/// Consistent 4x4 matrix with weights `(1/3, 1, 1, 3)`; moving `a_14`
/// away from `1/9` breaks single-comparison monotonicity of `NI`.
pub fn ni_counterexample() -> PairwiseComparisonMatrix {
    upper(
        4,
        &[1.0 / 3.0, 1.0 / 3.0, 1.0 / 9.0, 1.0, 1.0 / 3.0, 1.0 / 3.0],
    )
}

/// Inconsistent 4x4 matrix whose third column is below one off the
/// diagonal; `HCI(A(b))` rises and then decays to zero.
pub fn hci_counterexample() -> PairwiseComparisonMatrix {
    upper(4, &[4.0, 0.5, 2.0, 0.25, 2.0, 2.0])
}

/// Inconsistent 4x4 matrix whose third row dominates every column;
/// `GW(A(b))` decays to zero.
pub fn gw_counterexample() -> PairwiseComparisonMatrix {
    upper(4, &[3.0, 0.25, 2.0, 1.0 / 7.0, 2.0, 6.0])
}

/// Consistent matrix with weights `(9, 3, 1)`. Shrinking `a_13` toward one
/// lowers the entry spread faster than `CI*^0.1` grows, which breaks
/// single-comparison monotonicity of `I_4` for small `ε`.
pub fn spread_counterexample() -> PairwiseComparisonMatrix {
    upper(3, &[3.0, 9.0, 3.0])
}
