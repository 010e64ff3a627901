use std::fmt::Write as _;

use crate::indices::{IndexDescriptor, IndexError};
use crate::matrix::PairwiseComparisonMatrix;

use super::AxiomError;

/// Index values along a one-parameter family of matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepCurve {
    pub parameter_name: String,
    /// Strictly increasing in the parameter; every value is finite.
    pub points: Vec<(f64, f64)>,
}

impl SweepCurve {
    /// Two-column CSV with a `param,value` header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("param,value\n");
        for (x, y) in &self.points {
            let _ = writeln!(out, "{x},{y}");
        }
        out
    }

    pub fn values(&self) -> Vec<f64> {
        self.points.iter().map(|p| p.1).collect()
    }

    /// Value at the point whose parameter equals `x` exactly.
    pub fn value_at(&self, x: f64) -> Option<f64> {
        self.points.iter().find(|p| p.0 == x).map(|p| p.1)
    }
}

fn check_grid(grid: &[f64], positive: bool) -> Result<(), AxiomError> {
    if grid.is_empty() {
        return Err(AxiomError::InvalidConfig("sweep grid is empty".into()));
    }
    if grid
        .iter()
        .any(|v| !v.is_finite() || (positive && *v <= 0.0))
    {
        return Err(AxiomError::InvalidConfig(if positive {
            "sweep values must be finite and positive".into()
        } else {
            "sweep values must be finite".into()
        }));
    }
    if !grid.windows(2).all(|w| w[0] < w[1]) {
        return Err(AxiomError::InvalidConfig(
            "sweep values must be strictly increasing".into(),
        ));
    }
    Ok(())
}

fn finite(index: &IndexDescriptor, a: &PairwiseComparisonMatrix) -> Result<f64, AxiomError> {
    let v = index.evaluate(a)?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(AxiomError::InvalidConfig(format!(
            "{} is not finite on the sweep",
            index.name()
        )))
    }
}

/// Sets `a_pq = v` (and `a_qp = 1/v`) for each value and records the index.
pub fn sweep_entry(
    index: &IndexDescriptor,
    a: &PairwiseComparisonMatrix,
    p: usize,
    q: usize,
    values: &[f64],
) -> Result<SweepCurve, AxiomError> {
    check_grid(values, true)?;
    let points = values
        .iter()
        .map(|&v| {
            let m = a.with_entry(p, q, v).map_err(IndexError::from)?;
            Ok((v, finite(index, &m)?))
        })
        .collect::<Result<_, AxiomError>>()?;
    Ok(SweepCurve {
        parameter_name: format!("a_{}{}", p + 1, q + 1),
        points,
    })
}

/// Records the index of `A(b)` for each `b`.
pub fn sweep_power(
    index: &IndexDescriptor,
    a: &PairwiseComparisonMatrix,
    b_grid: &[f64],
) -> Result<SweepCurve, AxiomError> {
    check_grid(b_grid, false)?;
    let points = b_grid
        .iter()
        .map(|&b| Ok((b, finite(index, &a.hadamard_power(b)?)?)))
        .collect::<Result<_, AxiomError>>()?;
    Ok(SweepCurve {
        parameter_name: "b".into(),
        points,
    })
}

/// `count` evenly spaced values from `lo` to `hi` inclusive.
pub fn linspace(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    match count {
        0 => vec![],
        1 => vec![lo],
        _ => {
            let step = (hi - lo) / (count - 1) as f64;
            (0..count)
                .map(|k| {
                    if k == count - 1 {
                        hi
                    } else {
                        lo + step * k as f64
                    }
                })
                .collect()
        }
    }
}

/// `count` values from `lo` to `hi` inclusive, evenly spaced in logarithm.
pub fn geomspace(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    let mut out: Vec<f64> = linspace(lo.ln(), hi.ln(), count)
        .into_iter()
        .map(f64::exp)
        .collect();
    // pin the endpoints against exp(ln x) round-off
    if let Some(first) = out.first_mut() {
        *first = lo;
    }
    if out.len() > 1 {
        let n = out.len();
        out[n - 1] = hi;
    }
    out
}
