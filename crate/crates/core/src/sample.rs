//! Seeded generators for consistent and arbitrary comparison matrices.

use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::{MatrixError, PairwiseComparisonMatrix, PermutationMap};

/// Seed for every random draw in the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RngSeed(pub u64);

impl RngSeed {
    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }

    /// Independent child seed for stream `stream`.
    ///
    /// Sample `k` of a run draws from `seed.substream(k)`, so results do not
    /// depend on the order in which samples are evaluated.
    pub fn substream(self, stream: u64) -> RngSeed {
        let mut rng = self.rng();
        rng.set_stream(stream);
        RngSeed(rng.next_u64())
    }
}

fn check_sigma(sigma: f64) -> Result<f64, MatrixError> {
    if sigma.is_finite() && sigma > 1.0 {
        Ok(sigma.ln())
    } else {
        Err(MatrixError::InvalidSigma(sigma))
    }
}

/// Consistent matrix `(w_i / w_j)` with `ln w_i` uniform on `[0, ln σ]`,
/// so every entry lies in `[1/σ, σ]`.
pub fn random_consistent_with<R: Rng + ?Sized>(
    n: usize,
    sigma: f64,
    rng: &mut R,
) -> Result<PairwiseComparisonMatrix, MatrixError> {
    let log_sigma = check_sigma(sigma)?;
    if n < 3 {
        return Err(MatrixError::OrderTooSmall(n));
    }
    let log_w: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..=log_sigma)).collect();
    let mut upper = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            upper.push((log_w[i] - log_w[j]).exp());
        }
    }
    PairwiseComparisonMatrix::from_upper(n, upper)
}

pub fn random_consistent(
    n: usize,
    sigma: f64,
    seed: RngSeed,
) -> Result<PairwiseComparisonMatrix, MatrixError> {
    random_consistent_with(n, sigma, &mut seed.rng())
}

/// Matrix whose upper entries are independent and log-uniform on `[1/σ, σ]`.
pub fn random_pcm_with<R: Rng + ?Sized>(
    n: usize,
    sigma: f64,
    rng: &mut R,
) -> Result<PairwiseComparisonMatrix, MatrixError> {
    let log_sigma = check_sigma(sigma)?;
    if n < 3 {
        return Err(MatrixError::OrderTooSmall(n));
    }
    let upper = (0..n * (n - 1) / 2)
        .map(|_| rng.gen_range(-log_sigma..=log_sigma).exp())
        .collect();
    PairwiseComparisonMatrix::from_upper(n, upper)
}

pub fn random_pcm(
    n: usize,
    sigma: f64,
    seed: RngSeed,
) -> Result<PairwiseComparisonMatrix, MatrixError> {
    random_pcm_with(n, sigma, &mut seed.rng())
}

/// Uniformly random relabelling of `n` alternatives.
pub fn random_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> PermutationMap {
    let mut image: Vec<usize> = (0..n).collect();
    image.shuffle(rng);
    PermutationMap::new(image).expect("shuffle of 0..n is a bijection")
}
