// Geometric-mean and principal-eigenvector priorities.

use std::error::Error;

use pcm_axioms::priorities::{geometric_mean_weights, perron};
use pcm_axioms::sample::random_consistent;
use pcm_axioms::{catalog, RngSeed};

pub fn run() -> Result<(), Box<dyn Error>> {
    let a = catalog::doubling_chain_strong();
    let gm = geometric_mean_weights(&a).normalize_sum_one();
    let eig = perron(&a)?;
    println!("geometric mean: {:?}", gm.weights());
    println!("eigenvector:    {:?}", eig.vector.weights());
    println!(
        "lambda_max = {} after {} iterations",
        eig.lambda_max, eig.iterations
    );

    // on consistent matrices both methods recover the generating weights
    let c = random_consistent(6, 9.0, RngSeed(7))?;
    let gm = geometric_mean_weights(&c).normalize_sum_one();
    let eig = perron(&c)?;
    let gap = gm
        .weights()
        .iter()
        .zip(eig.vector.weights())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max);
    println!(
        "consistent 6x6: lambda_max = {}, largest weight gap {gap:e}",
        eig.lambda_max
    );
    assert!(gap < 1e-8);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
