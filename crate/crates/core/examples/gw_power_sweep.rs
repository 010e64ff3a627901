// GW along A(b) for a matrix with one dominant row: the column-normalized
// matrix converges to the geometric-mean weights and GW goes to zero.

use std::error::Error;

use pcm_axioms::axioms::{linspace, sweep_power};
use pcm_axioms::{catalog, IndexDescriptor};

pub fn run() -> Result<(), Box<dyn Error>> {
    let curve = sweep_power(
        &IndexDescriptor::gw(),
        &catalog::gw_counterexample(),
        &linspace(1.0, 30.0, 59),
    )?;
    print!("{}", curve.to_csv());
    let last = *curve.values().last().unwrap();
    println!("# GW(A(30)) = {last:e}");
    assert!(last < 1e-3);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
