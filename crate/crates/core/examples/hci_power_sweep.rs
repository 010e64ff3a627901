// HCI along A(b): it first rises above HCI(A) and then decays toward zero,
// so intensifying every judgement can make the matrix look more
// consistent.

use std::error::Error;

use pcm_axioms::axioms::{linspace, sweep_power};
use pcm_axioms::{catalog, IndexDescriptor};

pub fn run() -> Result<(), Box<dyn Error>> {
    let curve = sweep_power(
        &IndexDescriptor::hci(),
        &catalog::hci_counterexample(),
        &linspace(1.0, 20.0, 100),
    )?;
    print!("{}", curve.to_csv());
    let values = curve.values();
    let peak = values.iter().copied().fold(f64::MIN, f64::max);
    println!(
        "# HCI(A) = {}, peak {peak}, HCI(A(20)) = {}",
        values[0],
        values[values.len() - 1]
    );
    assert!(peak > values[0]);
    assert!(values[values.len() - 1] < 1e-3);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
