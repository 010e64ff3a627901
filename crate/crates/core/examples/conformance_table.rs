// The axiom conformance table for the seven published indices and for the
// four indices that separate the axioms.

use std::error::Error;

use pcm_axioms::axioms::{conformance_table, Axiom, AxiomConfig, Counterexamples};
use pcm_axioms::IndexDescriptor;

pub fn run() -> Result<(), Box<dyn Error>> {
    let config = AxiomConfig::default();
    let seeds = Counterexamples::published();

    let table = conformance_table(
        &IndexDescriptor::published_set(),
        &Axiom::ALL,
        &config,
        &seeds,
    )?;
    print!("{}", table.render_plain());
    assert!(table.mismatches().is_empty());

    let table = conformance_table(
        &IndexDescriptor::independence_set(),
        &Axiom::ALL,
        &config,
        &seeds,
    )?;
    print!("{}", table.render_plain());
    assert!(table.mismatches().is_empty());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
