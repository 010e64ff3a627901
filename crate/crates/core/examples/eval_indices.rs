// Every index on one matrix, looked up by name the way the CLI does it.

use std::error::Error;

use pcm_axioms::indices::{IndexOptions, Provenance, RandomIndexTable, INDEX_NAMES};
use pcm_axioms::{catalog, IndexDescriptor};

pub fn run() -> Result<(), Box<dyn Error>> {
    let options = IndexOptions {
        sigma: Some(9.0),
        random_index: Some(RandomIndexTable::new(
            [(3, 0.52), (4, 0.89)],
            Provenance::UserSupplied,
        )?),
        ..Default::default()
    };
    for a in [catalog::relabelling_example(), catalog::ni_counterexample()] {
        println!("{a}");
        for name in INDEX_NAMES {
            let index = IndexDescriptor::by_name(name, &options)?;
            let v = index.evaluate(&a)?;
            println!("  {name:<8} {v:.6}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
