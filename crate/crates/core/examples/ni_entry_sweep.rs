// NI on a consistent 4x4 matrix as a_14 moves across [1/9, 9]: the value
// at a_14 = 2 is below the value at a_14 = 0.5 although 2 is further from
// the consistent value 1/9.

use std::error::Error;

use pcm_axioms::axioms::{geomspace, sweep_entry};
use pcm_axioms::{catalog, IndexDescriptor};

pub fn run() -> Result<(), Box<dyn Error>> {
    let a = catalog::ni_counterexample();
    let ni = IndexDescriptor::ni(9.0);
    let mut grid = geomspace(1.0 / 9.0, 9.0, 41);
    grid.extend([0.5, 2.0]);
    grid.sort_by(f64::total_cmp);
    grid.dedup();

    let curve = sweep_entry(&ni, &a, 0, 3, &grid)?;
    print!("{}", curve.to_csv());
    let (low, high) = (curve.value_at(0.5).unwrap(), curve.value_at(2.0).unwrap());
    println!("# NI(a_14 = 0.5) = {low}, NI(a_14 = 2) = {high}");
    assert!(low > high);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
