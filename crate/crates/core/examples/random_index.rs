// Monte Carlo Random Index values and the consistency ratio built on them.

use std::error::Error;

use pcm_axioms::indices::{cr, estimate_random_index, RandomIndexTable};
use pcm_axioms::io::format_random_index_table;
use pcm_axioms::{catalog, RngSeed};

pub fn run() -> Result<(), Box<dyn Error>> {
    for n in 3..=7 {
        let est = estimate_random_index(n, 9.0, 4_000, RngSeed(1))?;
        println!("n={n}  RI={:.4} +/- {:.4}", est.value, est.standard_error);
    }
    let table = RandomIndexTable::monte_carlo(&[3, 4, 5], 9.0, 4_000, RngSeed(1))?;
    print!("{}", format_random_index_table(&table));
    println!(
        "CR of the relabelling example: {:.4}",
        cr(&catalog::relabelling_example(), &table)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
