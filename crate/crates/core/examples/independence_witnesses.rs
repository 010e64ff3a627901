// The four indices that each break exactly one axiom, with the witness
// each check produces and its replay.

use std::error::Error;

use pcm_axioms::axioms::{run_check, Axiom, AxiomConfig, Counterexamples};
use pcm_axioms::IndexDescriptor;

pub fn run() -> Result<(), Box<dyn Error>> {
    let config = AxiomConfig::default();
    let seeds = Counterexamples::published();
    let cases = [
        (IndexDescriptor::i1(), Axiom::A1),
        (IndexDescriptor::i2(None), Axiom::A2),
        (IndexDescriptor::i4(0.1), Axiom::A4),
        (IndexDescriptor::i5(1e-9), Axiom::A5),
    ];
    for (index, axiom) in cases {
        let report = run_check(axiom, &index, &config, &seeds)?;
        print!("{report}");
        let witness = report.witness.as_ref().ok_or("expected a violation")?;
        let (_, margin) = witness.replay(&index, &config)?;
        assert!((margin - witness.margin).abs() <= 1e-12);
    }
    // i1 is continuous and monotone under intensification
    for axiom in [Axiom::A3, Axiom::A5] {
        let report = run_check(axiom, &IndexDescriptor::i1(), &config, &seeds)?;
        println!(
            "i1 {axiom}: {} after {} samples",
            report.verdict, report.samples_run
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
