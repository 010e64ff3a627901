// Building a comparison matrix and applying the three transformations the
// axioms are stated in terms of: relabelling, entry-wise powers and
// single-entry perturbation.

use std::error::Error;

use pcm_axioms::{catalog, PairwiseComparisonMatrix, PermutationMap, PerturbationSpec};

pub fn run() -> Result<(), Box<dyn Error>> {
    let a = PairwiseComparisonMatrix::from_rows(
        &[
            vec![1.0, 2.0, 5.0],
            vec![0.5, 1.0, 2.0],
            vec![0.2, 0.5, 1.0],
        ],
        1e-9,
    )?;
    println!("A =\n{a}");

    // swap the second and third alternatives
    let swapped = a.permute(&PermutationMap::swap(3, 1, 2)?)?;
    println!("P A P^T =\n{swapped}");
    assert_eq!(swapped.get(0, 1), 5.0);

    let cyclic = catalog::cyclic_triad();
    let cubed = cyclic.hadamard_power(3.0)?;
    println!("A(3) =\n{cubed}");
    assert_eq!(cubed.get(0, 2), 0.125);

    let chain = catalog::doubling_chain();
    println!("consistent: {}", chain.is_consistent(1e-12));
    let pushed = chain.perturb_entry(&PerturbationSpec::new(0, 2, 1.5)?)?;
    println!("A_13(1.5) =\n{pushed}");
    println!(
        "consistent after perturbation: {}",
        pushed.is_consistent(1e-9)
    );

    // rejected inputs carry a stable error name
    let err =
        PairwiseComparisonMatrix::from_rows(&[vec![1.0, 2.0], vec![0.4, 1.0]], 1e-6).unwrap_err();
    println!("2x2 input: {}", err.name());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
