use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::indices::IndexDescriptor;
use crate::matrix::{MatrixError, PairwiseComparisonMatrix, PerturbationSpec};
use crate::sample::{random_consistent_with, random_pcm_with, random_permutation};

use super::{
    scaled_tol, Axiom, AxiomConfig, AxiomError, AxiomReport, Counterexamples, SeededPerturbation,
    Transform, Verdict, Witness,
};

/// Result of examining one sample ordinal.
#[derive(Default)]
struct Outcome {
    witness: Option<Witness>,
    skipped: usize,
}

impl Outcome {
    fn eval(
        &mut self,
        index: &IndexDescriptor,
        a: Result<PairwiseComparisonMatrix, MatrixError>,
    ) -> Option<f64> {
        match a.ok().and_then(|a| index.evaluate(&a).ok()) {
            Some(v) if v.is_finite() => Some(v),
            _ => {
                self.skipped += 1;
                None
            }
        }
    }
}

/// Runs `probe` on every ordinal in parallel and keeps the witness with the
/// smallest ordinal.
fn run<F>(
    axiom: Axiom,
    index: &IndexDescriptor,
    config: &AxiomConfig,
    ordinals: usize,
    probe: F,
) -> Result<AxiomReport, AxiomError>
where
    F: Fn(usize, &mut ChaCha8Rng, &mut Outcome) + Sync,
{
    config.validate()?;
    let outcomes: Vec<Outcome> = (0..ordinals)
        .into_par_iter()
        .map(|k| {
            let mut rng = config.seed.substream(axiom.stream_tag() | k as u64).rng();
            let mut out = Outcome::default();
            probe(k, &mut rng, &mut out);
            out
        })
        .collect();
    let skipped = outcomes.iter().map(|o| o.skipped).sum();
    let witness = outcomes.into_iter().find_map(|o| o.witness);
    Ok(AxiomReport {
        axiom,
        index_name: index.name().to_string(),
        verdict: if witness.is_some() {
            Verdict::Violated
        } else {
            Verdict::NoViolationFound
        },
        samples_run: ordinals,
        skipped,
        witness,
        config_echo: config.echo(),
    })
}

fn order<R: Rng>(config: &AxiomConfig, rng: &mut R) -> usize {
    rng.gen_range(config.min_order..=config.max_order)
}

fn distinct_pair<R: Rng>(n: usize, rng: &mut R) -> (usize, usize) {
    let p = rng.gen_range(0..n);
    let q = (p + rng.gen_range(1..n)) % n;
    (p, q)
}

/// A1: `ν` on consistent matrices and only there.
pub fn check_a1(
    index: &IndexDescriptor,
    config: &AxiomConfig,
    extra_matrices: &[PairwiseComparisonMatrix],
) -> Result<AxiomReport, AxiomError> {
    let nu = index.nu();
    let membership = |a: &PairwiseComparisonMatrix, k: usize, out: &mut Outcome| {
        let consistent = a.is_consistent(config.consistency_tol);
        let Some(v) = out.eval(index, Ok(a.clone())) else {
            return;
        };
        let gap = (v - nu).abs();
        let margin = if consistent {
            gap - config.tol
        } else {
            config.tol - gap
        };
        if (consistent && gap > config.tol) || (!consistent && gap <= config.tol) {
            out.witness = Some(Witness {
                base_matrix: a.clone(),
                transform: Transform::Membership { consistent },
                observed: (nu, v),
                margin,
                ordinal: k,
            });
        }
    };
    let seeded = extra_matrices.len();
    run(
        Axiom::A1,
        index,
        config,
        seeded + config.samples,
        |k, rng, out| {
            if k < seeded {
                return membership(&extra_matrices[k], k, out);
            }
            let n = order(config, rng);
            let consistent =
                random_consistent_with(n, config.sigma, rng).expect("validated config");
            let random = random_pcm_with(n, config.sigma, rng).expect("validated config");
            membership(&consistent, k, out);
            if out.witness.is_none() && !random.is_consistent(config.consistency_tol) {
                membership(&random, k, out);
            }
        },
    )
}

/// A2: invariance under relabelling the alternatives.
pub fn check_a2(index: &IndexDescriptor, config: &AxiomConfig) -> Result<AxiomReport, AxiomError> {
    run(Axiom::A2, index, config, config.samples, |k, rng, out| {
        let n = order(config, rng);
        let a = random_pcm_with(n, config.sigma, rng).expect("validated config");
        let perm = random_permutation(n, rng);
        let Some(r) = out.eval(index, Ok(a.clone())) else {
            return;
        };
        let Some(c) = out.eval(index, a.permute(&perm)) else {
            return;
        };
        let margin = (c - r).abs() - scaled_tol(config.tol, r);
        if margin > 0.0 {
            out.witness = Some(Witness {
                base_matrix: a,
                transform: Transform::Permutation(perm),
                observed: (r, c),
                margin,
                ordinal: k,
            });
        }
    })
}

/// A3: `I(A(b)) >= I(A)` for every `b > 1`.
pub fn check_a3(
    index: &IndexDescriptor,
    config: &AxiomConfig,
    extra_matrices: &[PairwiseComparisonMatrix],
) -> Result<AxiomReport, AxiomError> {
    let seeded = extra_matrices.len();
    run(
        Axiom::A3,
        index,
        config,
        seeded + config.samples,
        |k, rng, out| {
            let a = if k < seeded {
                extra_matrices[k].clone()
            } else {
                let n = order(config, rng);
                random_pcm_with(n, config.sigma, rng).expect("validated config")
            };
            let Some(r) = out.eval(index, Ok(a.clone())) else {
                return;
            };
            for &b in &config.b_grid {
                let Some(c) = out.eval(index, a.hadamard_power(b)) else {
                    continue;
                };
                let margin = (r - c) - scaled_tol(config.tol, r);
                if margin > 0.0 {
                    out.witness = Some(Witness {
                        base_matrix: a,
                        transform: Transform::Power { b },
                        observed: (r, c),
                        margin,
                        ordinal: k,
                    });
                    return;
                }
            }
        },
    )
}

/// Scans one side of `δ = 1`, moving away from it, for a drop below the
/// running maximum.
fn scan_branch(
    index: &IndexDescriptor,
    config: &AxiomConfig,
    spec: &SeededPerturbation,
    deltas: &[f64],
    k: usize,
    out: &mut Outcome,
) {
    let mut best: Option<(f64, f64)> = None;
    for &delta in deltas {
        let perturbed = PerturbationSpec::new(spec.p, spec.q, delta)
            .and_then(|s| spec.matrix.perturb_entry(&s));
        let Some(v) = out.eval(index, perturbed) else {
            continue;
        };
        match best {
            Some((d0, top)) => {
                let margin = (top - v) - scaled_tol(config.tol, top);
                if margin > 0.0 {
                    out.witness = Some(Witness {
                        base_matrix: spec.matrix.clone(),
                        transform: Transform::PerturbationPair {
                            p: spec.p,
                            q: spec.q,
                            delta: d0,
                            delta_prime: delta,
                        },
                        observed: (top, v),
                        margin,
                        ordinal: k,
                    });
                    return;
                }
                if v > top {
                    best = Some((delta, v));
                }
            }
            None => best = Some((delta, v)),
        }
    }
}

fn check_perturbation(
    index: &IndexDescriptor,
    config: &AxiomConfig,
    spec: &SeededPerturbation,
    k: usize,
    out: &mut Outcome,
) {
    let grid = spec.deltas.as_deref().unwrap_or(&config.delta_grid);
    let above: Vec<f64> = grid.iter().copied().filter(|d| *d > 1.0).collect();
    let below: Vec<f64> = grid.iter().rev().copied().filter(|d| *d < 1.0).collect();
    scan_branch(index, config, spec, &above, k, out);
    if out.witness.is_none() {
        scan_branch(index, config, spec, &below, k, out);
    }
}

/// A4: on consistent matrices, pushing one comparison further from
/// indifference never lowers the index.
pub fn check_a4(
    index: &IndexDescriptor,
    config: &AxiomConfig,
    extra_specs: &[SeededPerturbation],
) -> Result<AxiomReport, AxiomError> {
    let seeded = extra_specs.len();
    run(
        Axiom::A4,
        index,
        config,
        seeded + config.samples,
        |k, rng, out| {
            if k < seeded {
                return check_perturbation(index, config, &extra_specs[k], k, out);
            }
            let n = order(config, rng);
            let matrix = random_consistent_with(n, config.sigma, rng).expect("validated config");
            let (p, q) = distinct_pair(n, rng);
            if matrix.get(p, q).ln().abs() < 1e-9 {
                out.skipped += 1;
                return;
            }
            let spec = SeededPerturbation {
                matrix,
                p,
                q,
                deltas: None,
            };
            check_perturbation(index, config, &spec, k, out);
        },
    )
}

/// Applies the A5 decay rule to the changes `d` observed along a sequence
/// shrinking toward the limit point.
fn fails_to_vanish(d: &[f64], jump: f64) -> bool {
    let last = d[d.len() - 1];
    let top = d.iter().copied().fold(0.0, f64::max);
    last > jump && last >= 0.5 * top
}

/// A5: single-entry multiplicative offsets `a_pq (1 + h)` as `h → 0`, and
/// the entry-wise power family `A(b)` as `b → 0`.
pub fn check_a5(index: &IndexDescriptor, config: &AxiomConfig) -> Result<AxiomReport, AxiomError> {
    let hs = &config.h_sequence;
    let last_h = hs[hs.len() - 1];
    run(Axiom::A5, index, config, config.samples, |k, rng, out| {
        let n = order(config, rng);
        let base = if k % 2 == 0 {
            random_consistent_with(n, config.sigma, rng)
        } else {
            random_pcm_with(n, config.sigma, rng)
        }
        .expect("validated config");
        let limit_base = random_pcm_with(n, config.sigma, rng).expect("validated config");
        let (mut p, mut q) = distinct_pair(n, rng);
        // offset the entry that is at most one so the probe stays on scale
        if base.get(p, q) > 1.0 {
            std::mem::swap(&mut p, &mut q);
        }

        if let Some(r) = out.eval(index, Ok(base.clone())) {
            let values: Option<Vec<f64>> = hs
                .iter()
                .map(|h| out.eval(index, base.with_entry(p, q, base.get(p, q) * (1.0 + h))))
                .collect();
            if let Some(values) = values {
                let d: Vec<f64> = values.iter().map(|c| (c - r).abs()).collect();
                if fails_to_vanish(&d, config.continuity_jump) {
                    let c = values[values.len() - 1];
                    out.witness = Some(Witness {
                        base_matrix: base,
                        transform: Transform::Offset { p, q, h: last_h },
                        observed: (r, c),
                        margin: (c - r).abs() - config.continuity_jump,
                        ordinal: k,
                    });
                    return;
                }
            }
        }

        let Some(r) = out.eval(index, PairwiseComparisonMatrix::ones(n)) else {
            return;
        };
        let values: Option<Vec<f64>> = hs
            .iter()
            .map(|b| out.eval(index, limit_base.hadamard_power(*b)))
            .collect();
        let Some(values) = values else { return };
        let d: Vec<f64> = values.iter().map(|c| (c - r).abs()).collect();
        if fails_to_vanish(&d, config.continuity_jump) {
            let c = values[values.len() - 1];
            out.witness = Some(Witness {
                base_matrix: limit_base,
                transform: Transform::PowerLimit { b: last_h },
                observed: (r, c),
                margin: (c - r).abs() - config.continuity_jump,
                ordinal: k,
            });
        }
    })
}

/// Dispatches to the checker for `axiom`, seeding the matching
/// counterexamples.
pub fn run_check(
    axiom: Axiom,
    index: &IndexDescriptor,
    config: &AxiomConfig,
    seeds: &Counterexamples,
) -> Result<AxiomReport, AxiomError> {
    match axiom {
        Axiom::A1 => check_a1(index, config, &seeds.a1),
        Axiom::A2 => check_a2(index, config),
        Axiom::A3 => check_a3(index, config, &seeds.a3),
        Axiom::A4 => check_a4(index, config, &seeds.a4),
        Axiom::A5 => check_a5(index, config),
    }
}
