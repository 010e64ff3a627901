use pcm_axioms::axioms::{
    check_a1, check_a2, check_a3, check_a4, check_a5, conformance_table, linspace, run_check,
    sweep_entry, sweep_power, Axiom, AxiomConfig, Counterexamples, Transform, Verdict,
};
use pcm_axioms::indices::{ci, ci_star, gci};
use pcm_axioms::sample::{random_consistent, random_pcm};
use pcm_axioms::{catalog, IndexDescriptor, PairwiseComparisonMatrix, RngSeed};

fn config(samples: usize) -> AxiomConfig {
    AxiomConfig {
        samples,
        ..Default::default()
    }
}

#[test]
fn every_witness_replays_to_its_margin() {
    let cfg = config(200);
    let seeds = Counterexamples::published();
    let mut indices = IndexDescriptor::published_set();
    indices.extend(IndexDescriptor::independence_set());
    let table = conformance_table(&indices, &Axiom::ALL, &cfg, &seeds).unwrap();
    let mut replayed = 0;
    for cell in &table.cells {
        let Some(w) = &cell.report.witness else {
            continue;
        };
        let index = indices
            .iter()
            .find(|i| i.name() == cell.report.index_name)
            .unwrap();
        let (observed, margin) = w.replay(index, &cfg).unwrap();
        assert_eq!(
            observed,
            w.observed,
            "{} {}",
            index.name(),
            cell.report.axiom
        );
        assert!((margin - w.margin).abs() <= 1e-12);
        assert!(w.margin > 0.0);
        replayed += 1;
    }
    assert!(replayed >= 9);
}

#[test]
fn reports_are_deterministic() {
    let cfg = AxiomConfig {
        samples: 150,
        seed: RngSeed(99),
        ..Default::default()
    };
    let seeds = Counterexamples::published();
    for index in [
        IndexDescriptor::re(),
        IndexDescriptor::i2(None),
        IndexDescriptor::hci(),
    ] {
        for axiom in Axiom::ALL {
            let a = run_check(axiom, &index, &cfg, &seeds).unwrap();
            let b = run_check(axiom, &index, &cfg, &seeds).unwrap();
            assert_eq!(a.to_string(), b.to_string());
            assert_eq!(a, b);
        }
    }
}

#[test]
fn different_seeds_draw_different_samples() {
    let a = check_a2(
        &IndexDescriptor::i2(None),
        &AxiomConfig {
            seed: RngSeed(1),
            ..config(50)
        },
    )
    .unwrap();
    let b = check_a2(
        &IndexDescriptor::i2(None),
        &AxiomConfig {
            seed: RngSeed(2),
            ..config(50)
        },
    )
    .unwrap();
    assert_ne!(
        a.witness.unwrap().base_matrix,
        b.witness.unwrap().base_matrix
    );
}

// Sorting the upper entries makes any index relabelling invariant, so the
// A2 checker must never flag it.
#[test]
fn sort_canonical_index_never_violates_a2() {
    let canonical = IndexDescriptor::new("sorted_i2", 0.0, |a: &PairwiseComparisonMatrix| {
        let mut logs: Vec<f64> = a.upper().iter().map(|x| x.ln().abs()).collect();
        logs.sort_by(f64::total_cmp);
        Ok(logs
            .iter()
            .enumerate()
            .map(|(k, l)| (k + 1) as f64 * l)
            .sum())
    });
    let report = check_a2(&canonical, &config(500)).unwrap();
    assert_eq!(report.verdict, Verdict::NoViolationFound);
    assert_eq!(report.samples_run, 500);
}

#[test]
fn zero_on_inconsistent_is_an_a1_witness() {
    let report = check_a1(&IndexDescriptor::i1(), &config(100), &[]).unwrap();
    let w = report.witness.unwrap();
    assert_eq!(w.transform, Transform::Membership { consistent: false });
    assert!(!w.base_matrix.is_consistent(1e-9));
    assert!(ci_star(&w.base_matrix) <= 1.0);
}

#[test]
fn seeded_counterexamples_drive_the_proven_violations() {
    let cfg = config(100);
    let seeds = Counterexamples::published();
    let hci = check_a3(&IndexDescriptor::hci(), &cfg, &seeds.a3).unwrap();
    assert_eq!(
        hci.witness.unwrap().base_matrix,
        catalog::hci_counterexample()
    );
    let gw = check_a3(&IndexDescriptor::gw(), &cfg, &seeds.a3).unwrap();
    assert_eq!(gw.verdict, Verdict::Violated);
    let ni = check_a4(&IndexDescriptor::ni(9.0), &cfg, &seeds.a4).unwrap();
    assert_eq!(
        ni.witness.unwrap().base_matrix,
        catalog::ni_counterexample()
    );
    let re = check_a4(&IndexDescriptor::re(), &cfg, &seeds.a4).unwrap();
    assert_eq!(re.verdict, Verdict::Violated);
    let re5 = check_a5(&IndexDescriptor::re(), &cfg).unwrap();
    assert!(matches!(
        re5.witness.unwrap().transform,
        Transform::PowerLimit { .. }
    ));
}

#[test]
fn gci_power_sweep_follows_b_squared() {
    for s in 0..20 {
        let a = random_pcm(3 + s % 5, 9.0, RngSeed(300 + s as u64)).unwrap();
        let grid = linspace(0.25, 6.0, 24);
        let curve = sweep_power(&IndexDescriptor::gci(), &a, &grid).unwrap();
        let base = gci(&a);
        for (b, v) in &curve.points {
            let expected = b * b * base;
            assert!((v - expected).abs() <= 1e-8 * expected.abs().max(f64::MIN_POSITIVE));
        }
    }
}

#[test]
fn ci_entry_sweep_is_u_shaped_around_the_consistent_value() {
    for s in 0..20 {
        let a = random_consistent(3 + s % 5, 9.0, RngSeed(500 + s as u64)).unwrap();
        let (p, q) = (0, a.order() - 1);
        let centre = a.get(p, q);
        let mut grid: Vec<f64> = linspace(-1.5, 1.5, 31)
            .into_iter()
            .map(|t| centre * t.exp())
            .collect();
        grid[15] = centre;
        let curve = sweep_entry(&IndexDescriptor::ci(), &a, p, q, &grid).unwrap();
        let values = curve.values();
        assert!(values[15].abs() < 1e-9);
        for k in 0..15 {
            assert!(values[k] >= values[k + 1] - 1e-10, "left branch at {k}");
        }
        for k in 15..30 {
            assert!(values[k + 1] >= values[k] - 1e-10, "right branch at {k}");
        }
        assert!((values[15] - ci(&a).unwrap()).abs() < 1e-12);
    }
}

#[test]
fn re_power_sweep_is_flat() {
    let a = catalog::relabelling_example();
    let curve = sweep_power(&IndexDescriptor::re(), &a, &linspace(0.5, 10.0, 20)).unwrap();
    let v0 = curve.points[0].1;
    assert!(curve.values().iter().all(|v| (v - v0).abs() < 1e-12));
}

#[test]
fn report_record_layout() {
    let report = check_a3(
        &IndexDescriptor::hci(),
        &config(10),
        &[catalog::hci_counterexample()],
    )
    .unwrap();
    let text = report.to_string();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "record index=hci axiom=A3 verdict=violated samples=11 skipped=0"
    );
    assert!(lines[1].starts_with("config samples=10 "));
    assert!(lines[2].starts_with("witness sample=0 transform=power b=5 "));
    assert_eq!(lines[3], "matrix");
    assert_eq!(lines[4], "1,4,0.5,2");
    assert_eq!(lines[8], "end");
}

#[test]
fn invalid_configurations_are_rejected_before_sampling() {
    let ci = IndexDescriptor::ci();
    assert!(check_a2(&ci, &config(0)).is_err());
    let bad_grid = AxiomConfig {
        b_grid: vec![0.5],
        ..config(10)
    };
    assert!(check_a3(&ci, &bad_grid, &[]).is_err());
}
