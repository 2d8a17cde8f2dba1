//! Structural properties of the witness algorithms on random instances.

use jigsaw::engine::{percolate_sync, percolates_subset};
use jigsaw::graph::{sample_gnp_bernoulli, sample_rfold, ProbabilityProfile, RFoldGraph, Vertex};
use jigsaw::rng::{tag, Seed};
use jigsaw::witness::{
    absorb_check, doubling, exposure_split, staged_pipeline, Choice, OneByOne, OneByOneConfig, OneByOneOutcome,
    PipelineConfig, Stage,
};
use proptest::prelude::*;

fn sorted(mut v: Vec<Vertex>) -> Vec<Vertex> {
    v.sort_unstable();
    v
}

fn sparse_instance(n: usize, r: usize, scale: f64, seed: Seed) -> RFoldGraph {
    let ln = (n as f64).ln();
    let mut p = vec![(scale * ln / n as f64).min(1.0)];
    p.extend((1..r).map(|_| (scale * 0.3).min(1.0)));
    sample_rfold(n, &ProbabilityProfile::sorted(p).unwrap(), seed).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn one_by_one_sets_stay_disjoint(n in 2usize..120, r in 1usize..4, scale in 0.2f64..6.0, seed in any::<u64>(), t1 in 1usize..8, seeded in any::<bool>()) {
        let g = sparse_instance(n, r, scale, Seed(seed));
        let config = OneByOneConfig {
            t1,
            max_rounds: 1 + n / 4,
            choice: if seeded { Choice::Seeded(Seed(seed ^ 1)) } else { Choice::Lowest },
            reveal_cap: None,
            record_reveals: true,
        };
        let mut run = OneByOne::new(&g, config);
        let mut discarded_before: Vec<Vertex> = Vec::new();
        loop {
            let start = run.round_start_set();
            let mut parts = run.trial().to_vec();
            parts.extend(run.active());
            parts.extend_from_slice(run.dormant());
            prop_assert_eq!(parts.len(), start.len());
            prop_assert_eq!(sorted(parts), start.clone());
            prop_assert_eq!(run.active().len(), run.active_count());
            // Discarded vertices only accumulate and never come back.
            prop_assert!(run.discarded().starts_with(&discarded_before));
            discarded_before = run.discarded().to_vec();
            prop_assert!(discarded_before.iter().all(|v| start.binary_search(v).is_err()));
            prop_assert!(run.last_joinable().iter().all(|v| run.last_revealed().contains(v)));
            if run.step().is_some() {
                break;
            }
        }
        prop_assert_eq!(run.ledger().unwrap().repeats(), 0);
        if let Some(x) = run.witness() {
            prop_assert!(x.len() >= t1);
            prop_assert_eq!(percolates_subset(&g, x), Ok(true));
        } else {
            prop_assert_ne!(run.outcome(), Some(OneByOneOutcome::Success));
        }
    }

    #[test]
    fn doubling_grows_percolating_sets(n in 2usize..200, r in 1usize..4, s1 in 0.5f64..6.0, s2 in 0.5f64..30.0, seed in any::<u64>()) {
        let g1 = sparse_instance(n, r, s1, Seed(seed));
        let g2 = sparse_instance(n, r, s2 / 10.0, Seed(seed).derive(1));
        let run = OneByOne::new(&g1, OneByOneConfig { t1: 3, max_rounds: n, ..OneByOneConfig::defaults(n, r) }).run();
        let x0: Vec<Vertex> = match run.witness() {
            Some(x) => x.to_vec(),
            None => vec![0],
        };
        let state = doubling(&g2, &x0, n / 4).unwrap();
        prop_assert!(state.doubles_each_step());
        prop_assert_eq!(state.success, state.set.len() >= n / 4);
        prop_assert_eq!(*state.sizes.last().unwrap(), state.set.len());
        let both = RFoldGraph::union_graphs(&[&g1, &g2]).unwrap();
        if percolates_subset(&g1, &x0) == Ok(true) {
            prop_assert_eq!(percolates_subset(&both, &state.set), Ok(true));
        }
    }

    #[test]
    fn absorption_of_a_percolating_set_forces_percolation(n in 2usize..60, r in 1usize..3, p in 0.05f64..0.9, seed in any::<u64>()) {
        let prof = ProbabilityProfile::new(vec![p; r]).unwrap();
        let t = exposure_split(n, &prof, Seed(seed)).unwrap();
        let g12 = t.union12();
        let x: Vec<Vertex> = (0..(n as Vertex).div_ceil(2)).collect();
        if percolates_subset(&g12, &x) == Ok(true) && absorb_check(&t.g3, &x) == Ok(true) {
            prop_assert!(percolate_sync(&t.union()).percolated);
        }
    }
}

#[test]
fn pipeline_reports_are_consistent() {
    let mut rng = Seed(31).rng();
    let mut done = 0;
    for i in 0..60 {
        let n = 50 + rng.below(400) as usize;
        let r = 1 + rng.below(3) as usize;
        let p = 0.02 + 0.4 * rng.next_f64();
        let prof = ProbabilityProfile::new(vec![p; r]).unwrap();
        let config = PipelineConfig { seeded_choice: i % 2 == 0, ..Default::default() };
        let report = staged_pipeline(n, &prof, Seed(i), &config).unwrap();
        assert!(report.is_consistent(), "{report:?}");
        if report.stage == Stage::Done {
            done += 1;
        }
    }
    assert!(done > 0);
}

#[test]
fn exposure_edge_counts_match_binomial_means() {
    // Each exposure round is G(n, p/3); its mean edge count over many seeds
    // must match both the binomial mean and the per-pair reference sampler.
    let (n, p, seeds) = (60usize, 0.3, 10_000u64);
    let pairs = (n * (n - 1) / 2) as f64;
    let q = p / 3.0;
    let prof = ProbabilityProfile::new(vec![p, p]).unwrap();
    let mut totals = [[0usize; 2]; 3];
    let mut reference = 0usize;
    for s in 0..seeds {
        let t = exposure_split(n, &prof, Seed(s)).unwrap();
        for (j, g) in [&t.g1, &t.g2, &t.g3].into_iter().enumerate() {
            for c in 0..2 {
                totals[j][c] += g.edge_count(c);
            }
        }
        reference += sample_gnp_bernoulli(n, q, Seed(s).derive(tag::FUZZ)).unwrap().len();
    }
    let mean = pairs * q;
    let sd_of_mean = (pairs * q * (1.0 - q)).sqrt() / (seeds as f64).sqrt();
    for row in totals {
        for total in row {
            let m = total as f64 / seeds as f64;
            assert!((m - mean).abs() <= 5.0 * sd_of_mean, "{m} vs {mean}");
        }
    }
    let m = reference as f64 / seeds as f64;
    assert!((m - mean).abs() <= 5.0 * sd_of_mean);
}
