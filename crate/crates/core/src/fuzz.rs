//! Differential testing of the engines on small random instances.
//!
//! Each instance draws `n`, `r` and one probability per colour from its own
//! seed, samples a graph, and compares the brute-force oracle with the
//! round-synchronous engines (partitions and round counts) and the
//! asynchronous engine (final partition). For a single colour the outcome
//! must also match plain connectivity.

use serde::Serialize;

use crate::engine::{
    percolate_async_with_fault, percolate_bruteforce, percolate_sync, percolate_sync_frontier, FaultInjection,
    PercolationRun,
};
use crate::graph::{sample_rfold, ProbabilityProfile, RFoldGraph};
use crate::rng::{tag, Seed};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FuzzConfig {
    pub instances: u64,
    pub max_n: usize,
    pub max_r: usize,
    pub seed: Seed,
    pub fault: FaultInjection,
}

impl FuzzConfig {
    pub fn new(instances: u64, max_n: usize, max_r: usize, seed: Seed) -> Self {
        FuzzConfig {
            instances,
            max_n,
            max_r,
            seed,
            fault: FaultInjection::None,
        }
    }
}

/// One disagreement between engines.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Mismatch {
    pub instance: u64,
    pub seed: Seed,
    pub n: usize,
    pub r: usize,
    pub p: Vec<f64>,
    pub what: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FuzzReport {
    pub instances: u64,
    pub max_n: usize,
    pub max_r: usize,
    pub seed: Seed,
    pub percolated: u64,
    pub mismatches: Vec<Mismatch>,
    /// Graph of the first mismatching instance.
    #[serde(skip)]
    pub counterexample: Option<RFoldGraph>,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "{} instances, {} percolated, {} mismatches",
            self.instances,
            self.percolated,
            self.mismatches.len()
        )
    }
}

/// Seed of fuzz instance `index`.
pub fn instance_seed(master: Seed, index: u64) -> Seed {
    master.derive(tag::FUZZ + index)
}

/// The instance drawn from `seed`: `n` uniform in `1..=max_n`, `r` uniform in
/// `1..=max_r`, each `p_i` uniform in `[0, 1]`.
pub fn fuzz_instance(seed: Seed, max_n: usize, max_r: usize) -> (ProbabilityProfile, RFoldGraph) {
    let mut rng = seed.rng();
    let n = 1 + rng.below(max_n.max(1) as u64) as usize;
    let r = 1 + rng.below(max_r.max(1) as u64) as usize;
    let p: Vec<f64> = (0..r).map(|_| rng.next_f64()).collect();
    let profile = ProbabilityProfile::sorted(p).expect("probabilities lie in [0, 1)");
    let g = sample_rfold(n, &profile, seed.derive(1)).expect("valid instance");
    (profile, g)
}

fn same_rounds(a: &PercolationRun, b: &PercolationRun) -> bool {
    a.rounds == b.rounds && a.trajectory == b.trajectory
}

/// Describes every way the engines disagree on `g`; empty when they agree.
pub fn compare_engines(g: &RFoldGraph, fault: FaultInjection) -> Vec<String> {
    let oracle = percolate_bruteforce(g);
    let mut problems = Vec::new();
    for (name, run) in [("sync", percolate_sync(g)), ("sync_frontier", percolate_sync_frontier(g))] {
        if !run.final_partition.same_partition(&oracle.final_partition) {
            problems.push(format!("{name} partition differs from bruteforce"));
        }
        if !same_rounds(&run, &oracle) {
            problems.push(format!("{name} rounds {:?} differ from bruteforce {:?}", run.rounds, oracle.rounds));
        }
        if let Err(e) = run.check_invariants() {
            problems.push(format!("{name}: {e}"));
        }
    }
    let asynchronous = percolate_async_with_fault(g, fault);
    if !asynchronous.final_partition.same_partition(&oracle.final_partition) {
        problems.push("async partition differs from bruteforce".into());
    }
    if g.r() == 1 {
        let connected = g.is_connected(0).expect("colour 0 exists");
        if connected != oracle.percolated {
            problems.push(format!("r = 1: percolated {} but connected {connected}", oracle.percolated));
        }
    }
    problems
}

pub fn run_fuzz(config: &FuzzConfig) -> FuzzReport {
    let mut report = FuzzReport {
        instances: config.instances,
        max_n: config.max_n,
        max_r: config.max_r,
        seed: config.seed,
        percolated: 0,
        mismatches: Vec::new(),
        counterexample: None,
    };
    for instance in 0..config.instances {
        let seed = instance_seed(config.seed, instance);
        let (profile, g) = fuzz_instance(seed, config.max_n, config.max_r);
        let problems = compare_engines(&g, config.fault);
        if problems.is_empty() {
            report.percolated += u64::from(percolate_sync(&g).percolated);
            continue;
        }
        for what in problems {
            report.mismatches.push(Mismatch {
                instance,
                seed,
                n: g.n(),
                r: g.r(),
                p: profile.p().to_vec(),
                what,
            });
        }
        report.counterexample.get_or_insert(g);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_instances_pass() {
        let report = run_fuzz(&FuzzConfig::new(0, 12, 3, Seed(0)));
        assert!(report.passed());
        assert_eq!(report.summary(), "0 instances, 0 percolated, 0 mismatches");
    }

    #[test]
    fn instances_respect_limits() {
        for i in 0..200 {
            let (profile, g) = fuzz_instance(instance_seed(Seed(4), i), 7, 2);
            assert!((1..=7).contains(&g.n()));
            assert!((1..=2).contains(&g.r()));
            assert_eq!(profile.r(), g.r());
        }
    }

    #[test]
    fn engines_agree_on_small_instances() {
        let report = run_fuzz(&FuzzConfig::new(300, 10, 3, Seed(1)));
        assert!(report.passed(), "{:?}", report.mismatches);
        assert!(report.percolated > 0 && report.percolated < 300);
    }

    #[test]
    fn injected_fault_is_caught() {
        let config = FuzzConfig {
            fault: FaultInjection::FlipFirstMaskBit,
            ..FuzzConfig::new(300, 10, 3, Seed(1))
        };
        let report = run_fuzz(&config);
        assert!(!report.passed());
        let first = &report.mismatches[0];
        let g = report.counterexample.as_ref().unwrap();
        assert_eq!((g.n(), g.r()), (first.n, first.r));
        assert!(!compare_engines(g, config.fault).is_empty());
        assert!(compare_engines(g, FaultInjection::None).is_empty());
    }
}
