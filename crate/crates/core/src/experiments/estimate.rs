use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::rule::implied_c;
use super::stats::{mean, percentile, wilson_interval, Z95};
use super::{ExperimentError, ProfileRule};
use crate::engine::{percolate_sync, RoundRecord};
use crate::graph::{sample_rfold, ProbabilityProfile, ProfileKind};
use crate::rng::{tag, Seed};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RunOptions {
    /// Worker threads for the replicate fan-out; 0 picks the machine default.
    pub threads: usize,
    /// Measure wall-clock time. Off by default so output is reproducible.
    pub timing: bool,
}

/// Outcome of one sample-and-percolate replicate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunOutcome {
    pub seed: Seed,
    pub percolated: bool,
    pub rounds: usize,
    pub final_max_cluster: usize,
    pub trajectory: Vec<RoundRecord>,
}

/// One line of a sweep: the estimate at a single `c`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub n: usize,
    pub r: usize,
    pub c: f64,
    pub profile_kind: ProfileKind,
    pub a: f64,
    /// Empty when the rule is infeasible at this `c`.
    pub p_vector: Vec<f64>,
    pub feasible: bool,
    pub replicates: u64,
    pub successes: u64,
    pub phat: f64,
    pub wilson_lo: f64,
    pub wilson_hi: f64,
    /// Mean round count among percolating runs.
    pub mean_rounds: f64,
    /// Mean final largest cluster among non-percolating runs.
    pub mean_max_cluster_subfinal: f64,
    pub wall_time_s: f64,
}

impl SweepRow {
    pub fn half_width(&self) -> f64 {
        (self.wilson_hi - self.wilson_lo) / 2.0
    }

    fn infeasible(n: usize, r: usize, rule: &ProfileRule, replicates: u64) -> Self {
        SweepRow {
            n,
            r,
            c: rule.c,
            profile_kind: rule.kind,
            a: rule.a,
            p_vector: Vec::new(),
            feasible: false,
            replicates,
            successes: 0,
            phat: f64::NAN,
            wilson_lo: f64::NAN,
            wilson_hi: f64::NAN,
            mean_rounds: f64::NAN,
            mean_max_cluster_subfinal: f64::NAN,
            wall_time_s: 0.0,
        }
    }
}

/// A sweep row together with the replicate outcomes behind it.
#[derive(Clone, Debug, PartialEq)]
pub struct Estimate {
    pub row: SweepRow,
    pub runs: Vec<RunOutcome>,
}

fn pool(threads: usize) -> Result<rayon::ThreadPool, ExperimentError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| ExperimentError::ThreadPool(e.to_string()))
}

fn run_one(n: usize, profile: &ProbabilityProfile, seed: Seed) -> Result<RunOutcome, ExperimentError> {
    let g = sample_rfold(n, profile, seed)?;
    let run = percolate_sync(&g);
    drop(g);
    Ok(RunOutcome {
        seed,
        percolated: run.percolated,
        rounds: run.rounds.expect("sync runs count rounds"),
        final_max_cluster: run.final_max_cluster(),
        trajectory: run.trajectory.expect("sync runs record a trajectory"),
    })
}

fn estimate_in(
    pool: &rayon::ThreadPool,
    n: usize,
    r: usize,
    rule: &ProfileRule,
    replicates: u64,
    master: Seed,
    timing: bool,
) -> Result<Estimate, ExperimentError> {
    if replicates == 0 {
        return Err(ExperimentError::NoReplicates);
    }
    let profile = rule.profile(n, r)?;
    let start = Instant::now();
    let runs = pool.install(|| {
        (0..replicates)
            .into_par_iter()
            .map(|i| run_one(n, &profile, master.replicate(i)))
            .collect::<Result<Vec<_>, _>>()
    })?;
    let wall = if timing { start.elapsed().as_secs_f64() } else { 0.0 };

    let successes = runs.iter().filter(|o| o.percolated).count() as u64;
    let (wilson_lo, wilson_hi) = wilson_interval(successes, replicates, Z95);
    let rounds: Vec<f64> = runs.iter().filter(|o| o.percolated).map(|o| o.rounds as f64).collect();
    let stuck: Vec<f64> = runs
        .iter()
        .filter(|o| !o.percolated)
        .map(|o| o.final_max_cluster as f64)
        .collect();
    let c = match rule.kind {
        ProfileKind::Explicit => implied_c(n, r, profile.product()),
        _ => rule.c,
    };
    let row = SweepRow {
        n,
        r,
        c,
        profile_kind: rule.kind,
        a: rule.a,
        p_vector: profile.p().to_vec(),
        feasible: true,
        replicates,
        successes,
        phat: successes as f64 / replicates as f64,
        wilson_lo,
        wilson_hi,
        mean_rounds: mean(&rounds),
        mean_max_cluster_subfinal: mean(&stuck),
        wall_time_s: wall,
    };
    Ok(Estimate { row, runs })
}

/// Estimates the percolation probability of `G(n, profile)` from
/// `replicates` independent runs; replicate `i` uses seed
/// `mix64(master ^ i)`.
pub fn estimate_prob(
    n: usize,
    r: usize,
    rule: &ProfileRule,
    replicates: u64,
    master: Seed,
    options: &RunOptions,
) -> Result<Estimate, ExperimentError> {
    estimate_in(&pool(options.threads)?, n, r, rule, replicates, master, options.timing)
}

/// Seed block of sweep grid point `index`.
pub fn sweep_point_seed(master: Seed, index: usize) -> Seed {
    master.derive(tag::SWEEP_POINT + index as u64)
}

/// Every replicate seed a sweep of `points` grid points would use.
pub fn sweep_seeds(master: Seed, points: usize, replicates: u64) -> Vec<Seed> {
    (0..points)
        .flat_map(|i| {
            let block = sweep_point_seed(master, i);
            (0..replicates).map(move |k| block.replicate(k))
        })
        .collect()
}

/// One estimate per grid value of `c`, with disjoint seed blocks.
/// Infeasible grid points yield rows flagged `feasible = false`.
pub fn sweep_c(
    n: usize,
    r: usize,
    c_grid: &[f64],
    rule: &ProfileRule,
    replicates: u64,
    master: Seed,
    options: &RunOptions,
) -> Result<Vec<Estimate>, ExperimentError> {
    if c_grid.is_empty() {
        return Err(ExperimentError::EmptyGrid);
    }
    if c_grid.iter().any(|c| c.is_nan()) || c_grid.windows(2).any(|w| w[1] < w[0]) {
        return Err(ExperimentError::UnsortedGrid);
    }
    let pool = pool(options.threads)?;
    let mut out = Vec::with_capacity(c_grid.len());
    for (i, &c) in c_grid.iter().enumerate() {
        let point = rule.with_c(c);
        match estimate_in(&pool, n, r, &point, replicates, sweep_point_seed(master, i), options.timing) {
            Ok(e) => out.push(e),
            Err(ExperimentError::Infeasible(_)) => out.push(Estimate {
                row: SweepRow::infeasible(n, r, &point, replicates),
                runs: Vec::new(),
            }),
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// Whether `phat` never drops by more than `slack` Wilson half-widths
/// between any two feasible rows in grid order.
pub fn monotone_within(rows: &[SweepRow], slack: f64) -> bool {
    let rows: Vec<&SweepRow> = rows.iter().filter(|r| r.feasible).collect();
    rows.iter().enumerate().all(|(i, a)| {
        rows[i + 1..]
            .iter()
            .all(|b| a.phat - b.phat <= slack * a.half_width().max(b.half_width()))
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ThresholdEstimate {
    pub n: usize,
    pub r: usize,
    pub profile_kind: ProfileKind,
    pub a: f64,
    /// Geometric midpoint of the final bracket.
    pub c_half: f64,
    pub c_lo: f64,
    pub c_hi: f64,
    pub replicates: u64,
    pub tolerance: f64,
    /// Every probe in evaluation order; the first two are the initial bracket.
    pub probes: Vec<SweepRow>,
}

/// Bisects `log c` for the `c` at which the estimated percolation
/// probability crosses 1/2, starting from `bracket`, until
/// `c_hi - c_lo <= tolerance`. Probe `k` uses seed block
/// `master.derive(tag::BISECT_PROBE + k)`.
///
/// The initial bracket must straddle 1/2 at 95% confidence: the Wilson
/// upper bound at `c_lo` below 1/2 and the lower bound at `c_hi` above.
/// Midpoints move the bracket by comparing `phat` with 1/2.
#[allow(clippy::too_many_arguments)]
pub fn threshold_bisect(
    n: usize,
    r: usize,
    rule: &ProfileRule,
    replicates: u64,
    tolerance: f64,
    bracket: (f64, f64),
    master: Seed,
    options: &RunOptions,
) -> Result<ThresholdEstimate, ExperimentError> {
    let (mut lo, mut hi) = bracket;
    if !(lo > 0.0 && hi > lo && hi.is_finite()) {
        return Err(ExperimentError::BadBracket { c_lo: lo, c_hi: hi });
    }
    if tolerance.is_nan() || tolerance <= 0.0 {
        return Err(ExperimentError::BadTolerance(tolerance));
    }
    let pool = pool(options.threads)?;
    let mut probes = Vec::new();
    let probe = |c: f64, probes: &mut Vec<SweepRow>| -> Result<SweepRow, ExperimentError> {
        let seed = master.derive(tag::BISECT_PROBE + probes.len() as u64);
        let row = estimate_in(&pool, n, r, &rule.with_c(c), replicates, seed, options.timing)?.row;
        probes.push(row.clone());
        Ok(row)
    };
    let at_lo = probe(lo, &mut probes)?;
    let at_hi = probe(hi, &mut probes)?;
    if !(at_lo.wilson_hi < 0.5 && at_hi.wilson_lo > 0.5) {
        return Err(ExperimentError::BracketNotStraddling {
            c_lo: lo,
            c_hi: hi,
            upper_at_lo: at_lo.wilson_hi,
            lower_at_hi: at_hi.wilson_lo,
        });
    }
    while hi - lo > tolerance {
        let mid = (lo * hi).sqrt();
        if probe(mid, &mut probes)?.phat < 0.5 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(ThresholdEstimate {
        n,
        r,
        profile_kind: rule.kind,
        a: rule.a,
        c_half: (lo * hi).sqrt(),
        c_lo: lo,
        c_hi: hi,
        replicates,
        tolerance,
        probes,
    })
}

/// Distributions of round counts and stalled cluster sizes.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrajectoryStats {
    /// Round counts of the percolating runs.
    pub rounds_percolated: Vec<usize>,
    /// Final largest cluster of the non-percolating runs.
    pub max_cluster_not_percolated: Vec<usize>,
    /// Largest cluster after each round, one list per run.
    pub max_cluster_trajectories: Vec<Vec<usize>>,
}

impl TrajectoryStats {
    pub fn from_runs(runs: &[RunOutcome]) -> Self {
        TrajectoryStats {
            rounds_percolated: runs.iter().filter(|o| o.percolated).map(|o| o.rounds).collect(),
            max_cluster_not_percolated: runs
                .iter()
                .filter(|o| !o.percolated)
                .map(|o| o.final_max_cluster)
                .collect(),
            max_cluster_trajectories: runs
                .iter()
                .map(|o| o.trajectory.iter().map(|t| t.max_cluster).collect())
                .collect(),
        }
    }

    pub fn max_rounds(&self) -> Option<usize> {
        self.rounds_percolated.iter().copied().max()
    }

    /// Nearest-rank percentile of the stalled largest-cluster sizes.
    pub fn stalled_cluster_percentile(&self, q: f64) -> f64 {
        let v: Vec<f64> = self.max_cluster_not_percolated.iter().map(|&x| x as f64).collect();
        percentile(&v, q)
    }

    /// Nearest-rank percentile of the round counts of percolating runs.
    pub fn rounds_percentile(&self, q: f64) -> f64 {
        let v: Vec<f64> = self.rounds_percolated.iter().map(|&x| x as f64).collect();
        percentile(&v, q)
    }
}

/// Runs `estimate_prob` and returns the trajectory distributions.
pub fn trajectory_stats(
    n: usize,
    r: usize,
    rule: &ProfileRule,
    replicates: u64,
    master: Seed,
    options: &RunOptions,
) -> Result<TrajectoryStats, ExperimentError> {
    let e = estimate_prob(n, r, rule, replicates, master, options)?;
    Ok(TrajectoryStats::from_runs(&e.runs))
}
