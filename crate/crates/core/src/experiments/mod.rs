//! Monte Carlo estimation of percolation probabilities and thresholds.
//!
//! Every replicate draws its graph from a seed derived from the master
//! seed and its index, never from a shared stream, so results do not
//! depend on the number of worker threads. Sweep grid points and bisection
//! probes each get their own derived seed block.

mod estimate;
mod output;
mod rule;
mod stats;

pub use estimate::{
    estimate_prob, monotone_within, sweep_c, sweep_point_seed, sweep_seeds, threshold_bisect, trajectory_stats,
    Estimate, RunOptions, RunOutcome, SweepRow, ThresholdEstimate, TrajectoryStats,
};
pub use output::{format_float, rows_to_csv, rows_to_json, threshold_to_json, write_csv, CSV_HEADER};
pub use rule::{implied_c, target_product, ProfileRule};
pub use stats::{mean, percentile, wilson_interval, Z95};

use thiserror::Error;

use crate::graph::SampleError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExperimentError {
    #[error("infeasible profile: {0}")]
    Infeasible(String),
    #[error("at least one replicate is required")]
    NoReplicates,
    #[error("the c grid is empty")]
    EmptyGrid,
    #[error("the c grid must be ascending")]
    UnsortedGrid,
    #[error("invalid bracket [{c_lo}, {c_hi}]")]
    BadBracket { c_lo: f64, c_hi: f64 },
    #[error("tolerance {0} must be positive")]
    BadTolerance(f64),
    #[error(
        "bracket [{c_lo}, {c_hi}] does not straddle 1/2: upper bound {upper_at_lo} at c_lo, lower bound {lower_at_hi} at c_hi"
    )]
    BracketNotStraddling {
        c_lo: f64,
        c_hi: f64,
        upper_at_lo: f64,
        lower_at_hi: f64,
    },
    #[error(transparent)]
    Sample(#[from] SampleError),
    #[error("thread pool: {0}")]
    ThreadPool(String),
}
