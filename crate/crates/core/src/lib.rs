//! Multi-coloured jigsaw percolation on r-fold random graphs.
//!
//! * [`graph`]: the r-fold graph model, exact samplers and the `jfg` format.
//! * [`engine`]: engines running the jigsaw process.
//! * [`witness`]: constructive search for growing percolating sets.
//! * [`experiments`]: Monte Carlo estimation of percolation probabilities
//!   and thresholds.
//! * [`cli`]: the `jigsaw` command-line front end.

pub mod cli;
pub mod engine;
pub mod experiments;
pub mod fuzz;
pub mod graph;
pub mod rng;
pub mod witness;

pub use engine::{percolate_async, percolate_bruteforce, percolate_sync, Partition, PercolationRun};
pub use graph::{ProbabilityProfile, RFoldGraph, Vertex};
pub use rng::Seed;
