//! Engines for the multi-coloured jigsaw process.
//!
//! Starting from singletons, each round joins every pair of clusters that
//! is linked by at least one edge of every colour and merges the connected
//! components of that auxiliary graph. The process stops when a round joins
//! nothing or a single cluster remains; the graph percolates in the latter
//! case.
//!
//! * [`percolate_bruteforce`]: literal rebuild of the auxiliary graph each
//!   round; the oracle.
//! * [`percolate_sync`]: the production engine, round-synchronous.
//! * [`percolate_sync_frontier`]: round-synchronous on incremental colour masks.
//! * [`percolate_async`]: greedy merging on the same masks, final partition only.

mod bruteforce;
mod frontier;
mod partition;
mod run;
mod sync;

pub use bruteforce::percolate_bruteforce;
pub use frontier::{
    percolate_async, percolate_async_with_fault, percolate_sync_frontier, FaultInjection, FrontierMask,
};
pub use partition::{Members, Partition};
pub use run::{PercolationRun, RoundRecord};
pub use sync::{percolate_sync, percolate_sync_with};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{RFoldGraph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("percolation of an empty vertex subset is undefined")]
    EmptySubset,
}

/// Engine selector used by the CLI and the fuzzer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Sync,
    Async,
    Bruteforce,
}

pub fn percolate(g: &RFoldGraph, mode: Mode) -> PercolationRun {
    match mode {
        Mode::Sync => percolate_sync(g),
        Mode::Async => percolate_async(g),
        Mode::Bruteforce => percolate_bruteforce(g),
    }
}

/// Whether `w` is a percolating subset of `g`, i.e. `g[w]` percolates.
pub fn percolates_subset(g: &RFoldGraph, w: &[Vertex]) -> Result<bool, EngineError> {
    if w.is_empty() {
        return Err(EngineError::EmptySubset);
    }
    Ok(percolate_sync(&g.induce(w)).percolated)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn four_vertex() -> RFoldGraph {
        RFoldGraph::from_edges(4, vec![vec![(0, 1), (2, 3), (0, 2)], vec![(0, 1), (2, 3), (1, 3)]]).unwrap()
    }

    fn engines() -> [(&'static str, fn(&RFoldGraph) -> PercolationRun); 3] {
        [
            ("bruteforce", percolate_bruteforce),
            ("sync", percolate_sync),
            ("sync_frontier", percolate_sync_frontier),
        ]
    }

    #[test]
    fn single_vertex_percolates_immediately() {
        for (name, engine) in engines() {
            let run = engine(&RFoldGraph::empty(1, 3).unwrap());
            assert!(run.percolated, "{name}");
            assert_eq!(run.rounds, Some(0), "{name}");
        }
        assert!(percolate_async(&RFoldGraph::empty(1, 2).unwrap()).percolated);
    }

    #[test]
    fn missing_colour_blocks_merging() {
        let g = RFoldGraph::from_edges(2, vec![vec![(0, 1)], vec![]]).unwrap();
        for (name, engine) in engines() {
            let run = engine(&g);
            assert!(!run.percolated, "{name}");
            assert_eq!(run.rounds, Some(0), "{name}");
            assert_eq!(run.final_partition.clusters(), vec![vec![0], vec![1]], "{name}");
        }
    }

    #[test]
    fn two_round_example() {
        for (name, engine) in engines() {
            let run = engine(&four_vertex());
            assert!(run.percolated, "{name}");
            assert_eq!(run.rounds, Some(2), "{name}");
            let t = run.trajectory.as_ref().unwrap();
            assert_eq!(
                t,
                &[
                    RoundRecord { round: 0, clusters: 4, max_cluster: 1 },
                    RoundRecord { round: 1, clusters: 2, max_cluster: 2 },
                    RoundRecord { round: 2, clusters: 1, max_cluster: 4 },
                ],
                "{name}"
            );
            run.check_invariants().unwrap();
        }
        let run = percolate_async(&four_vertex());
        assert!(run.percolated);
        assert_eq!(run.rounds, None);
        assert_eq!(run.final_partition.clusters(), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn complete_graphs_take_one_round() {
        for n in 2..8 {
            for r in 1..4 {
                let g = RFoldGraph::complete(n, r).unwrap();
                for (name, engine) in engines() {
                    let run = engine(&g);
                    assert!(run.percolated, "{name}");
                    assert_eq!(run.rounds, Some(1), "{name} n={n} r={r}");
                }
            }
        }
    }

    #[test]
    fn async_examples() {
        let double = RFoldGraph::from_edges(2, vec![vec![(0, 1)], vec![(0, 1)]]).unwrap();
        assert!(percolate_async(&double).percolated);
        let empty = percolate_async(&RFoldGraph::empty(5, 2).unwrap());
        assert!(!empty.percolated);
        assert_eq!(empty.final_partition.cluster_count(), 5);
        assert_eq!(empty.trajectory, None);
    }

    #[test]
    fn subset_examples() {
        let g = four_vertex();
        assert_eq!(percolates_subset(&g, &[2]), Ok(true));
        assert_eq!(percolates_subset(&g, &[0, 1, 2]), Ok(false));
        assert_eq!(percolates_subset(&g, &[0, 1, 2, 3]), Ok(true));
        let k = RFoldGraph::complete(6, 3).unwrap();
        assert_eq!(percolates_subset(&k, &[1, 3, 5]), Ok(true));
        assert_eq!(percolates_subset(&g, &[]), Err(EngineError::EmptySubset));
    }

    #[test]
    fn merging_is_simultaneous_within_a_round() {
        // Path 0-1-2 double-edged: round 0 joins both pairs and merges the
        // whole component at once.
        let e = vec![(0, 1), (1, 2)];
        let g = RFoldGraph::from_edges(3, vec![e.clone(), e]).unwrap();
        for (name, engine) in engines() {
            assert_eq!(engine(&g).rounds, Some(1), "{name}");
        }
    }
}
