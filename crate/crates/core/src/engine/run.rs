use serde::Serialize;

use super::Partition;

/// State after a round of the process.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RoundRecord {
    pub round: usize,
    pub clusters: usize,
    pub max_cluster: usize,
}

/// Outcome of one percolation run.
///
/// `rounds` counts merge rounds performed; the trajectory starts with the
/// discrete partition at round 0 and has one record per merge round. Both
/// are `None` for the asynchronous engine, which has no rounds.
#[derive(Clone, Debug, Serialize)]
pub struct PercolationRun {
    pub percolated: bool,
    pub rounds: Option<usize>,
    pub trajectory: Option<Vec<RoundRecord>>,
    pub final_partition: Partition,
}

impl PercolationRun {
    pub(crate) fn finish(partition: Partition, trajectory: Option<Vec<RoundRecord>>) -> Self {
        PercolationRun {
            percolated: partition.cluster_count() == 1,
            rounds: trajectory.as_ref().map(|t| t.len() - 1),
            trajectory,
            final_partition: partition,
        }
    }

    pub fn final_cluster_count(&self) -> usize {
        self.final_partition.cluster_count()
    }

    /// Size of the largest final cluster.
    pub fn final_max_cluster(&self) -> usize {
        match &self.trajectory {
            Some(t) => t.last().map_or(0, |r| r.max_cluster),
            None => self.final_partition.max_cluster_size(),
        }
    }

    /// Checks the record-level invariants; returns a description of the first violation.
    pub fn check_invariants(&self) -> Result<(), String> {
        let n = self.final_partition.len();
        if self.percolated != (self.final_partition.cluster_count() == 1) {
            return Err("percolated flag disagrees with final cluster count".into());
        }
        let Some(traj) = &self.trajectory else {
            return Ok(());
        };
        if traj.is_empty() || traj[0] != (RoundRecord { round: 0, clusters: n, max_cluster: n.min(1) }) {
            return Err(format!("trajectory does not start at the discrete partition: {:?}", traj.first()));
        }
        for w in traj.windows(2) {
            if w[1].round != w[0].round + 1 {
                return Err("round indices are not consecutive".into());
            }
            if w[1].clusters >= w[0].clusters {
                return Err(format!("cluster count did not decrease in round {}", w[1].round));
            }
            if w[1].max_cluster < w[0].max_cluster {
                return Err(format!("max cluster shrank in round {}", w[1].round));
            }
        }
        let last = traj.last().unwrap();
        if last.clusters != self.final_partition.cluster_count() {
            return Err("last trajectory record disagrees with final partition".into());
        }
        if self.rounds != Some(traj.len() - 1) {
            return Err("round count disagrees with trajectory length".into());
        }
        if n > 0 && traj.len() - 1 > n - 1 {
            return Err("more than n - 1 rounds".into());
        }
        Ok(())
    }
}
