//! Literal transcription of the round-synchronous jigsaw process.
//!
//! Every round materialises the auxiliary graph on clusters by testing each
//! cluster pair against each colour's whole edge list, then merges its
//! connected components. O(rounds * k^2 * m): a test oracle for small n.

use super::{Partition, PercolationRun, RoundRecord};
use crate::graph::{RFoldGraph, Vertex};

pub fn percolate_bruteforce(g: &RFoldGraph) -> PercolationRun {
    let n = g.n();
    let mut partition = Partition::new(n);
    let mut trajectory = vec![RoundRecord {
        round: 0,
        clusters: n,
        max_cluster: n.min(1),
    }];

    while partition.cluster_count() > 1 {
        let roots: Vec<Vertex> = partition.roots().collect();
        let k = roots.len();
        let mut cluster_of = vec![0usize; n];
        for (i, &root) in roots.iter().enumerate() {
            for v in partition.members(root) {
                cluster_of[v as usize] = i;
            }
        }

        // Auxiliary graph: cluster i ~ cluster j iff every colour has an
        // edge with one endpoint in each.
        let mut aux = Partition::new(k);
        let mut has_edge = false;
        for i in 0..k {
            for j in i + 1..k {
                let joined = (0..g.r()).map(|c| g.edges(c)).all(|edges| {
                    edges.iter().any(|(u, v)| {
                        let (a, b) = (cluster_of[u as usize], cluster_of[v as usize]);
                        (a == i && b == j) || (a == j && b == i)
                    })
                });
                if joined {
                    has_edge = true;
                    aux.union(i as Vertex, j as Vertex);
                }
            }
        }
        if !has_edge {
            break;
        }
        for (i, &root) in roots.iter().enumerate() {
            let leader = roots[aux.find(i as Vertex) as usize];
            partition.union(root, leader);
        }
        trajectory.push(RoundRecord {
            round: trajectory.len(),
            clusters: partition.cluster_count(),
            max_cluster: partition.max_cluster_size(),
        });
    }
    PercolationRun::finish(partition, Some(trajectory))
}
