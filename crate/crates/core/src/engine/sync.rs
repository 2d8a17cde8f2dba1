//! Round-synchronous engine driven by the sparsest colour.
//!
//! A cluster pair can only be joined in every colour if it is joined in the
//! sparsest one (the anchor), and a pair of clusters that both survived the
//! previous round unchanged cannot have become joined since. Each round
//! therefore:
//!
//! 1. enumerates anchor edges leaving the clusters created in the previous
//!    round (all singletons in round 0), giving candidate cluster pairs;
//! 2. keeps the candidates joined in every remaining colour, checking the
//!    colours from sparsest to densest and stopping at the first miss;
//! 3. unions all surviving pairs at once.
//!
//! Apart from the per-colour adjacency the working set is O(n) plus one
//! candidate list bounded by the anchor edge count.

use super::{Partition, PercolationRun, RoundRecord};
use crate::graph::{Adjacency, RFoldGraph, Vertex};

/// Runs the jigsaw process round by round. Same contract as
/// [`percolate_bruteforce`](super::percolate_bruteforce).
pub fn percolate_sync(g: &RFoldGraph) -> PercolationRun {
    let adjacency = g.adjacencies();
    percolate_sync_with(g, &adjacency)
}

/// As [`percolate_sync`], reusing prebuilt adjacency.
pub fn percolate_sync_with(g: &RFoldGraph, adjacency: &[Adjacency<'_>]) -> PercolationRun {
    let n = g.n();
    let mut partition = Partition::new(n);
    let mut trajectory = vec![RoundRecord {
        round: 0,
        clusters: n,
        max_cluster: n.min(1),
    }];
    if n <= 1 {
        return PercolationRun::finish(partition, Some(trajectory));
    }

    let mut order: Vec<usize> = (0..g.r()).collect();
    order.sort_by_key(|&c| (g.edge_count(c), c));
    let anchor = &adjacency[order[0]];
    let others: Vec<&Adjacency<'_>> = order[1..].iter().map(|&c| &adjacency[c]).collect();

    let mut changed: Vec<Vertex> = (0..n as Vertex).collect();
    let mut candidates: Vec<(Vertex, Vertex)> = Vec::new();
    let mut members: Vec<Vertex> = Vec::new();
    let mut max_cluster = 1usize;

    loop {
        candidates.clear();
        for &a in &changed {
            members.clear();
            members.extend(partition.members(a));
            for &x in &members {
                for y in anchor.neighbours(x) {
                    let b = partition.find(y);
                    if b != a {
                        candidates.push(if a < b { (a, b) } else { (b, a) });
                    }
                }
            }
        }
        candidates.sort_unstable();
        candidates.dedup();

        let mut kept = 0;
        for i in 0..candidates.len() {
            let (a, b) = candidates[i];
            if others.iter().all(|adj| joined(&mut partition, adj, a, b)) {
                candidates[kept] = (a, b);
                kept += 1;
            }
        }
        candidates.truncate(kept);
        if candidates.is_empty() {
            break;
        }

        for &(a, b) in &candidates {
            partition.union(a, b);
        }
        changed.clear();
        for &(a, _) in &candidates {
            changed.push(partition.find(a));
        }
        changed.sort_unstable();
        changed.dedup();
        for &root in &changed {
            max_cluster = max_cluster.max(partition.size_of_root(root));
        }
        trajectory.push(RoundRecord {
            round: trajectory.len(),
            clusters: partition.cluster_count(),
            max_cluster,
        });
        if partition.cluster_count() == 1 {
            break;
        }
    }
    PercolationRun::finish(partition, Some(trajectory))
}

/// Whether roots `a` and `b` are joined by an edge of the colour `adj`.
fn joined(partition: &mut Partition, adj: &Adjacency<'_>, a: Vertex, b: Vertex) -> bool {
    let (small, big) = if partition.size_of_root(a) <= partition.size_of_root(b) {
        (a, b)
    } else {
        (b, a)
    };
    let small_size = partition.size_of_root(small);
    let big_size = partition.size_of_root(big);

    let mut degree_sum = 0usize;
    let mut x = small;
    loop {
        degree_sum += adj.degree(x);
        x = partition.next_member(x);
        if x == small {
            break;
        }
    }
    if degree_sum == 0 {
        return false;
    }

    // Pairwise lookups beat scanning when both clusters are tiny relative
    // to the degrees involved.
    let lookup_cost = small_size * big_size * (usize::BITS - degree_sum.leading_zeros()) as usize;
    if lookup_cost < degree_sum {
        let mut x = small;
        loop {
            let mut y = big;
            loop {
                if adj.contains(x, y) {
                    return true;
                }
                y = partition.next_member(y);
                if y == big {
                    break;
                }
            }
            x = partition.next_member(x);
            if x == small {
                return false;
            }
        }
    }

    let mut x = small;
    loop {
        for y in adj.neighbours(x) {
            if partition.find(y) == big {
                return true;
            }
        }
        x = partition.next_member(x);
        if x == small {
            return false;
        }
    }
}
