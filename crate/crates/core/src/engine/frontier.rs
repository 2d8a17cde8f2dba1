//! Incremental cluster adjacency with per-pair colour masks.
//!
//! Each cluster root owns a map from neighbouring cluster roots to the set
//! of colours (as a bit mask) with at least one edge between the two. When
//! clusters merge, the smaller map is folded into the larger one and every
//! neighbour's entry for the absorbed root is rewritten to the survivor, so
//! map keys always name current roots. A pair whose mask becomes full is
//! pushed onto the ready queue. Queue entries can go stale when one of their
//! clusters is merged later; consumers resolve them through the partition.

use rustc_hash::FxHashMap;

use super::{Partition, PercolationRun, RoundRecord};
use crate::graph::{RFoldGraph, Vertex};

/// Deliberate defect used to check that the fuzzer notices engine bugs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FaultInjection {
    #[default]
    None,
    /// Toggle the lowest colour bit on the first edge of colour 0.
    FlipFirstMaskBit,
}

#[derive(Clone, Debug)]
pub struct FrontierMask {
    full: u64,
    maps: Vec<FxHashMap<Vertex, u64>>,
    ready: Vec<(Vertex, Vertex)>,
}

impl FrontierMask {
    /// Frontier of the discrete partition of `g`.
    pub fn new(g: &RFoldGraph) -> Self {
        Self::with_fault(g, FaultInjection::None)
    }

    pub fn with_fault(g: &RFoldGraph, fault: FaultInjection) -> Self {
        let r = g.r();
        let full = if r == 64 { u64::MAX } else { (1u64 << r) - 1 };
        let mut maps: Vec<FxHashMap<Vertex, u64>> = vec![FxHashMap::default(); g.n()];
        for (colour, edges) in (0..g.r()).map(|c| g.edges(c)).enumerate() {
            let bit = 1u64 << colour;
            for (u, v) in edges.iter() {
                *maps[u as usize].entry(v).or_insert(0) |= bit;
                *maps[v as usize].entry(u).or_insert(0) |= bit;
            }
        }
        if fault == FaultInjection::FlipFirstMaskBit {
            if let Some((u, v)) = g.edges(0).first() {
                *maps[u as usize].get_mut(&v).unwrap() ^= 1;
                *maps[v as usize].get_mut(&u).unwrap() ^= 1;
            }
        }
        let mut ready = Vec::new();
        for (u, map) in maps.iter().enumerate() {
            let u = u as Vertex;
            let mut full_nbrs: Vec<Vertex> = map
                .iter()
                .filter(|&(&v, &mask)| v > u && mask == full)
                .map(|(&v, _)| v)
                .collect();
            full_nbrs.sort_unstable();
            ready.extend(full_nbrs.into_iter().map(|v| (u, v)));
        }
        FrontierMask { full, maps, ready }
    }

    pub fn full_mask(&self) -> u64 {
        self.full
    }

    /// Colour mask between two current roots (0 if not adjacent).
    pub fn mask(&self, a: Vertex, b: Vertex) -> u64 {
        self.maps[a as usize].get(&b).copied().unwrap_or(0)
    }

    /// Number of neighbouring clusters of a root.
    pub fn degree(&self, root: Vertex) -> usize {
        self.maps[root as usize].len()
    }

    pub fn neighbours(&self, root: Vertex) -> impl Iterator<Item = (Vertex, u64)> + '_ {
        self.maps[root as usize].iter().map(|(&v, &m)| (v, m))
    }

    pub fn ready_len(&self) -> usize {
        self.ready.len()
    }

    /// Drains the ready queue.
    pub fn take_ready(&mut self) -> Vec<(Vertex, Vertex)> {
        std::mem::take(&mut self.ready)
    }

    pub fn pop_ready(&mut self) -> Option<(Vertex, Vertex)> {
        self.ready.pop()
    }

    /// Folds root `absorbed` into root `keep`.
    ///
    /// Cost is proportional to the degree of `absorbed`; callers pick the
    /// root with the larger map as `keep`.
    pub fn absorb(&mut self, keep: Vertex, absorbed: Vertex) {
        let old = std::mem::take(&mut self.maps[absorbed as usize]);
        for (y, mask) in old {
            if y == keep {
                self.maps[keep as usize].remove(&absorbed);
                continue;
            }
            let ym = &mut self.maps[y as usize];
            ym.remove(&absorbed);
            let entry = ym.entry(keep).or_insert(0);
            let before = *entry;
            *entry |= mask;
            let after = *entry;
            *self.maps[keep as usize].entry(y).or_insert(0) |= mask;
            if before != self.full && after == self.full {
                self.ready.push((keep, y));
            }
        }
    }

    /// Merges the clusters containing `a` and `b`, keeping the root with
    /// the larger frontier. Returns `false` if they were already merged.
    pub fn merge(&mut self, partition: &mut Partition, a: Vertex, b: Vertex) -> bool {
        let (ra, rb) = (partition.find(a), partition.find(b));
        if ra == rb {
            return false;
        }
        let (keep, absorbed) = if self.degree(ra) >= self.degree(rb) {
            (ra, rb)
        } else {
            (rb, ra)
        };
        partition.attach(absorbed, keep);
        self.absorb(keep, absorbed);
        true
    }

    /// Checks every stored mask against a from-scratch recomputation.
    pub fn check_against(&self, g: &RFoldGraph, partition: &Partition) -> Result<(), String> {
        let mut expected: FxHashMap<(Vertex, Vertex), u64> = FxHashMap::default();
        for (colour, edges) in (0..g.r()).map(|c| g.edges(c)).enumerate() {
            for (u, v) in edges.iter() {
                let (a, b) = (partition.find_const(u), partition.find_const(v));
                if a != b {
                    *expected.entry((a, b)).or_insert(0) |= 1 << colour;
                    *expected.entry((b, a)).or_insert(0) |= 1 << colour;
                }
            }
        }
        let mut stored = 0;
        for (a, map) in self.maps.iter().enumerate() {
            let a = a as Vertex;
            if !map.is_empty() && !partition.is_root(a) {
                return Err(format!("non-root {a} owns frontier entries"));
            }
            for (&b, &mask) in map {
                stored += 1;
                if !partition.is_root(b) {
                    return Err(format!("stale key {b} in frontier of {a}"));
                }
                if expected.get(&(a, b)) != Some(&mask) {
                    return Err(format!("mask({a},{b}) = {mask:#b}, expected {:?}", expected.get(&(a, b))));
                }
            }
        }
        if stored != expected.len() {
            return Err(format!("{stored} stored entries, {} expected", expected.len()));
        }
        Ok(())
    }
}

/// Round-synchronous process on the frontier: each round merges exactly the
/// pairs that were full when the round began.
pub fn percolate_sync_frontier(g: &RFoldGraph) -> PercolationRun {
    let n = g.n();
    let mut partition = Partition::new(n);
    let mut frontier = FrontierMask::new(g);
    let mut trajectory = vec![RoundRecord {
        round: 0,
        clusters: n,
        max_cluster: n.min(1),
    }];
    let mut max_cluster = n.min(1);
    while partition.cluster_count() > 1 {
        let batch = frontier.take_ready();
        let mut merged = false;
        for (a, b) in batch {
            if frontier.merge(&mut partition, a, b) {
                merged = true;
                max_cluster = max_cluster.max(partition.size_of(a));
            }
        }
        if !merged {
            break;
        }
        trajectory.push(RoundRecord {
            round: trajectory.len(),
            clusters: partition.cluster_count(),
            max_cluster,
        });
    }
    PercolationRun::finish(partition, Some(trajectory))
}

/// Greedy variant: merges ready pairs one at a time as soon as they appear.
/// Reports the final partition only.
pub fn percolate_async(g: &RFoldGraph) -> PercolationRun {
    percolate_async_with_fault(g, FaultInjection::None)
}

pub fn percolate_async_with_fault(g: &RFoldGraph, fault: FaultInjection) -> PercolationRun {
    let mut partition = Partition::new(g.n());
    let mut frontier = FrontierMask::with_fault(g, fault);
    while let Some((a, b)) = frontier.pop_ready() {
        frontier.merge(&mut partition, a, b);
    }
    PercolationRun::finish(partition, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{sample_rfold, ProbabilityProfile};
    use crate::rng::Seed;

    #[test]
    fn masks_stay_exact_through_merges() {
        let prof = ProbabilityProfile::new(vec![0.2, 0.3, 0.5]).unwrap();
        for s in 0..30 {
            let g = sample_rfold(25, &prof, Seed(s)).unwrap();
            let mut partition = Partition::new(g.n());
            let mut frontier = FrontierMask::new(&g);
            frontier.check_against(&g, &partition).unwrap();
            while let Some((a, b)) = frontier.pop_ready() {
                if frontier.merge(&mut partition, a, b) {
                    frontier.check_against(&g, &partition).unwrap();
                }
            }
            // Every remaining full pair must have been consumed.
            for root in partition.roots() {
                for (_, mask) in frontier.neighbours(root) {
                    assert_ne!(mask, frontier.full_mask());
                }
            }
        }
    }

    #[test]
    fn fault_injection_changes_the_first_mask() {
        let g = RFoldGraph::from_edges(2, vec![vec![(0, 1)], vec![(0, 1)]]).unwrap();
        assert!(percolate_async(&g).percolated);
        assert!(!percolate_async_with_fault(&g, FaultInjection::FlipFirstMaskBit).percolated);
    }
}
