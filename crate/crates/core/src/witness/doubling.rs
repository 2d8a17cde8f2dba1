//! Layer-by-layer growth of a percolating set.
//!
//! Layer 0 is the seed set. At step `t` the joinable set `B_t` holds the
//! active vertices with an edge of every colour into the newest layer. The
//! algorithm stops when `|B_t| < |X_t|`; otherwise `B_t` becomes the next
//! layer, and it stops successfully once `|X_{t+1}| >= target`. Edges are
//! only examined between active vertices and the newest layer, so each
//! edge is looked at no more than twice in total.

use serde::Serialize;

use super::{normalise_set, WitnessError};
use crate::graph::{RFoldGraph, Vertex};

/// `floor(n / 2^(r + 2))`.
pub fn default_doubling_target(n: usize, r: usize) -> usize {
    n.checked_shr(r as u32 + 2).unwrap_or(0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoublingState {
    pub target: usize,
    /// `X_t` as the concatenation of its layers.
    pub set: Vec<Vertex>,
    /// Start offset of every layer in `set`.
    pub layer_starts: Vec<usize>,
    /// `x_t = |X_t|` for every step reached.
    pub sizes: Vec<usize>,
    /// `b_t = |B_t|` for every step evaluated.
    pub joinable_sizes: Vec<usize>,
    pub success: bool,
}

impl DoublingState {
    /// Step index of the last set, i.e. `sizes.len() - 1`.
    pub fn steps(&self) -> usize {
        self.sizes.len() - 1
    }

    pub fn layer(&self, t: usize) -> &[Vertex] {
        let end = self.layer_starts.get(t + 1).copied().unwrap_or(self.set.len());
        &self.set[self.layer_starts[t]..end]
    }

    /// Whether `x_s >= 2 x_{s-1}` for every step after the first.
    pub fn doubles_each_step(&self) -> bool {
        self.sizes.windows(2).all(|w| w[1] >= 2 * w[0])
    }
}

pub fn doubling(g2: &RFoldGraph, x0: &[Vertex], target: usize) -> Result<DoublingState, WitnessError> {
    let n = g2.n();
    let x0 = normalise_set(n, x0)?;
    let r = g2.r();
    let adj = g2.adjacencies();

    let mut in_set = vec![false; n];
    for &v in &x0 {
        in_set[v as usize] = true;
    }
    // Colours satisfied so far by a candidate in the current step.
    let mut hits = vec![0u8; n];
    let mut candidates: Vec<Vertex> = Vec::new();

    let mut state = DoublingState {
        target,
        sizes: vec![x0.len()],
        layer_starts: vec![0],
        set: x0,
        joinable_sizes: Vec::new(),
        success: false,
    };
    loop {
        let layer_start = *state.layer_starts.last().unwrap();
        candidates.clear();
        for (c, a) in adj.iter().enumerate() {
            for &u in &state.set[layer_start..] {
                for v in a.neighbours(u) {
                    let h = &mut hits[v as usize];
                    if !in_set[v as usize] && *h as usize == c {
                        *h += 1;
                        if c == 0 {
                            candidates.push(v);
                        }
                    }
                }
            }
        }
        let mut joinable: Vec<Vertex> = candidates.iter().copied().filter(|&v| hits[v as usize] as usize == r).collect();
        for &v in &candidates {
            hits[v as usize] = 0;
        }
        joinable.sort_unstable();
        state.joinable_sizes.push(joinable.len());

        if joinable.len() < state.set.len() {
            break;
        }
        state.layer_starts.push(state.set.len());
        for &v in &joinable {
            in_set[v as usize] = true;
        }
        state.set.extend_from_slice(&joinable);
        state.sizes.push(state.set.len());
        if state.set.len() >= target {
            break;
        }
    }
    state.success = state.set.len() >= target;
    Ok(state)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_succeeds_at_step_zero() {
        let g = RFoldGraph::complete(64, 2).unwrap();
        let s = doubling(&g, &[5, 9, 40], 4).unwrap();
        assert!(s.success);
        assert_eq!(s.joinable_sizes, vec![61]);
        assert_eq!(s.sizes, vec![3, 64]);
        assert_eq!(s.steps(), 1);
        assert_eq!(s.layer(0), &[5, 9, 40]);
        assert_eq!(s.layer(1).len(), 61);
    }

    #[test]
    fn empty_graph_returns_the_seed() {
        let g = RFoldGraph::empty(20, 2).unwrap();
        let s = doubling(&g, &[3], 5).unwrap();
        assert!(!s.success);
        assert_eq!(s.set, vec![3]);
        assert_eq!(s.joinable_sizes, vec![0]);
    }

    #[test]
    fn joinable_vertices_need_every_colour_into_the_newest_layer() {
        // 0 is the seed; 1 and 2 see it in both colours, 3 only in colour 1.
        // Layer 1 = {1, 2}; 4 sees 1 in colour 1 and 2 in colour 2.
        let c1 = vec![(0, 1), (0, 2), (0, 3), (1, 4)];
        let c2 = vec![(0, 1), (0, 2), (2, 4), (0, 5)];
        let g = RFoldGraph::from_edges(6, vec![c1, c2]).unwrap();
        let s = doubling(&g, &[0], 100).unwrap();
        assert_eq!(s.layer(1), &[1, 2]);
        assert_eq!(s.joinable_sizes, vec![2, 1]);
        assert_eq!(s.sizes, vec![1, 3]);
        assert!(s.doubles_each_step());
        assert!(!s.success);
    }

    #[test]
    fn rejects_empty_seed() {
        let g = RFoldGraph::empty(4, 1).unwrap();
        assert_eq!(doubling(&g, &[], 1), Err(WitnessError::EmptySet));
        assert_eq!(doubling(&g, &[4], 1), Err(WitnessError::VertexOutOfRange(4)));
    }

    #[test]
    fn default_targets() {
        assert_eq!(default_doubling_target(64, 2), 4);
        assert_eq!(default_doubling_target(1000, 1), 125);
        assert_eq!(default_doubling_target(1000, 64), 0);
    }
}
