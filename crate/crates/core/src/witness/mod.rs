//! Constructive search for a percolating set in three exposure rounds.
//!
//! * [`exposure_split`]: `G` as the union of three independent samples at `p/3`.
//! * [`one_by_one`]: grows a percolating set `V1` of size `t1` in `g1`.
//! * [`doubling`]: grows `V1` to `V2` of linear size in `g1 ∪ g2`.
//! * [`absorb_check`]: every vertex outside `V2` has an edge of each colour
//!   into `V2` in `g3`, which forces the union to percolate.
//! * [`staged_pipeline`]: the three stages chained, each result verified by
//!   the engine.

mod doubling;
mod exposure;
mod one_by_one;
mod pipeline;

pub use doubling::{default_doubling_target, doubling, DoublingState};
pub use exposure::{exposure_split, union_inclusion_probability, ExposureSeeds, ExposureTriple};
pub use one_by_one::{
    analysis_t0, default_max_rounds, default_t1, one_by_one, Choice, OneByOne, OneByOneConfig, OneByOneOutcome,
    RevealLedger,
};
pub use pipeline::{staged_pipeline, staged_pipeline_on, PipelineConfig, Stage, StageFlags, WitnessReport};

use thiserror::Error;

use crate::graph::{RFoldGraph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WitnessError {
    #[error("the vertex set is empty")]
    EmptySet,
    #[error("vertex {0} is outside the graph")]
    VertexOutOfRange(Vertex),
}

/// Sorted, deduplicated copy of `x`, checked against `0..n`.
fn normalise_set(n: usize, x: &[Vertex]) -> Result<Vec<Vertex>, WitnessError> {
    if x.is_empty() {
        return Err(WitnessError::EmptySet);
    }
    let mut x = x.to_vec();
    x.sort_unstable();
    x.dedup();
    match x.last() {
        Some(&v) if v as usize >= n => Err(WitnessError::VertexOutOfRange(v)),
        _ => Ok(x),
    }
}

/// Whether every vertex outside `x` has, in every colour of `g3`, at least
/// one edge into `x`.
pub fn absorb_check(g3: &RFoldGraph, x: &[Vertex]) -> Result<bool, WitnessError> {
    let n = g3.n();
    let x = normalise_set(n, x)?;
    if x.len() == n {
        return Ok(true);
    }
    let mut inside = vec![false; n];
    for &v in &x {
        inside[v as usize] = true;
    }
    let mut hits = vec![0u8; n];
    for c in 0..g3.r() {
        let adj = g3.adjacency(c);
        for &u in &x {
            for v in adj.neighbours(u) {
                let h = &mut hits[v as usize];
                if !inside[v as usize] && *h as usize == c {
                    *h += 1;
                }
            }
        }
    }
    Ok((0..n).all(|v| inside[v] || hits[v] as usize == g3.r()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn absorb_examples() {
        let full: Vec<Vertex> = (0..5).collect();
        assert_eq!(absorb_check(&RFoldGraph::empty(5, 2).unwrap(), &full), Ok(true));
        assert_eq!(absorb_check(&RFoldGraph::empty(5, 2).unwrap(), &[0, 1]), Ok(false));
        let g = RFoldGraph::from_edges(3, vec![vec![(0, 2)], vec![(1, 2)]]).unwrap();
        assert_eq!(absorb_check(&g, &[0, 1]), Ok(true));
        let g = RFoldGraph::from_edges(3, vec![vec![(0, 2)], vec![]]).unwrap();
        assert_eq!(absorb_check(&g, &[0, 1]), Ok(false));
        assert_eq!(absorb_check(&g, &[]), Err(WitnessError::EmptySet));
    }

    #[test]
    fn absorb_matches_definition() {
        let mut rng = crate::rng::Seed(8).rng();
        for _ in 0..300 {
            let n = 2 + rng.below(12) as usize;
            let p = rng.next_f64();
            let prof = crate::graph::ProbabilityProfile::new(vec![p, p]).unwrap();
            let g = crate::graph::sample_rfold(n, &prof, crate::rng::Seed(rng.next_u64())).unwrap();
            let x: Vec<Vertex> = (0..n as Vertex).filter(|_| rng.below(2) == 0).collect();
            if x.is_empty() {
                continue;
            }
            let want = (0..n as Vertex)
                .filter(|v| !x.contains(v))
                .all(|v| (0..2).all(|c| x.iter().any(|&u| g.has_edge(c, u, v))));
            assert_eq!(absorb_check(&g, &x), Ok(want));
        }
    }
}
