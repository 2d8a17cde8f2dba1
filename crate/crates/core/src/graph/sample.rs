//! Exact samplers for G(n, p) and the r-fold binomial random graph.
//!
//! Stream contract: colour `i` of `sample_rfold(n, profile, seed)` is
//! `sample_gnp(n, p_i, seed.derive(tag::COLOUR + i))`. Within a colour, pairs
//! are visited in lexicographic order `(0,1), (0,2), ..., (n-2,n-1)`.
//!
//! * `p < 1/2`: one uniform `U` in `(0,1]` per emitted edge (plus one final
//!   draw that overshoots), skipping `floor(ln U / ln(1-p))` pairs.
//! * `p >= 1/2`: one uniform per pair, the pair is kept when `U < p`.

use rayon::prelude::*;
use thiserror::Error;

use super::{Edge, EdgeList, EdgeListBuilder, ProbabilityProfile, RFoldGraph, Vertex};
use crate::rng::{tag, CounterRng, Seed};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SampleError {
    #[error("cannot sample a graph on zero vertices")]
    NoVertices,
    #[error("{0} vertices exceed the supported maximum")]
    TooManyVertices(usize),
    #[error("edge probability {0} is not in [0, 1]")]
    BadProbability(f64),
}

fn pair_count(n: usize) -> u64 {
    let n = n as u64;
    n * n.saturating_sub(1) / 2
}

fn reserve_hint(pairs: u64, p: f64) -> usize {
    let mean = pairs as f64 * p;
    let hint = mean + 6.0 * mean.sqrt() + 16.0;
    hint.min(pairs as f64) as usize
}

fn check(n: usize, p: f64) -> Result<(), SampleError> {
    if n == 0 {
        return Err(SampleError::NoVertices);
    }
    if n > Vertex::MAX as usize {
        return Err(SampleError::TooManyVertices(n));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(SampleError::BadProbability(p));
    }
    Ok(())
}

/// Per-pair Bernoulli sampler: one uniform per pair in lexicographic order.
///
/// O(n^2); the reference the skipping sampler is checked against.
pub fn sample_gnp_bernoulli(n: usize, p: f64, seed: Seed) -> Result<Vec<Edge>, SampleError> {
    check(n, p)?;
    let mut edges = Vec::with_capacity(reserve_hint(pair_count(n), p));
    bernoulli_pairs(n, p, &mut seed.rng(), |u, v| edges.push((u, v)));
    Ok(edges)
}

fn bernoulli_pairs(n: usize, p: f64, rng: &mut CounterRng, mut emit: impl FnMut(Vertex, Vertex)) {
    for u in 0..n as Vertex {
        for v in u + 1..n as Vertex {
            if rng.next_f64() < p {
                emit(u, v);
            }
        }
    }
}

/// One G(n, p) colour class, sorted lexicographically.
///
/// Cost is proportional to the number of edges produced when `p < 1/2`.
pub fn sample_gnp(n: usize, p: f64, seed: Seed) -> Result<Vec<Edge>, SampleError> {
    check(n, p)?;
    let mut edges = Vec::with_capacity(reserve_hint(pair_count(n), p));
    gnp_pairs(n, p, seed, |u, v| edges.push((u, v)));
    Ok(edges)
}

fn sample_gnp_list(n: usize, p: f64, seed: Seed) -> Result<EdgeList, SampleError> {
    check(n, p)?;
    let mut out = EdgeListBuilder::with_capacity(n, reserve_hint(pair_count(n), p));
    gnp_pairs(n, p, seed, |u, v| out.push(u, v));
    Ok(out.finish())
}

fn gnp_pairs(n: usize, p: f64, seed: Seed, mut emit: impl FnMut(Vertex, Vertex)) {
    if p == 0.0 || n < 2 {
        return;
    }
    let log_q = libm::log1p(-p);
    if p >= 1.0 || log_q == f64::NEG_INFINITY {
        for u in 0..n as Vertex {
            for v in u + 1..n as Vertex {
                emit(u, v);
            }
        }
        return;
    }
    let mut rng = seed.rng();
    if p >= 0.5 {
        return bernoulli_pairs(n, p, &mut rng, emit);
    }

    let total = pair_count(n);
    // Linear index of the next candidate pair, and the row it falls in.
    let mut idx: u64 = 0;
    let mut row: u64 = 0;
    let mut row_start: u64 = 0;
    let mut row_len: u64 = n as u64 - 1;
    loop {
        let skip = (libm::log(rng.next_f64_open0()) / log_q).floor();
        if skip >= (total - idx) as f64 {
            break;
        }
        idx += skip as u64;
        while idx >= row_start + row_len {
            row_start += row_len;
            row += 1;
            row_len -= 1;
        }
        let v = row + 1 + (idx - row_start);
        emit(row as Vertex, v as Vertex);
        idx += 1;
        if idx >= total {
            break;
        }
    }
}

/// Sample of the r-fold binomial random graph `G(n, p_1, ..., p_r)`.
///
/// Colours use independent derived sub-streams and are sampled in
/// parallel; the result does not depend on the thread count.
pub fn sample_rfold(n: usize, profile: &ProbabilityProfile, seed: Seed) -> Result<RFoldGraph, SampleError> {
    check(n, 0.0)?;
    let colours = profile
        .p()
        .par_iter()
        .enumerate()
        .map(|(i, &p)| sample_gnp_list(n, p, seed.derive(tag::COLOUR + i as u64)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RFoldGraph::from_lists(n, colours))
}
