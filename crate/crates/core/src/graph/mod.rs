//! The r-fold graph model: one vertex set `0..n` carrying `r` independent
//! undirected edge sets ("colours").
//!
//! Colours are indexed from 0 in the Rust API. The text format and the CLI
//! number them from 1.

mod edges;
mod jfg;
mod profile;
mod sample;

pub use edges::{Adjacency, EdgeList};
pub(crate) use edges::EdgeListBuilder;
pub use jfg::{parse_jfg, read_jfg, to_jfg_string, write_jfg, write_jfg_file, FormatError};
pub use profile::{
    critical_constant, critical_constant_root, ProbabilityProfile, ProfileError, ProfileKind,
    ProfileParams,
};
pub use sample::{sample_gnp, sample_gnp_bernoulli, sample_rfold, SampleError};

use std::collections::VecDeque;
use thiserror::Error;

/// Vertex identifier. Graphs are limited to `u32::MAX` vertices.
pub type Vertex = u32;

/// Canonical undirected edge `(u, v)` with `u < v`.
pub type Edge = (Vertex, Vertex);

/// Colour masks are single machine words.
pub const MAX_COLOURS: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("an r-fold graph needs at least one colour")]
    NoColours,
    #[error("{0} colours requested, at most {MAX_COLOURS} are supported")]
    TooManyColours(usize),
    #[error("colour {colour} out of range for a {r}-fold graph")]
    ColourOutOfRange { colour: usize, r: usize },
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: Vertex, v: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge ({u}, {v}) in colour {colour}")]
    DuplicateEdge { colour: usize, u: Vertex, v: Vertex },
    #[error("graphs disagree on shape: ({n1} vertices, {r1} colours) vs ({n2}, {r2})")]
    ShapeMismatch { n1: usize, r1: usize, n2: usize, r2: usize },
    #[error("union of an empty list of graphs")]
    EmptyUnion,
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("{0} vertices exceed the supported maximum")]
    TooManyVertices(usize),
}

/// An r-fold graph with one sorted edge list per colour.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RFoldGraph {
    n: usize,
    colours: Vec<EdgeList>,
}

fn check_colour_count(r: usize) -> Result<(), GraphError> {
    if r == 0 {
        Err(GraphError::NoColours)
    } else if r > MAX_COLOURS {
        Err(GraphError::TooManyColours(r))
    } else {
        Ok(())
    }
}

#[inline]
fn canonical(a: Vertex, b: Vertex) -> Edge {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

impl RFoldGraph {
    /// Builds a graph from per-colour edge lists.
    ///
    /// Edges may be given in either orientation and any order; they are
    /// canonicalised and sorted. Self-loops, out-of-range endpoints and
    /// duplicates are rejected.
    pub fn from_edges(n: usize, colours: Vec<Vec<Edge>>) -> Result<Self, GraphError> {
        check_colour_count(colours.len())?;
        if n > Vertex::MAX as usize {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut out = Vec::with_capacity(colours.len());
        for (colour, mut edges) in colours.into_iter().enumerate() {
            for e in edges.iter_mut() {
                let (u, v) = *e;
                if u as usize >= n || v as usize >= n {
                    return Err(GraphError::VertexOutOfRange { u, v, n });
                }
                if u == v {
                    return Err(GraphError::SelfLoop(u));
                }
                *e = canonical(u, v);
            }
            edges.sort_unstable();
            if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
                let (u, v) = w[0];
                return Err(GraphError::DuplicateEdge { colour, u, v });
            }
            out.push(EdgeList::from_sorted(n, &edges));
        }
        Ok(RFoldGraph { n, colours: out })
    }

    /// Trusted constructor for sorted canonical edge lists produced inside the crate.
    pub(crate) fn from_sorted_unchecked(n: usize, colours: Vec<Vec<Edge>>) -> Self {
        debug_assert!(colours
            .iter()
            .all(|c| c.windows(2).all(|w| w[0] < w[1]) && c.iter().all(|&(u, v)| u < v && (v as usize) < n)));
        let colours = colours.iter().map(|c| EdgeList::from_sorted(n, c)).collect();
        RFoldGraph { n, colours }
    }

    pub(crate) fn from_lists(n: usize, colours: Vec<EdgeList>) -> Self {
        debug_assert!(colours.iter().all(|c| c.vertex_count() == n));
        RFoldGraph { n, colours }
    }

    pub fn empty(n: usize, r: usize) -> Result<Self, GraphError> {
        check_colour_count(r)?;
        Ok(RFoldGraph {
            n,
            colours: vec![EdgeList::empty(n); r],
        })
    }

    /// Every pair present in every colour.
    pub fn complete(n: usize, r: usize) -> Result<Self, GraphError> {
        check_colour_count(r)?;
        let all: Vec<Edge> = (0..n as Vertex)
            .flat_map(|u| (u + 1..n as Vertex).map(move |v| (u, v)))
            .collect();
        Ok(RFoldGraph::from_sorted_unchecked(n, vec![all; r]))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.colours.len()
    }

    /// Sorted canonical edges of one colour.
    pub fn edges(&self, colour: usize) -> &EdgeList {
        &self.colours[colour]
    }

    /// Copies of every colour's edges as plain pair lists.
    pub fn colour_edges(&self) -> Vec<Vec<Edge>> {
        self.colours.iter().map(EdgeList::to_vec).collect()
    }

    pub fn edge_count(&self, colour: usize) -> usize {
        self.colours[colour].len()
    }

    pub fn edge_counts(&self) -> Vec<usize> {
        self.colours.iter().map(EdgeList::len).collect()
    }

    pub fn total_edges(&self) -> usize {
        self.colours.iter().map(EdgeList::len).sum()
    }

    pub fn has_edge(&self, colour: usize, a: Vertex, b: Vertex) -> bool {
        self.colours[colour].contains(a, b)
    }

    fn check_colour(&self, colour: usize) -> Result<(), GraphError> {
        if colour < self.r() {
            Ok(())
        } else {
            Err(GraphError::ColourOutOfRange {
                colour,
                r: self.r(),
            })
        }
    }

    /// Full adjacency of one colour. Built on demand, O(n + m).
    pub fn adjacency(&self, colour: usize) -> Adjacency<'_> {
        Adjacency::build(&self.colours[colour])
    }

    /// Adjacency of every colour.
    pub fn adjacencies(&self) -> Vec<Adjacency<'_>> {
        (0..self.r()).map(|c| self.adjacency(c)).collect()
    }

    /// Induced r-fold subgraph on `w`, relabelled by the order-preserving
    /// bijection `w -> 0..|w|`. Duplicates in `w` are ignored.
    ///
    /// Panics if `w` contains a vertex outside `0..n`.
    pub fn induce(&self, w: &[Vertex]) -> RFoldGraph {
        let mut members: Vec<Vertex> = w.to_vec();
        members.sort_unstable();
        members.dedup();
        if let Some(&last) = members.last() {
            assert!((last as usize) < self.n, "vertex {last} outside 0..{}", self.n);
        }
        let mut label = vec![Vertex::MAX; self.n];
        for (i, &v) in members.iter().enumerate() {
            label[v as usize] = i as Vertex;
        }
        let colours = self
            .colours
            .iter()
            .map(|edges| {
                let mut out = EdgeListBuilder::with_capacity(members.len(), 0);
                for &u in &members {
                    let a = label[u as usize];
                    for &v in edges.forward(u) {
                        let b = label[v as usize];
                        if b != Vertex::MAX {
                            out.push(a, b);
                        }
                    }
                }
                out.finish()
            })
            .collect();
        RFoldGraph::from_lists(members.len(), colours)
    }

    /// Colour-wise union; duplicate edges collapse.
    pub fn union_graphs(graphs: &[&RFoldGraph]) -> Result<RFoldGraph, GraphError> {
        let first = graphs.first().ok_or(GraphError::EmptyUnion)?;
        for g in &graphs[1..] {
            if g.n != first.n || g.r() != first.r() {
                return Err(GraphError::ShapeMismatch {
                    n1: first.n,
                    r1: first.r(),
                    n2: g.n,
                    r2: g.r(),
                });
            }
        }
        let colours = (0..first.r())
            .map(|c| {
                let mut edges: Vec<Edge> = Vec::with_capacity(graphs.iter().map(|g| g.colours[c].len()).sum());
                for g in graphs {
                    edges.extend(g.colours[c].iter());
                }
                edges.sort_unstable();
                edges.dedup();
                edges
            })
            .collect();
        Ok(RFoldGraph::from_sorted_unchecked(first.n, colours))
    }

    /// Relabels vertex `v` as `pi[v]`.
    pub fn permute(&self, pi: &[Vertex]) -> Result<RFoldGraph, GraphError> {
        if pi.len() != self.n {
            return Err(GraphError::NotAPermutation(self.n));
        }
        let mut seen = vec![false; self.n];
        for &x in pi {
            let x = x as usize;
            if x >= self.n || std::mem::replace(&mut seen[x], true) {
                return Err(GraphError::NotAPermutation(self.n));
            }
        }
        let colours = self
            .colours
            .iter()
            .map(|edges| {
                let mut mapped: Vec<Edge> = edges
                    .iter()
                    .map(|(u, v)| canonical(pi[u as usize], pi[v as usize]))
                    .collect();
                mapped.sort_unstable();
                mapped
            })
            .collect();
        Ok(RFoldGraph::from_sorted_unchecked(self.n, colours))
    }

    /// The graph keeping only the listed colours, in the given order.
    pub fn restrict_colours(&self, colours: &[usize]) -> Result<RFoldGraph, GraphError> {
        check_colour_count(colours.len())?;
        let mut out = Vec::with_capacity(colours.len());
        for &c in colours {
            self.check_colour(c)?;
            out.push(self.colours[c].clone());
        }
        Ok(RFoldGraph::from_lists(self.n, out))
    }

    /// Single-colour connectivity by breadth-first search.
    ///
    /// Graphs with at most one vertex are connected.
    pub fn is_connected(&self, colour: usize) -> Result<bool, GraphError> {
        self.check_colour(colour)?;
        if self.n <= 1 {
            return Ok(true);
        }
        if self.colours[colour].len() < self.n - 1 {
            return Ok(false);
        }
        let adj = self.adjacency(colour);
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0 as Vertex]);
        seen[0] = true;
        let mut reached = 1usize;
        while let Some(x) = queue.pop_front() {
            for y in adj.neighbours(x) {
                if !std::mem::replace(&mut seen[y as usize], true) {
                    reached += 1;
                    queue.push_back(y);
                }
            }
        }
        Ok(reached == self.n)
    }
}
