//! Edge storage for one colour class.

use super::{Edge, Vertex};

/// Sorted canonical edges `(u, v)`, `u < v`, stored as a forward star: the
/// heads `v` of all edges with tail `u` form the contiguous sorted slice
/// `heads[offsets[u]..offsets[u + 1]]`. Iteration yields edges in
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeList {
    offsets: Vec<usize>,
    heads: Vec<Vertex>,
}

impl EdgeList {
    pub fn empty(n: usize) -> Self {
        EdgeList {
            offsets: vec![0; n + 1],
            heads: Vec::new(),
        }
    }

    /// From edges that are canonical and strictly increasing.
    pub(crate) fn from_sorted(n: usize, edges: &[Edge]) -> Self {
        let mut builder = EdgeListBuilder::with_capacity(n, edges.len());
        for &(u, v) in edges {
            builder.push(u, v);
        }
        builder.finish()
    }

    /// Number of vertices the list is defined over.
    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn len(&self) -> usize {
        self.heads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heads.is_empty()
    }

    /// Heads of the edges whose smaller endpoint is `u` (all `> u`, sorted).
    #[inline]
    pub fn forward(&self, u: Vertex) -> &[Vertex] {
        &self.heads[self.offsets[u as usize]..self.offsets[u as usize + 1]]
    }

    #[inline]
    pub fn contains(&self, a: Vertex, b: Vertex) -> bool {
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        u != v && self.forward(u).binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = Edge> + '_ {
        EdgeIter {
            list: self,
            tail: 0,
            pos: 0,
        }
    }

    pub fn first(&self) -> Option<Edge> {
        self.iter().next()
    }

    pub fn to_vec(&self) -> Vec<Edge> {
        self.iter().collect()
    }

    pub fn heap_bytes(&self) -> usize {
        self.offsets.capacity() * std::mem::size_of::<usize>()
            + self.heads.capacity() * std::mem::size_of::<Vertex>()
    }
}

struct EdgeIter<'a> {
    list: &'a EdgeList,
    tail: usize,
    pos: usize,
}

impl Iterator for EdgeIter<'_> {
    type Item = Edge;

    #[inline]
    fn next(&mut self) -> Option<Edge> {
        let heads = &self.list.heads;
        if self.pos >= heads.len() {
            return None;
        }
        while self.list.offsets[self.tail + 1] <= self.pos {
            self.tail += 1;
        }
        let e = (self.tail as Vertex, heads[self.pos]);
        self.pos += 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.list.heads.len() - self.pos;
        (left, Some(left))
    }
}

impl ExactSizeIterator for EdgeIter<'_> {}

/// Appends edges in lexicographic order.
pub(crate) struct EdgeListBuilder {
    n: usize,
    offsets: Vec<usize>,
    heads: Vec<Vertex>,
}

impl EdgeListBuilder {
    pub(crate) fn with_capacity(n: usize, edges: usize) -> Self {
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        EdgeListBuilder {
            n,
            offsets,
            heads: Vec::with_capacity(edges),
        }
    }

    /// `(u, v)` must be canonical and follow every edge pushed before it.
    #[inline]
    pub(crate) fn push(&mut self, u: Vertex, v: Vertex) {
        debug_assert!(u < v && (v as usize) < self.n);
        while self.offsets.len() <= u as usize {
            self.offsets.push(self.heads.len());
        }
        debug_assert!(self.offsets.len() == u as usize + 1);
        debug_assert!(self.heads.len() == self.offsets[u as usize] || *self.heads.last().unwrap() < v);
        self.heads.push(v);
    }

    pub(crate) fn finish(mut self) -> EdgeList {
        while self.offsets.len() <= self.n {
            self.offsets.push(self.heads.len());
        }
        self.heads.shrink_to_fit();
        EdgeList {
            offsets: self.offsets,
            heads: self.heads,
        }
    }
}

/// Full neighbourhoods of one colour: the forward star of the edge list plus
/// a reverse index built on demand. Neighbour lists are sorted.
#[derive(Clone, Debug)]
pub struct Adjacency<'g> {
    forward: &'g EdgeList,
    back_offsets: Vec<usize>,
    back: Vec<Vertex>,
}

impl<'g> Adjacency<'g> {
    pub fn build(edges: &'g EdgeList) -> Self {
        let n = edges.vertex_count();
        let mut back_offsets = vec![0usize; n + 1];
        for &v in &edges.heads {
            back_offsets[v as usize + 1] += 1;
        }
        for i in 0..n {
            back_offsets[i + 1] += back_offsets[i];
        }
        let mut cursor = back_offsets.clone();
        let mut back = vec![0 as Vertex; edges.len()];
        // Tails arrive in ascending order, so every reverse row comes out sorted.
        for u in 0..n {
            for &v in edges.forward(u as Vertex) {
                back[cursor[v as usize]] = u as Vertex;
                cursor[v as usize] += 1;
            }
        }
        Adjacency {
            forward: edges,
            back_offsets,
            back,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.back_offsets.len() - 1
    }

    /// Neighbours smaller than `v`.
    #[inline]
    pub fn backward(&self, v: Vertex) -> &[Vertex] {
        &self.back[self.back_offsets[v as usize]..self.back_offsets[v as usize + 1]]
    }

    /// Neighbours larger than `v`.
    #[inline]
    pub fn forward(&self, v: Vertex) -> &[Vertex] {
        self.forward.forward(v)
    }

    /// All neighbours of `v` in ascending order.
    #[inline]
    pub fn neighbours(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.backward(v).iter().chain(self.forward(v)).copied()
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.backward(v).len() + self.forward(v).len()
    }

    #[inline]
    pub fn contains(&self, a: Vertex, b: Vertex) -> bool {
        self.forward.contains(a, b)
    }

    /// Heap memory owned by the reverse index.
    pub fn heap_bytes(&self) -> usize {
        self.back_offsets.capacity() * std::mem::size_of::<usize>()
            + self.back.capacity() * std::mem::size_of::<Vertex>()
    }
}
