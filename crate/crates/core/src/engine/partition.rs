//! Disjoint-set partition of the vertex set with per-cluster member lists.

use serde::{Serialize, Serializer};

use crate::graph::Vertex;

/// Union-find over `0..n` with path compression, union by rank, cluster
/// sizes, and a circular member list per cluster (O(1) concatenation).
#[derive(Clone, Debug)]
pub struct Partition {
    parent: Vec<Vertex>,
    rank: Vec<u8>,
    size: Vec<u32>,
    next: Vec<Vertex>,
    cluster_count: usize,
}

impl Partition {
    /// The discrete partition into singletons.
    pub fn new(n: usize) -> Self {
        Partition {
            parent: (0..n as Vertex).collect(),
            rank: vec![0; n],
            size: vec![1; n],
            next: (0..n as Vertex).collect(),
            cluster_count: n,
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn cluster_count(&self) -> usize {
        self.cluster_count
    }

    #[inline]
    pub fn is_root(&self, v: Vertex) -> bool {
        self.parent[v as usize] == v
    }

    #[inline]
    pub fn find(&mut self, v: Vertex) -> Vertex {
        let mut root = v;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut x = v;
        while self.parent[x as usize] != root {
            let up = self.parent[x as usize];
            self.parent[x as usize] = root;
            x = up;
        }
        root
    }

    /// Root lookup without path compression.
    pub fn find_const(&self, mut v: Vertex) -> Vertex {
        while self.parent[v as usize] != v {
            v = self.parent[v as usize];
        }
        v
    }

    pub fn same(&mut self, a: Vertex, b: Vertex) -> bool {
        self.find(a) == self.find(b)
    }

    /// Size of the cluster rooted at `root`.
    #[inline]
    pub fn size_of_root(&self, root: Vertex) -> usize {
        debug_assert!(self.is_root(root));
        self.size[root as usize] as usize
    }

    pub fn size_of(&mut self, v: Vertex) -> usize {
        let root = self.find(v);
        self.size[root as usize] as usize
    }

    /// Merges the clusters of `a` and `b` by rank. Returns the new root, or
    /// `None` when they already share a cluster.
    pub fn union(&mut self, a: Vertex, b: Vertex) -> Option<Vertex> {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return None;
        }
        if self.rank[ra as usize] < self.rank[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.attach(rb, ra);
        Some(ra)
    }

    /// Hangs root `child` under root `parent`.
    ///
    /// Used by engines that must control which root survives.
    pub fn attach(&mut self, child: Vertex, parent: Vertex) {
        assert!(self.is_root(child) && self.is_root(parent) && child != parent);
        let (c, p) = (child as usize, parent as usize);
        self.parent[c] = parent;
        self.size[p] += self.size[c];
        self.rank[p] = self.rank[p].max(self.rank[c].saturating_add(1));
        self.next.swap(c, p);
        self.cluster_count -= 1;
    }

    /// The member after `v` in its cluster's circular list.
    #[inline]
    pub fn next_member(&self, v: Vertex) -> Vertex {
        self.next[v as usize]
    }

    /// Members of the cluster containing `v`, starting at `v`.
    pub fn members(&self, v: Vertex) -> Members<'_> {
        Members {
            next: &self.next,
            start: v,
            cur: Some(v),
        }
    }

    pub fn roots(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.len() as Vertex).filter(|&v| self.is_root(v))
    }

    pub fn max_cluster_size(&self) -> usize {
        self.roots().map(|r| self.size[r as usize] as usize).max().unwrap_or(0)
    }

    /// Clusters as sorted vertex lists, ordered by smallest member.
    pub fn clusters(&self) -> Vec<Vec<Vertex>> {
        let mut out: Vec<Vec<Vertex>> = self
            .roots()
            .map(|r| {
                let mut m: Vec<Vertex> = self.members(r).collect();
                m.sort_unstable();
                m
            })
            .collect();
        out.sort_unstable_by_key(|c| c[0]);
        out
    }

    /// Canonical labelling: vertex `v` gets the index of its cluster in
    /// [`Partition::clusters`] order. Equal labellings mean equal partitions.
    pub fn canonical_labels(&self) -> Vec<u32> {
        let mut label = vec![u32::MAX; self.len()];
        let mut root_label = vec![u32::MAX; self.len()];
        let mut next_label = 0;
        for v in 0..self.len() as Vertex {
            let r = self.find_const(v) as usize;
            if root_label[r] == u32::MAX {
                root_label[r] = next_label;
                next_label += 1;
            }
            label[v as usize] = root_label[r];
        }
        label
    }

    /// Whether two partitions of the same ground set are equal as set partitions.
    pub fn same_partition(&self, other: &Partition) -> bool {
        self.len() == other.len() && self.canonical_labels() == other.canonical_labels()
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.clusters().serialize(s)
    }
}

pub struct Members<'a> {
    next: &'a [Vertex],
    start: Vertex,
    cur: Option<Vertex>,
}

impl Iterator for Members<'_> {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        let v = self.cur?;
        let nx = self.next[v as usize];
        self.cur = (nx != self.start).then_some(nx);
        Some(v)
    }
}
