//! Undirected simple graphs on at most 64 labeled vertices, one `u64`
//! neighbor bitset per vertex.

mod bipartite;
mod family;
mod graph6;

pub use family::GraphFamilySpec;
pub use graph6::from_graph6;

use thiserror::Error;

/// Hard capacity: neighbor sets are single machine words.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph capacity exceeded: {requested} vertices (max {MAX_VERTICES})")]
    Capacity { requested: usize },
    #[error("family spec contains a zero-size part; every size must be at least 1")]
    ZeroSizePart,
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
}

/// Iterates the set bit indices of a mask, ascending.
pub fn bits(mask: u64) -> BitIter {
    BitIter(mask)
}

pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

#[inline]
const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// An undirected simple graph with vertices labeled `0..n`.
///
/// Equality and hashing are on the labeled graph; isomorphism-aware
/// comparisons live in the `extremal` module.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices. Panics unless `1 <= n <= 64`.
    pub fn empty(n: usize) -> Self {
        assert!((1..=MAX_VERTICES).contains(&n), "vertex count {n} out of range");
        Graph {
            n,
            adj: vec![0; n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        let all = g.vertex_mask();
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        g
    }

    /// Cycle `0-1-...-(n-1)-0`. Panics unless `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::empty(n);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
        g
    }

    pub fn complete_bipartite(s: usize, t: usize) -> Self {
        Graph::empty(s)
            .join(&Graph::empty(t))
            .expect("complete_bipartite sizes exceed capacity")
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Wraps prevalidated neighbor masks (symmetric, loop-free, in range).
    pub(crate) fn from_neighbor_masks(n: usize, adj: &[u64]) -> Self {
        debug_assert_eq!(adj.len(), n);
        debug_assert!((0..n).all(|v| adj[v] & (1 << v) == 0));
        debug_assert!((0..n).all(|u| (0..n).all(|v| adj[u] >> v & 1 == adj[v] >> u & 1)));
        Graph {
            n,
            adj: adj.to_vec(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Mask with one bit per vertex.
    pub fn vertex_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            bit(self.n) - 1
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range");
        assert!(u != v, "self-loop at {u}");
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Same vertices, all non-loop adjacencies flipped.
    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        Graph {
            n: self.n,
            adj: (0..self.n).map(|v| all & !self.adj[v] & !bit(v)).collect(),
        }
    }

    /// Join: disjoint union plus all edges between the two vertex sets.
    /// `self`'s vertices keep their labels; `other`'s are shifted up.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::Capacity { requested: n });
        }
        let full = if n == 64 { u64::MAX } else { bit(n) - 1 };
        let left_mask = self.vertex_mask();
        let right_mask = full ^ left_mask;
        let mut adj = Vec::with_capacity(n);
        for v in 0..self.n {
            adj.push(self.adj[v] | right_mask);
        }
        for v in 0..other.n {
            adj.push((other.adj[v] << self.n) | left_mask);
        }
        Ok(Graph { n, adj })
    }

    /// Induced subgraph on the vertices of `keep`, relabeled `0..` in
    /// ascending label order. Panics if `keep` is empty or out of range.
    pub fn induced_subgraph(&self, keep: u64) -> Graph {
        assert!(keep != 0, "induced subgraph must keep at least one vertex");
        assert_eq!(keep & !self.vertex_mask(), 0, "keep mask out of range");
        let old: Vec<usize> = bits(keep).collect();
        let mut g = Graph::empty(old.len());
        for (iu, &u) in old.iter().enumerate() {
            for (iv, &v) in old.iter().enumerate().skip(iu + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(iu, iv);
                }
            }
        }
        g
    }

    /// True iff a breadth-first traversal from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> bool {
        connected_mask(&self.adj, bit(0)) == self.vertex_mask()
    }
}

/// Expands `seed` along `adj` until no new vertex is reached.
pub(crate) fn connected_mask(adj: &[u64], seed: u64) -> u64 {
    let mut reach = seed;
    loop {
        let mut next = reach;
        for v in bits(reach) {
            next |= adj[v];
        }
        if next == reach {
            return reach;
        }
        reach = next;
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, g6={})", self.n, self.to_graph6())
    }
}
