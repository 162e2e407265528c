//! Two-colorability and exact vertex bipartiteness (odd cycle transversal
//! number) by subset enumeration in increasing size order.

use super::{bits, Graph};

impl Graph {
    /// A proper 2-coloring as a pair of vertex masks, or `None` if some
    /// component contains an odd cycle. Works per connected component.
    pub fn two_coloring(&self) -> Option<[u64; 2]> {
        self.two_coloring_within(self.vertex_mask())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// 2-colors the subgraph induced on `keep` without relabeling.
    pub(crate) fn two_coloring_within(&self, keep: u64) -> Option<[u64; 2]> {
        let mut color = [0u64, 0u64];
        let mut visited = 0u64;
        while visited != keep {
            let start = (keep & !visited).trailing_zeros() as usize;
            let mut frontier = 1u64 << start;
            let mut side = 0;
            color[side] |= frontier;
            visited |= frontier;
            while frontier != 0 {
                let mut nbrs = 0u64;
                for v in bits(frontier) {
                    nbrs |= self.adj[v];
                }
                nbrs &= keep;
                if nbrs & color[side] != 0 {
                    return None; // odd cycle
                }
                side = 1 - side;
                frontier = nbrs & !visited;
                color[side] |= frontier;
                visited |= frontier;
            }
        }
        debug_assert!(bits(keep).all(|v| {
            let side = ((color[1] >> v) & 1) as usize;
            self.adj[v] & keep & color[side] == 0
        }));
        Some(color)
    }

    /// Minimum number of vertices whose deletion leaves a bipartite graph,
    /// together with one minimizing deletion set.
    ///
    /// Exact by exhaustive subset enumeration in increasing size order;
    /// worst case exponential, intended for n up to ~20.
    pub fn vertex_bipartiteness(&self) -> (usize, u64) {
        self.vertex_bipartiteness_bounded(self.n)
            .expect("a graph on at most 2 vertices is always bipartite")
    }

    /// True iff deleting some set of at most `k` vertices leaves a
    /// bipartite graph. Stops at the first success, so it is much cheaper
    /// than `vertex_bipartiteness` when `k` is small.
    pub fn vb_at_most(&self, k: usize) -> bool {
        self.vertex_bipartiteness_bounded(k).is_some()
    }

    /// Connected and vertex bipartiteness at most `k`.
    pub fn in_family(&self, k: usize) -> bool {
        self.is_connected() && self.vb_at_most(k)
    }

    fn vertex_bipartiteness_bounded(&self, max_size: usize) -> Option<(usize, u64)> {
        let all = self.vertex_mask();
        for size in 0..=max_size.min(self.n) {
            let mut it = FixedPopcount::new(self.n, size);
            while let Some(subset) = it.next() {
                if self.two_coloring_within(all & !subset).is_some() {
                    return Some((size, subset));
                }
            }
        }
        None
    }
}

/// Enumerates all `n`-bit masks with exactly `size` bits set, in
/// increasing numeric order (Gosper's hack).
struct FixedPopcount {
    next: Option<u64>,
    limit_bit: usize,
}

impl FixedPopcount {
    fn new(n: usize, size: usize) -> Self {
        let next = if size > n {
            None
        } else if size == 0 {
            Some(0)
        } else {
            Some((1u64 << (size - 1) << 1).wrapping_sub(1))
        };
        FixedPopcount {
            next,
            limit_bit: n,
        }
    }

    #[allow(clippy::should_implement_trait)]
    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            // Gosper: next mask with the same popcount.
            let low = cur & cur.wrapping_neg();
            cur.checked_add(low).map(|up| up | (((cur ^ up) / low) >> 2))
        };
        if let Some(m) = self.next {
            if self.limit_bit < 64 && m >> self.limit_bit != 0 {
                self.next = None;
            }
        }
        Some(cur)
    }
}
