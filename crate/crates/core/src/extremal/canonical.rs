//! Canonical labeled forms: the lexicographically minimal packed
//! adjacency mask over all vertex relabelings, found by a pruned
//! depth-first search over partial labelings. Exact and intended for the
//! search scale (the packed mask caps n at 11).

use crate::graph::Graph;

/// Number of upper-triangle bits for n vertices.
pub(crate) fn mask_bits(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Packs the strict upper triangle into an integer in column-major pair
/// order (0,1), (0,2), (1,2), (0,3), ... with the first pair most
/// significant, so integer order is lexicographic order on that sequence.
pub(crate) fn mask_from_adj(n: usize, adj: &[u64]) -> u64 {
    let mut mask = 0u64;
    for j in 1..n {
        for row in &adj[..j] {
            mask = (mask << 1) | ((row >> j) & 1);
        }
    }
    mask
}

/// Rebuilds a graph from a packed mask.
pub(crate) fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n);
    let mut pos = mask_bits(n);
    for j in 1..n {
        for i in 0..j {
            pos -= 1;
            if (mask >> pos) & 1 == 1 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Bits of the column a new vertex `v` contributes when appended after
/// `placed`, first placed vertex most significant.
#[inline]
fn column_bits(adj: &[u64], placed: &[usize], v: usize) -> u64 {
    let mut col = 0u64;
    for &u in placed {
        col = (col << 1) | ((adj[u] >> v) & 1);
    }
    col
}

/// Minimal packed mask over all relabelings of the graph given by
/// neighbor masks `adj`.
pub(crate) fn minimal_mask(n: usize, adj: &[u64]) -> u64 {
    assert!(n <= 11, "packed adjacency masks require n*(n-1)/2 <= 64 bits");
    if n == 1 {
        return 0;
    }
    let mut best = mask_from_adj(n, adj);
    let mut placed = Vec::with_capacity(n);
    minimize(n, adj, &mut placed, 0, 0, &mut best);
    best
}

/// Unplaced vertices paired with their column values, ascending. Fixed
/// storage; n never exceeds 11 here.
#[inline]
fn sorted_candidates(
    n: usize,
    adj: &[u64],
    placed: &[usize],
    used: u64,
    buf: &mut [(u64, usize); 11],
) -> usize {
    let mut len = 0;
    for v in 0..n {
        if used & (1 << v) == 0 {
            buf[len] = (column_bits(adj, placed, v), v);
            len += 1;
        }
    }
    buf[..len].sort_unstable();
    len
}

fn minimize(n: usize, adj: &[u64], placed: &mut Vec<usize>, used: u64, prefix: u64, best: &mut u64) {
    let depth = placed.len();
    if depth == n {
        if prefix < *best {
            *best = prefix;
        }
        return;
    }
    // candidates ordered by ascending column value reach small labelings
    // first, which sharpens the prune
    let mut buf = [(0u64, 0usize); 11];
    let len = sorted_candidates(n, adj, placed, used, &mut buf);
    let filled = mask_bits(depth) + depth; // bits after appending one column
    for &(col, v) in &buf[..len] {
        let new_prefix = (prefix << depth) | col;
        if new_prefix > (*best >> (mask_bits(n) - filled)) {
            break; // larger columns only get worse
        }
        placed.push(v);
        minimize(n, adj, placed, used | (1 << v), new_prefix, best);
        placed.pop();
    }
}

/// True iff the packed mask of `adj` (in its current labeling) is already
/// the minimum over all relabelings. Early-exits on the first witness of
/// a smaller labeling, which makes it cheap inside enumeration loops.
pub(crate) fn is_minimal_mask(n: usize, adj: &[u64], mask: u64) -> bool {
    if n <= 1 {
        return true;
    }
    let mut placed = Vec::with_capacity(n);
    confirm_minimal(n, adj, mask, &mut placed, 0)
}

fn confirm_minimal(n: usize, adj: &[u64], mask: u64, placed: &mut Vec<usize>, used: u64) -> bool {
    let depth = placed.len();
    if depth == n {
        return true; // an automorphism, not a smaller labeling
    }
    let total = mask_bits(n);
    let col_shift = total - mask_bits(depth) - depth;
    let target = (mask >> col_shift) & ((1u64 << depth) - 1);
    let mut buf = [(0u64, 0usize); 11];
    let len = sorted_candidates(n, adj, placed, used, &mut buf);
    for &(col, v) in &buf[..len] {
        if col < target {
            return false; // any completion beats the current labeling
        }
        if col > target {
            break;
        }
        placed.push(v);
        let ok = confirm_minimal(n, adj, mask, placed, used | (1 << v));
        placed.pop();
        if !ok {
            return false;
        }
    }
    true
}

/// The canonical representative of `g`'s isomorphism class: the
/// relabeling with minimal packed adjacency mask.
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.n();
    let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v)).collect();
    graph_from_mask(n, minimal_mask(n, &adj))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && canonical_form(a) == canonical_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn mask_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        for _ in 0..50 {
            let n = rng.gen_range(1..=11);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.5) {
                        g.add_edge(u, v);
                    }
                }
            }
            let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v)).collect();
            let mask = mask_from_adj(n, &adj);
            assert_eq!(graph_from_mask(n, mask), g);
        }
    }

    #[test]
    fn canonical_form_is_a_relabeling_and_a_fixpoint() {
        let mut rng = ChaCha8Rng::seed_from_u64(62);
        for _ in 0..40 {
            let n = rng.gen_range(2..=8);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.4) {
                        g.add_edge(u, v);
                    }
                }
            }
            let c = canonical_form(&g);
            assert_eq!(c.n(), n);
            assert_eq!(c.edge_count(), g.edge_count());
            assert_eq!(c.degree_sequence(), g.degree_sequence());
            assert_eq!(canonical_form(&c), c);
        }
    }

    #[test]
    fn canonical_form_identifies_isomorphic_relabelings() {
        let mut rng = ChaCha8Rng::seed_from_u64(63);
        for _ in 0..40 {
            let n = rng.gen_range(2..=8);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.5) {
                        g.add_edge(u, v);
                    }
                }
            }
            let mut perm: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                perm.swap(i, rng.gen_range(0..=i));
            }
            let mut h = Graph::empty(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if g.has_edge(u, v) {
                        h.add_edge(perm[u], perm[v]);
                    }
                }
            }
            assert!(are_isomorphic(&g, &h));
            assert_eq!(canonical_form(&g), canonical_form(&h));
        }
    }

    #[test]
    fn non_isomorphic_graphs_get_distinct_forms() {
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(!are_isomorphic(&path, &star));
        assert!(are_isomorphic(&Graph::cycle(4), &{
            // C_4 with crossed labels
            Graph::from_edges(4, &[(0, 2), (2, 1), (1, 3), (3, 0)])
        }));
    }

    #[test]
    fn is_minimal_agrees_with_minimal_mask() {
        let mut rng = ChaCha8Rng::seed_from_u64(64);
        for _ in 0..400 {
            let n = rng.gen_range(2..=7);
            let mut adj = vec![0u64; n];
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.5) {
                        adj[u] |= 1 << v;
                        adj[v] |= 1 << u;
                    }
                }
            }
            let mask = mask_from_adj(n, &adj);
            assert_eq!(
                is_minimal_mask(n, &adj, mask),
                minimal_mask(n, &adj) == mask
            );
        }
    }

    #[test]
    fn highly_symmetric_graphs() {
        // complete graphs are their own canonical forms (all-ones mask)
        for n in 2..=8 {
            let g = Graph::complete(n);
            assert_eq!(canonical_form(&g), g);
        }
        // the empty graph likewise (all-zeros)
        assert_eq!(canonical_form(&Graph::empty(6)), Graph::empty(6));
    }
}
