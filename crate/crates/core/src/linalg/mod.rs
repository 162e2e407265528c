//! Dense real symmetric matrices, graph matrices, a cyclic-Jacobi
//! eigensolver, and eigenvalue clustering into (value, multiplicity) pairs.

mod jacobi;

use crate::graph::Graph;
use thiserror::Error;

/// Convergence tolerance for the eigensolver: iteration stops when the
/// off-diagonal Frobenius norm drops below `tol * (diagonal norm + 1)`.
pub const DEFAULT_EIG_TOL: f64 = 1e-12;

/// Default gap below which adjacent sorted eigenvalues merge into one
/// cluster. Distinct eigenvalues of small integer matrices sit far apart,
/// so 1e-6 separates cleanly while absorbing solver noise.
pub const DEFAULT_CLUSTER_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinalgError {
    #[error("Jacobi iteration failed to converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NonConvergence { sweeps: usize, off_norm: f64 },
}

/// Dense row-major symmetric matrix. Construction mirrors entries, so
/// `get(i, j) == get(j, i)` holds exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zero(order: usize) -> Self {
        assert!(order >= 1, "matrix order must be positive");
        SymmetricMatrix {
            order,
            entries: vec![0.0; order * order],
        }
    }

    /// Builds from a generator called once per pair `i <= j`.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = SymmetricMatrix::zero(order);
        for i in 0..order {
            for j in i..order {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.entries[i * self.order + j] = value;
        self.entries[j * self.order + i] = value;
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub(crate) fn entries(&self) -> &[f64] {
        &self.entries
    }
}

/// 0/1 adjacency matrix with zero diagonal.
pub fn adjacency_matrix(g: &Graph) -> SymmetricMatrix {
    SymmetricMatrix::from_fn(g.n(), |i, j| {
        if i != j && g.has_edge(i, j) {
            1.0
        } else {
            0.0
        }
    })
}

/// Signless Laplacian D + A (degree diagonal plus adjacency).
pub fn signless_laplacian(g: &Graph) -> SymmetricMatrix {
    SymmetricMatrix::from_fn(g.n(), |i, j| {
        if i == j {
            g.degree(i) as f64
        } else if g.has_edge(i, j) {
            1.0
        } else {
            0.0
        }
    })
}

/// All eigenvalues in descending order, by cyclic Jacobi rotation sweeps.
/// Deterministic for a fixed input. `tol` must be positive.
pub fn eigenvalues_symmetric(m: &SymmetricMatrix, tol: f64) -> Result<Vec<f64>, LinalgError> {
    assert!(tol > 0.0, "tolerance must be positive");
    let mut vals = jacobi::jacobi_eigenvalues(m, tol)?;
    vals.sort_unstable_by(|a, b| b.total_cmp(a));
    Ok(vals)
}

/// Maximum absolute eigenvalue. For the adjacency matrix of a nonempty
/// connected graph this is the largest eigenvalue (Perron).
pub fn spectral_radius(m: &SymmetricMatrix) -> f64 {
    let vals = eigenvalues_symmetric(m, DEFAULT_EIG_TOL)
        .expect("Jacobi converges on symmetric input within the sweep budget");
    vals[0].abs().max(vals[vals.len() - 1].abs())
}

/// Eigenvalue multiset clustered into (value, multiplicity) pairs.
pub fn spectrum(m: &SymmetricMatrix, cluster_tol: f64) -> Spectrum {
    let vals = eigenvalues_symmetric(m, DEFAULT_EIG_TOL)
        .expect("Jacobi converges on symmetric input within the sweep budget");
    Spectrum::from_sorted_eigenvalues(&vals, cluster_tol)
}

/// Descending eigenvalue clusters. Adjacent sorted values whose gap is at
/// most `cluster_tolerance` share a cluster; the reported value is the
/// cluster mean.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<(f64, usize)>,
    cluster_tolerance: f64,
}

impl Spectrum {
    /// `values` must be sorted descending.
    pub fn from_sorted_eigenvalues(values: &[f64], cluster_tolerance: f64) -> Spectrum {
        assert!(cluster_tolerance > 0.0, "cluster tolerance must be positive");
        debug_assert!(values.windows(2).all(|w| w[0] >= w[1]));
        let mut clusters: Vec<(f64, usize)> = Vec::new();
        let mut start = 0;
        for i in 0..values.len() {
            let is_break = i + 1 == values.len() || values[i] - values[i + 1] > cluster_tolerance;
            if is_break {
                let members = &values[start..=i];
                let mean = members.iter().sum::<f64>() / members.len() as f64;
                clusters.push((mean, members.len()));
                start = i + 1;
            }
        }
        Spectrum {
            eigenvalues: clusters,
            cluster_tolerance,
        }
    }

    /// (value, multiplicity) pairs, values descending.
    pub fn pairs(&self) -> &[(f64, usize)] {
        &self.eigenvalues
    }

    pub fn cluster_tolerance(&self) -> f64 {
        self.cluster_tolerance
    }

    /// Sum of multiplicities (the matrix order).
    pub fn order(&self) -> usize {
        self.eigenvalues.iter().map(|&(_, m)| m).sum()
    }

    /// Largest eigenvalue.
    pub fn max_eigenvalue(&self) -> f64 {
        self.eigenvalues[0].0
    }

    /// Maximum absolute eigenvalue.
    pub fn radius(&self) -> f64 {
        let first = self.eigenvalues[0].0.abs();
        let last = self.eigenvalues[self.eigenvalues.len() - 1].0.abs();
        first.max(last)
    }

    /// True iff the cluster structure matches `expected` exactly in
    /// multiplicity and within `value_tol` in value.
    pub fn matches(&self, expected: &[(f64, usize)], value_tol: f64) -> bool {
        self.eigenvalues.len() == expected.len()
            && self
                .eigenvalues
                .iter()
                .zip(expected)
                .all(|(&(v, m), &(ev, em))| m == em && (v - ev).abs() <= value_tol)
    }
}

impl std::fmt::Display for Spectrum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, (v, m)) in self.eigenvalues.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if *m == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^[{m}]")?;
            }
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphFamilySpec;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    fn ex_graph(clique: usize) -> Graph {
        GraphFamilySpec::join(
            GraphFamilySpec::Complete(clique),
            GraphFamilySpec::join(
                GraphFamilySpec::EmptyGraph(3),
                GraphFamilySpec::EmptyGraph(3),
            ),
        )
        .build()
        .unwrap()
    }

    #[test]
    fn adjacency_of_small_graphs() {
        let a = adjacency_matrix(&Graph::complete(2));
        assert_eq!(a.get(0, 1), 1.0);
        assert_eq!(a.get(0, 0), 0.0);

        let z = adjacency_matrix(&Graph::empty(3));
        assert!((0..3).all(|i| (0..3).all(|j| z.get(i, j) == 0.0)));

        let c4 = adjacency_matrix(&Graph::cycle(4));
        assert_eq!(
            (0..4).map(|j| c4.get(0, j)).collect::<Vec<_>>(),
            vec![0.0, 1.0, 0.0, 1.0]
        );
    }

    #[test]
    fn signless_laplacian_of_small_graphs() {
        let q2 = signless_laplacian(&Graph::complete(2));
        assert_eq!(q2.get(0, 0), 1.0);
        assert_eq!(q2.get(0, 1), 1.0);
        let q3 = signless_laplacian(&Graph::complete(3));
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(q3.get(i, j), if i == j { 2.0 } else { 1.0 });
            }
        }
    }

    #[test]
    fn signless_laplacian_row_sums_are_twice_degrees() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..20 {
            let n = rng.gen_range(2..=12);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.5) {
                        g.add_edge(u, v);
                    }
                }
            }
            let q = signless_laplacian(&g);
            for i in 0..n {
                let row: f64 = (0..n).map(|j| q.get(i, j)).sum();
                assert_eq!(row, 2.0 * g.degree(i) as f64);
            }
        }
    }

    #[test]
    fn eigenvalues_of_complete_graph() {
        for n in 2..=8 {
            let vals =
                eigenvalues_symmetric(&adjacency_matrix(&Graph::complete(n)), DEFAULT_EIG_TOL)
                    .unwrap();
            assert!(close(vals[0], (n - 1) as f64, 1e-10));
            for &v in &vals[1..] {
                assert!(close(v, -1.0, 1e-10));
            }
        }
    }

    #[test]
    fn eigenvalues_of_complete_bipartite() {
        for (s, t) in [(1, 1), (2, 3), (3, 3), (4, 2)] {
            let vals = eigenvalues_symmetric(
                &adjacency_matrix(&Graph::complete_bipartite(s, t)),
                DEFAULT_EIG_TOL,
            )
            .unwrap();
            let st = ((s * t) as f64).sqrt();
            assert!(close(vals[0], st, 1e-10));
            assert!(close(vals[s + t - 1], -st, 1e-10));
            for &v in &vals[1..s + t - 1] {
                assert!(close(v, 0.0, 1e-10));
            }
        }
    }

    // Frozen high-precision fixtures for the two join-family regressions.
    const RHO_21: f64 = 7.898979485566356; // 3 + 2*sqrt(6)
    const LOW_21: f64 = -1.8989794855663562; // 3 - 2*sqrt(6)

    #[test]
    fn spectrum_of_ten_vertex_join_family_graph() {
        let s = spectrum(&adjacency_matrix(&ex_graph(4)), DEFAULT_CLUSTER_TOL);
        assert!(s.matches(
            &[(RHO_21, 1), (0.0, 4), (-1.0, 3), (LOW_21, 1), (-3.0, 1)],
            1e-9
        ));
        assert!(close(
            spectral_radius(&adjacency_matrix(&ex_graph(4))),
            RHO_21,
            1e-9
        ));
    }

    #[test]
    fn spectrum_of_eleven_vertex_join_family_graph() {
        let s = spectrum(&adjacency_matrix(&ex_graph(5)), DEFAULT_CLUSTER_TOL);
        assert!(s.matches(
            &[(9.0, 1), (0.0, 4), (-1.0, 4), (-2.0, 1), (-3.0, 1)],
            1e-9
        ));
        assert_eq!(s.order(), 11);
        assert!(close(s.radius(), 9.0, 1e-9));
    }

    #[test]
    fn spectrum_clustering_basics() {
        let z = spectrum(&SymmetricMatrix::zero(3), 1e-6);
        assert_eq!(z.pairs(), &[(0.0, 3)]);
        let k4 = spectrum(&adjacency_matrix(&Graph::complete(4)), 1e-6);
        assert!(k4.matches(&[(3.0, 1), (-1.0, 3)], 1e-10));
    }

    #[test]
    fn spectral_radius_picks_largest_magnitude() {
        let mut m = SymmetricMatrix::zero(2);
        m.set(0, 0, -1.0);
        m.set(1, 1, -1.0);
        assert!(close(spectral_radius(&m), 1.0, 1e-12));
    }

    #[test]
    fn trace_and_frobenius_invariants() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        for _ in 0..40 {
            let n = rng.gen_range(2..=20);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.4) {
                        g.add_edge(u, v);
                    }
                }
            }
            let a = adjacency_matrix(&g);
            let vals = eigenvalues_symmetric(&a, DEFAULT_EIG_TOL).unwrap();
            let sum: f64 = vals.iter().sum();
            let sq: f64 = vals.iter().map(|v| v * v).sum();
            let tol = 1e-9 * n as f64;
            assert!(sum.abs() <= tol, "eigenvalue sum {sum} != trace 0");
            assert!(
                close(sq, 2.0 * g.edge_count() as f64, tol),
                "square sum {sq} != 2|E|"
            );
        }
    }

    #[test]
    fn eigenvalues_invariant_under_relabeling() {
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        for _ in 0..20 {
            let n = rng.gen_range(2..=10);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.5) {
                        g.add_edge(u, v);
                    }
                }
            }
            // random permutation by repeated swaps
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
            let va = eigenvalues_symmetric(&adjacency_matrix(&g), DEFAULT_EIG_TOL).unwrap();
            let vb = eigenvalues_symmetric(&adjacency_matrix(&h), DEFAULT_EIG_TOL).unwrap();
            for (a, b) in va.iter().zip(&vb) {
                assert!(close(*a, *b, 1e-9));
            }
        }
    }

    #[test]
    fn display_uses_multiplicity_brackets() {
        let s = Spectrum::from_sorted_eigenvalues(&[3.0, -1.0, -1.0, -1.0], 1e-6);
        assert_eq!(s.to_string(), "{3, -1^[3]}");
    }
}
