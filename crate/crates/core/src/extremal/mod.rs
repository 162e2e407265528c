//! The candidate spectral-radius maximizer among connected n-vertex
//! graphs with vertex bipartiteness at most k, its closed-form spectral
//! radius (the flawed original expression and the corrected one), the
//! supporting quotient-matrix machinery, counterexample reports, and an
//! exhaustive small-n search that certifies extremality.

mod canonical;
mod counterexample;
mod search;

pub use canonical::{are_isomorphic, canonical_form};
pub use counterexample::{
    reproduce_counterexample, reproduce_counterexample_with_tol, CounterexampleId,
    CounterexampleReport,
};
pub use search::{extremal_search, extremal_search_with_workers, SearchCertificate};

use crate::graph::{Graph, GraphFamilySpec};
use crate::linalg::{
    adjacency_matrix, spectral_radius, Spectrum, DEFAULT_CLUSTER_TOL, DEFAULT_EIG_TOL,
};
use crate::quotient::{
    equitable_violation, quotient_eigenvalues, QuotientError, QuotientMatrix, VertexPartition,
};
use thiserror::Error;

/// Tolerance for "this closed form equals that eigensolver output".
pub const AGREEMENT_TOL: f64 = 1e-8;

/// Spectral radii within this distance count as tied in search results.
pub const DEFAULT_SEARCH_TOL: f64 = 1e-7;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExtremalError {
    #[error("invalid parameters n={n}, k={k}: need 1 <= k <= n-3 and n <= 64")]
    InvalidParameters { n: usize, k: usize },
    #[error("n-k is odd for n={n}, k={k}; the even closed form does not apply, use the quotient route")]
    OddParity { n: usize, k: usize },
    #[error("exhaustive search supports 4 <= n <= 8, got n={n}")]
    SearchRange { n: usize },
    #[error("negative discriminant for n={n}, k={k}")]
    NegativeDiscriminant { n: usize, k: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error(transparent)]
    Quotient(#[from] QuotientError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// A validated (n, k) pair with the block layout of the candidate graph
/// K_k v (comp K_a v comp K_b): a = floor((n-k)/2), b = n-k-a.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtremalInstance {
    n: usize,
    k: usize,
    parity: Parity,
}

impl ExtremalInstance {
    pub fn new(n: usize, k: usize) -> Result<Self, ExtremalError> {
        if n > crate::graph::MAX_VERTICES || k == 0 || k + 3 > n {
            return Err(ExtremalError::InvalidParameters { n, k });
        }
        let parity = if (n - k).is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        };
        Ok(ExtremalInstance { n, k, parity })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// (clique size, larger independent-set size, smaller size).
    pub fn block_sizes(&self) -> (usize, usize, usize) {
        let rem = self.n - self.k;
        (self.k, rem - rem / 2, rem / 2)
    }

    pub fn family_spec(&self) -> GraphFamilySpec {
        let rem = self.n - self.k;
        GraphFamilySpec::join(
            GraphFamilySpec::Complete(self.k),
            GraphFamilySpec::join(
                GraphFamilySpec::EmptyGraph(rem / 2),
                GraphFamilySpec::EmptyGraph(rem - rem / 2),
            ),
        )
    }

    /// The candidate graph, labeled clique first, then the floor-sized
    /// independent set, then the other one.
    pub fn build(&self) -> Graph {
        self.family_spec()
            .build()
            .expect("validated parameters fit the capacity")
    }

    /// Ordered blocks (clique, larger independent set, smaller), matching
    /// the row order of the 3x3 quotient.
    pub fn natural_partition(&self) -> VertexPartition {
        let (k, _, smaller) = self.block_sizes();
        let clique = mask_range(0, k);
        let first = mask_range(k, k + smaller);
        let second = mask_range(k + smaller, self.n);
        // for odd n-k the floor-sized (smaller) set is labeled first, so
        // the larger block is the second label range; for even they tie
        VertexPartition::new(self.n, vec![clique, second, first])
            .expect("ranges partition the vertex set")
    }

    /// The 3x3 quotient of the candidate under the natural partition,
    /// built directly from the block counts.
    pub fn quotient(&self) -> QuotientMatrix {
        let (k, larger, smaller) = self.block_sizes();
        let (kf, lf, sf) = (k as f64 - 1.0, larger as f64, smaller as f64);
        let entries = vec![
            kf,
            lf,
            sf,
            k as f64,
            0.0,
            sf,
            k as f64,
            lf,
            0.0,
        ];
        QuotientMatrix::from_entries(entries, vec![k, larger, smaller], true)
    }

    /// Spectral radius of the candidate by the parity-appropriate route:
    /// the corrected closed form when n-k is even, the maximal eigenvalue
    /// of the 3x3 quotient when odd.
    pub fn spectral_radius(&self) -> f64 {
        match self.parity {
            Parity::Even => corrected_formula_even(self.n, self.k)
                .expect("validated even instance"),
            Parity::Odd => self.quotient().max_eigenvalue(),
        }
    }
}

fn mask_range(a: usize, b: usize) -> u64 {
    let hi = if b == 64 { u64::MAX } else { (1u64 << b) - 1 };
    let lo = (1u64 << a) - 1;
    hi ^ lo
}

/// Builds the candidate graph for (n, k).
pub fn build_extremal(n: usize, k: usize) -> Result<Graph, ExtremalError> {
    Ok(ExtremalInstance::new(n, k)?.build())
}

/// Corrected closed-form spectral radius of the candidate, even n-k only:
/// (n + k - 2 + sqrt(-7k^2 + 10kn - 12k + n^2 + 4n + 4)) / 4.
pub fn corrected_formula_even(n: usize, k: usize) -> Result<f64, ExtremalError> {
    let inst = ExtremalInstance::new(n, k)?;
    if inst.parity() == Parity::Odd {
        return Err(ExtremalError::OddParity { n, k });
    }
    let (nf, kf) = (n as f64, k as f64);
    let disc = -7.0 * kf * kf + 10.0 * kf * nf - 12.0 * kf + nf * nf + 4.0 * nf + 4.0;
    if disc < 0.0 {
        // cannot happen for 1 <= k <= n-3; guarded anyway
        return Err(ExtremalError::NegativeDiscriminant { n, k });
    }
    Ok((nf + kf - 2.0 + disc.sqrt()) / 4.0)
}

/// The previously published (incorrect) closed form, kept to demonstrate
/// the counterexamples:
/// ((n + k - 2)/2 + sqrt(k^2 + (3k - 1)(n - k) + ((n - k + 2)/2)^2)) / 2.
pub fn original_formula_even(n: usize, k: usize) -> Result<f64, ExtremalError> {
    if k > n {
        return Err(ExtremalError::InvalidParameters { n, k });
    }
    if !(n - k).is_multiple_of(2) {
        return Err(ExtremalError::OddParity { n, k });
    }
    let (nf, kf) = (n as f64, k as f64);
    let inner = kf * kf + (3.0 * kf - 1.0) * (nf - kf) + ((nf - kf + 2.0) / 2.0).powi(2);
    Ok(0.5 * ((nf + kf - 2.0) / 2.0 + inner.sqrt()))
}

/// The 3x3 quotient of the candidate graph under its natural partition.
/// Even n-k (m = (n-k)/2):        [[k-1, m, m], [k, 0, m], [k, m, 0]]
/// Odd n-k (s = (n-k-1)/2):       [[k-1, s+1, s], [k, 0, s], [k, s+1, 0]]
pub fn quotient_matrix_for_extremal(n: usize, k: usize) -> Result<QuotientMatrix, ExtremalError> {
    Ok(ExtremalInstance::new(n, k)?.quotient())
}

/// Evaluates the factored characteristic polynomial of the even-case
/// quotient at `lambda`:
/// (lambda + (n-k)/2) * [lambda^2 + (1 - (n-k)/2 - k) lambda - (k+1)(n-k)/2].
pub fn char_poly_even_factored(n: usize, k: usize, lambda: f64) -> Result<f64, ExtremalError> {
    let inst = ExtremalInstance::new(n, k)?;
    if inst.parity() == Parity::Odd {
        return Err(ExtremalError::OddParity { n, k });
    }
    let m = (n - k) as f64 / 2.0;
    let kf = k as f64;
    Ok((lambda + m) * (lambda * lambda + (1.0 - m - kf) * lambda - (kf + 1.0) * m))
}

/// All three quotient eigenvalues in closed form for even n-k,
/// descending: {(k-n)/2} and (n + k - 2 +- sqrt(disc)) / 4.
pub fn quotient_spectrum_even_closed_form(n: usize, k: usize) -> Result<[f64; 3], ExtremalError> {
    let inst = ExtremalInstance::new(n, k)?;
    if inst.parity() == Parity::Odd {
        return Err(ExtremalError::OddParity { n, k });
    }
    let (nf, kf) = (n as f64, k as f64);
    let disc = -7.0 * kf * kf + 10.0 * kf * nf - 12.0 * kf + nf * nf + 4.0 * nf + 4.0;
    if disc < 0.0 {
        return Err(ExtremalError::NegativeDiscriminant { n, k });
    }
    let root = disc.sqrt();
    let mut vals = [
        (nf + kf - 2.0 + root) / 4.0,
        (nf + kf - 2.0 - root) / 4.0,
        (kf - nf) / 2.0,
    ];
    vals.sort_unstable_by(|a, b| b.total_cmp(a));
    Ok(vals)
}

/// Full spectrum of the candidate for even n-k, assembled without an
/// eigensolver: the three quotient eigenvalues, -1 with multiplicity
/// k - 1, and 0 with multiplicity n - k - 2.
pub fn predicted_full_spectrum_even(n: usize, k: usize) -> Result<Spectrum, ExtremalError> {
    let quot = quotient_spectrum_even_closed_form(n, k)?;
    let mut vals = Vec::with_capacity(n);
    vals.extend_from_slice(&quot);
    vals.extend(std::iter::repeat_n(-1.0, k - 1));
    vals.extend(std::iter::repeat_n(0.0, n - k - 2));
    vals.sort_unstable_by(|a, b| b.total_cmp(a));
    Ok(Spectrum::from_sorted_eigenvalues(&vals, DEFAULT_CLUSTER_TOL))
}

/// Spectral radius of the candidate by the parity-appropriate route.
pub fn candidate_spectral_radius(n: usize, k: usize) -> Result<f64, ExtremalError> {
    Ok(ExtremalInstance::new(n, k)?.spectral_radius())
}

/// For a connected graph with an equitable partition, the maximal
/// quotient eigenvalue must equal the full spectral radius, and the
/// dominant eigenvector of the adjacency matrix must be entrywise
/// positive (verified by power iteration).
pub fn perron_check(g: &Graph, p: &VertexPartition) -> Result<bool, ExtremalError> {
    if !g.is_connected() {
        return Err(ExtremalError::NotConnected);
    }
    if let Some((block_i, block_j)) = equitable_violation(g, p) {
        return Err(QuotientError::NotEquitable { block_i, block_j }.into());
    }
    let a = adjacency_matrix(g);
    let rho = spectral_radius(&a);
    let quot = quotient_eigenvalues(&a, p, DEFAULT_EIG_TOL).map_err(QuotientError::from)?;
    let radii_agree = (quot[0] - rho).abs() <= AGREEMENT_TOL;
    Ok(radii_agree && dominant_eigenvector_is_positive(&a))
}

/// Power iteration on A + I (primitive for connected graphs) from the
/// all-ones direction; reports whether the limit is entrywise positive.
fn dominant_eigenvector_is_positive(a: &crate::linalg::SymmetricMatrix) -> bool {
    let n = a.order();
    let mut v = vec![1.0 / (n as f64).sqrt(); n];
    let mut w = vec![0.0; n];
    for _ in 0..10_000 {
        for i in 0..n {
            let mut acc = v[i];
            for (j, vj) in v.iter().enumerate() {
                acc += a.get(i, j) * vj;
            }
            w[i] = acc;
        }
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 {
            return false;
        }
        let mut delta = 0.0f64;
        for i in 0..n {
            let next = w[i] / norm;
            delta = delta.max((next - v[i]).abs());
            v[i] = next;
        }
        if delta < 1e-13 {
            break;
        }
    }
    v.iter().all(|&x| x > 0.0)
}
