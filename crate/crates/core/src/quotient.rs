//! Vertex partitions, equitable-partition detection, quotient matrices,
//! and eigenvalue interlacing checks.
//!
//! Eigenvalues of a quotient matrix are computed through the symmetrized
//! form B = S^T M S (S the normalized characteristic matrix of the
//! partition), which is similar to the raw quotient and keeps the
//! symmetric eigensolver sufficient.

use crate::graph::{bits, Graph};
use crate::linalg::{eigenvalues_symmetric, LinalgError, SymmetricMatrix, DEFAULT_EIG_TOL};
use thiserror::Error;

/// Slack allowed on each interlacing comparison.
pub const INTERLACING_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuotientError {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("quotient has {quotient} eigenvalues but the full matrix only {full}")]
    SizeMismatch { full: usize, quotient: usize },
    #[error("partition is not equitable: vertices of block {block_i} see unequal neighbor counts in block {block_j}")]
    NotEquitable { block_i: usize, block_j: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Ordered partition of `0..n` into disjoint nonempty vertex masks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    n: usize,
    blocks: Vec<u64>,
}

impl VertexPartition {
    pub fn new(n: usize, blocks: Vec<u64>) -> Result<Self, QuotientError> {
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut seen = 0u64;
        if blocks.is_empty() {
            return Err(QuotientError::InvalidPartition("no blocks".into()));
        }
        for (i, &b) in blocks.iter().enumerate() {
            if b == 0 {
                return Err(QuotientError::InvalidPartition(format!(
                    "block {i} is empty"
                )));
            }
            if b & !full != 0 {
                return Err(QuotientError::InvalidPartition(format!(
                    "block {i} contains vertices outside 0..{n}"
                )));
            }
            if b & seen != 0 {
                return Err(QuotientError::InvalidPartition(format!(
                    "block {i} overlaps an earlier block"
                )));
            }
            seen |= b;
        }
        if seen != full {
            return Err(QuotientError::InvalidPartition(
                "blocks do not cover the vertex set".into(),
            ));
        }
        Ok(VertexPartition { n, blocks })
    }

    /// Each vertex in its own block.
    pub fn singletons(n: usize) -> Self {
        VertexPartition {
            n,
            blocks: (0..n).map(|v| 1u64 << v).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.count_ones() as usize).collect()
    }
}

/// True iff for every ordered block pair (i, j), all vertices of block i
/// have the same number of neighbors in block j. Exact integer counts.
pub fn is_equitable(g: &Graph, p: &VertexPartition) -> bool {
    equitable_violation(g, p).is_none()
}

/// First ordered block pair witnessing non-equitability, if any.
pub(crate) fn equitable_violation(g: &Graph, p: &VertexPartition) -> Option<(usize, usize)> {
    assert_eq!(p.n(), g.n(), "partition does not match the graph order");
    for (i, &bi) in p.blocks().iter().enumerate() {
        for (j, &bj) in p.blocks().iter().enumerate() {
            let mut count: Option<u32> = None;
            for v in bits(bi) {
                let c = (g.neighbors(v) & bj).count_ones();
                match count {
                    None => count = Some(c),
                    Some(c0) if c0 != c => return Some((i, j)),
                    _ => {}
                }
            }
        }
    }
    None
}

/// Block-averaged quotient of a partitioned symmetric matrix. Entry
/// (i, j) is the average over rows of block i of the row sums restricted
/// to block j; generally not symmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientMatrix {
    order: usize,
    entries: Vec<f64>,
    block_sizes: Vec<usize>,
    source_equitable: bool,
}

impl QuotientMatrix {
    /// Builds directly from entries and block sizes. The entries must
    /// satisfy `entries[i][j] * size[i] == entries[j][i] * size[j]`
    /// (always true for quotients of symmetric matrices).
    pub fn from_entries(entries: Vec<f64>, block_sizes: Vec<usize>, source_equitable: bool) -> Self {
        let order = block_sizes.len();
        assert_eq!(entries.len(), order * order);
        QuotientMatrix {
            order,
            entries,
            block_sizes,
            source_equitable,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    /// Whether every block-restricted row sum was constant at
    /// construction time (the partition was equitable for the matrix).
    pub fn source_equitable(&self) -> bool {
        self.source_equitable
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// Eigenvalues (descending) via the similar symmetric matrix
    /// D^{1/2} Q D^{-1/2} with D the diagonal of block sizes.
    pub fn eigenvalues(&self, tol: f64) -> Result<Vec<f64>, LinalgError> {
        let b = SymmetricMatrix::from_fn(self.order, |i, j| {
            // C_ij / sqrt(size_i * size_j) with C_ij the block sum
            self.get(i, j) * self.block_sizes[i] as f64
                / ((self.block_sizes[i] as f64 * self.block_sizes[j] as f64).sqrt())
        });
        eigenvalues_symmetric(&b, tol)
    }

    pub fn max_eigenvalue(&self) -> f64 {
        self.eigenvalues(DEFAULT_EIG_TOL)
            .expect("Jacobi converges on symmetric input within the sweep budget")[0]
    }
}

/// Quotient of `m` under `p`: block-averaged restricted row sums. The
/// `source_equitable` flag records whether those restricted row sums were
/// constant within every block pair (exact comparison; meaningful for
/// integer-valued matrices such as adjacency matrices).
pub fn quotient_matrix(m: &SymmetricMatrix, p: &VertexPartition) -> QuotientMatrix {
    assert_eq!(p.n(), m.order(), "partition does not match the matrix order");
    let k = p.len();
    let sizes = p.block_sizes();
    let mut entries = vec![0.0; k * k];
    let mut equitable = true;
    for (i, &bi) in p.blocks().iter().enumerate() {
        for (j, &bj) in p.blocks().iter().enumerate() {
            let mut total = 0.0;
            let mut first: Option<f64> = None;
            for u in bits(bi) {
                let row_sum: f64 = bits(bj).map(|v| m.get(u, v)).sum();
                total += row_sum;
                match first {
                    None => first = Some(row_sum),
                    Some(f0) if f0 != row_sum => equitable = false,
                    _ => {}
                }
            }
            entries[i * k + j] = total / sizes[i] as f64;
        }
    }
    QuotientMatrix::from_entries(entries, sizes, equitable)
}

/// The symmetric matrix S^T M S with S the column-normalized
/// characteristic matrix of `p`; entry (i, j) is the block sum divided by
/// sqrt(|block i| * |block j|). Its spectrum equals the quotient's.
pub fn symmetrized_quotient(m: &SymmetricMatrix, p: &VertexPartition) -> SymmetricMatrix {
    assert_eq!(p.n(), m.order(), "partition does not match the matrix order");
    let sizes = p.block_sizes();
    SymmetricMatrix::from_fn(p.len(), |i, j| {
        let mut total = 0.0;
        for u in bits(p.blocks()[i]) {
            for v in bits(p.blocks()[j]) {
                total += m.get(u, v);
            }
        }
        total / (sizes[i] as f64 * sizes[j] as f64).sqrt()
    })
}

/// Eigenvalues of the quotient of `m` under `p`, descending.
pub fn quotient_eigenvalues(
    m: &SymmetricMatrix,
    p: &VertexPartition,
    tol: f64,
) -> Result<Vec<f64>, LinalgError> {
    eigenvalues_symmetric(&symmetrized_quotient(m, p), tol)
}

/// Interlacing test: with full eigenvalues a_1 >= ... >= a_n and quotient
/// eigenvalues b_1 >= ... >= b_m, checks a_i >= b_i >= a_{i+n-m} for each
/// i, allowing `INTERLACING_TOL` slack per comparison. Both inputs must
/// be sorted descending.
pub fn interlacing_check(full: &[f64], quot: &[f64]) -> Result<bool, QuotientError> {
    let (n, m) = (full.len(), quot.len());
    if m > n {
        return Err(QuotientError::SizeMismatch {
            full: n,
            quotient: m,
        });
    }
    Ok((0..m).all(|i| {
        quot[i] <= full[i] + INTERLACING_TOL && quot[i] >= full[i + n - m] - INTERLACING_TOL
    }))
}

/// Diagnostic: the interlacing is tight when for some split point t every
/// quotient eigenvalue coincides (within `tol`) with the top of its upper
/// range for i < t and with the bottom of its lower range for i >= t.
pub fn interlacing_is_tight(full: &[f64], quot: &[f64], tol: f64) -> bool {
    let (n, m) = (full.len(), quot.len());
    if m > n {
        return false;
    }
    (0..=m).any(|t| {
        (0..t).all(|i| (quot[i] - full[i]).abs() <= tol)
            && (t..m).all(|i| (quot[i] - full[i + n - m]).abs() <= tol)
    })
}

/// For an equitable partition, every quotient eigenvalue must appear in
/// the spectrum of the full adjacency matrix. Errors with the offending
/// block pair if the partition is not equitable.
pub fn equitable_eigenvalue_containment(
    g: &Graph,
    p: &VertexPartition,
    tol: f64,
) -> Result<bool, QuotientError> {
    if let Some((block_i, block_j)) = equitable_violation(g, p) {
        return Err(QuotientError::NotEquitable { block_i, block_j });
    }
    let a = crate::linalg::adjacency_matrix(g);
    let full = eigenvalues_symmetric(&a, DEFAULT_EIG_TOL)?;
    let quot = quotient_eigenvalues(&a, p, DEFAULT_EIG_TOL)?;
    Ok(quot
        .iter()
        .all(|q| full.iter().any(|f| (q - f).abs() <= tol)))
}
