//! Exhaustive extremal search: every labeled graph on n vertices is
//! enumerated as a packed edge mask, reduced to canonical representatives,
//! filtered to connected graphs with vertex bipartiteness at most k, and
//! scored by spectral radius. The resulting certificate states whether the
//! candidate graph attains the unique maximum.
//!
//! The mask space is split into contiguous ranges scanned by independent
//! workers; partial results are merged in worker order, so the certificate
//! is identical for any worker count.

use super::canonical::{is_minimal_mask, mask_bits, minimal_mask};
use super::{ExtremalError, ExtremalInstance};
use crate::graph::{connected_mask, Graph};
use crate::jsonnum::float17;
use crate::linalg::{adjacency_matrix, spectral_radius};
use serde_json::{Map, Value};
use std::time::Instant;

/// Result record of one exhaustive run over connected n-vertex graphs
/// with vertex bipartiteness at most k, up to isomorphism.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchCertificate {
    pub n: usize,
    pub k: usize,
    /// Labeled graphs examined: 2^(n(n-1)/2).
    pub enumerated: u64,
    /// Family members up to isomorphism.
    pub family_count: u64,
    pub max_spectral_radius: f64,
    /// graph6 strings of every family member within the tie tolerance of
    /// the maximum, sorted.
    pub maximizers: Vec<String>,
    /// The candidate is the unique maximizer (up to isomorphism).
    pub candidate_matches: bool,
    pub elapsed_seconds: f64,
}

impl SearchCertificate {
    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("n".into(), Value::from(self.n));
        obj.insert("k".into(), Value::from(self.k));
        obj.insert("enumerated".into(), Value::from(self.enumerated));
        obj.insert("family_count".into(), Value::from(self.family_count));
        obj.insert(
            "max_rho".into(),
            Value::Number(float17(self.max_spectral_radius)),
        );
        obj.insert(
            "maximizers".into(),
            Value::Array(
                self.maximizers
                    .iter()
                    .map(|s| Value::String(s.clone()))
                    .collect(),
            ),
        );
        obj.insert(
            "candidate_matches".into(),
            Value::Bool(self.candidate_matches),
        );
        obj.insert(
            "elapsed_seconds".into(),
            Value::Number(float17(self.elapsed_seconds)),
        );
        Value::Object(obj)
    }
}

/// Runs the exhaustive search with one worker per available core.
pub fn extremal_search(n: usize, k: usize, tol: f64) -> Result<SearchCertificate, ExtremalError> {
    let workers = std::thread::available_parallelism()
        .map(std::num::NonZeroUsize::get)
        .unwrap_or(1);
    extremal_search_with_workers(n, k, tol, workers)
}

/// Exhaustive search over all graphs on `n` vertices (4 <= n <= 8).
/// Spectral radii within `tol` of the maximum count as tied; the
/// candidate matches only when the tie class is a single isomorphism
/// class equal to the candidate's.
pub fn extremal_search_with_workers(
    n: usize,
    k: usize,
    tol: f64,
    workers: usize,
) -> Result<SearchCertificate, ExtremalError> {
    let inst = ExtremalInstance::new(n, k)?;
    if !(4..=8).contains(&n) {
        return Err(ExtremalError::SearchRange { n });
    }
    let start = Instant::now();
    let total: u64 = 1 << mask_bits(n);
    let workers = workers.clamp(1, 128) as u64;
    let chunk = total.div_ceil(workers);

    let mut members: Vec<(u64, f64)> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let lo = w * chunk;
                let hi = (lo + chunk).min(total);
                scope.spawn(move || scan_range(n, k, lo, hi))
            })
            .collect();
        for handle in handles {
            members.extend(handle.join().expect("search worker panicked"));
        }
    });

    let family_count = members.len() as u64;
    let max_spectral_radius = members.iter().map(|&(_, r)| r).fold(f64::NEG_INFINITY, f64::max);
    let tied: Vec<u64> = members
        .iter()
        .filter(|&&(_, r)| r >= max_spectral_radius - tol)
        .map(|&(m, _)| m)
        .collect();
    let mut maximizers: Vec<String> = tied
        .iter()
        .map(|&m| super::canonical::graph_from_mask(n, m).to_graph6())
        .collect();
    maximizers.sort_unstable();

    let candidate = inst.build();
    let cand_adj: Vec<u64> = (0..n).map(|v| candidate.neighbors(v)).collect();
    let cand_mask = minimal_mask(n, &cand_adj);
    let candidate_matches = tied.len() == 1 && tied[0] == cand_mask;

    Ok(SearchCertificate {
        n,
        k,
        enumerated: total,
        family_count,
        max_spectral_radius,
        maximizers,
        candidate_matches,
        elapsed_seconds: start.elapsed().as_secs_f64(),
    })
}

/// Scans masks in [lo, hi), returning (mask, spectral radius) for each
/// canonical representative of a family member.
fn scan_range(n: usize, k: usize, lo: u64, hi: u64) -> Vec<(u64, f64)> {
    let total_bits = mask_bits(n);
    // pair lookup: bit position (counted from the least significant end)
    // -> vertex pair, matching the packed mask layout
    let mut pair_of_bit = vec![(0usize, 0usize); total_bits];
    {
        let mut pos = total_bits;
        for j in 1..n {
            for i in 0..j {
                pos -= 1;
                pair_of_bit[pos] = (i, j);
            }
        }
    }

    let full = (1u64 << n) - 1;
    let mut adj = [0u64; 8];
    let mut current = 0u64;
    let mut members = Vec::new();
    for mask in lo..hi {
        // incremental decode: flip only the bits that changed
        let mut diff = current ^ mask;
        while diff != 0 {
            let b = diff.trailing_zeros() as usize;
            diff &= diff - 1;
            let (i, j) = pair_of_bit[b];
            adj[i] ^= 1 << j;
            adj[j] ^= 1 << i;
        }
        current = mask;

        if connected_mask(&adj[..n], 1) != full {
            continue;
        }
        if !is_minimal_mask(n, &adj[..n], mask) {
            continue;
        }
        let g = Graph::from_neighbor_masks(n, &adj[..n]);
        if !g.vb_at_most(k) {
            continue;
        }
        let rho = spectral_radius(&adjacency_matrix(&g));
        members.push((mask, rho));
    }
    members
}
