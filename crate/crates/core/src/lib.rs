//! Spectral graph toolkit for families of connected graphs with bounded
//! vertex bipartiteness.
//!
//! - [`graph`]: bitset graphs, join/complement constructors, exact vertex
//!   bipartiteness, graph6 text encoding
//! - [`linalg`]: symmetric matrices, cyclic-Jacobi eigensolver, clustered
//!   spectra
//! - [`quotient`]: vertex partitions, quotient matrices, eigenvalue
//!   interlacing
//! - [`extremal`]: the candidate maximizer K_k v (comp K_r v comp K_s),
//!   the original and corrected closed-form spectral-radius expressions,
//!   counterexample reports, and exhaustive small-n search certificates

pub mod extremal;
pub mod graph;
pub mod jsonnum;
pub mod linalg;
pub mod quotient;
