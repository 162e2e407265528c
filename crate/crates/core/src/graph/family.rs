//! Constructed graph families: complete, empty, complete bipartite,
//! complement and join expressions.

use super::{Graph, GraphError, MAX_VERTICES};

/// A description of a constructed graph. `build` labels the left operand
/// of a join before the right operand, recursively, so block positions
/// are deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphFamilySpec {
    Complete(usize),
    EmptyGraph(usize),
    CompleteBipartite(usize, usize),
    Complement(Box<GraphFamilySpec>),
    Join(Box<GraphFamilySpec>, Box<GraphFamilySpec>),
}

impl GraphFamilySpec {
    pub fn join(left: GraphFamilySpec, right: GraphFamilySpec) -> GraphFamilySpec {
        GraphFamilySpec::Join(Box::new(left), Box::new(right))
    }

    pub fn complement(inner: GraphFamilySpec) -> GraphFamilySpec {
        GraphFamilySpec::Complement(Box::new(inner))
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            GraphFamilySpec::Complete(n) | GraphFamilySpec::EmptyGraph(n) => *n,
            GraphFamilySpec::CompleteBipartite(s, t) => s + t,
            GraphFamilySpec::Complement(inner) => inner.vertex_count(),
            GraphFamilySpec::Join(a, b) => a.vertex_count() + b.vertex_count(),
        }
    }

    pub fn build(&self) -> Result<Graph, GraphError> {
        self.check_sizes()?;
        let total = self.vertex_count();
        if total > MAX_VERTICES {
            return Err(GraphError::Capacity { requested: total });
        }
        Ok(self.build_unchecked())
    }

    fn check_sizes(&self) -> Result<(), GraphError> {
        match self {
            GraphFamilySpec::Complete(n) | GraphFamilySpec::EmptyGraph(n) => {
                if *n == 0 {
                    return Err(GraphError::ZeroSizePart);
                }
            }
            GraphFamilySpec::CompleteBipartite(s, t) => {
                if *s == 0 || *t == 0 {
                    return Err(GraphError::ZeroSizePart);
                }
            }
            GraphFamilySpec::Complement(inner) => inner.check_sizes()?,
            GraphFamilySpec::Join(a, b) => {
                a.check_sizes()?;
                b.check_sizes()?;
            }
        }
        Ok(())
    }

    fn build_unchecked(&self) -> Graph {
        match self {
            GraphFamilySpec::Complete(n) => Graph::complete(*n),
            GraphFamilySpec::EmptyGraph(n) => Graph::empty(*n),
            GraphFamilySpec::CompleteBipartite(s, t) => Graph::complete_bipartite(*s, *t),
            GraphFamilySpec::Complement(inner) => inner.build_unchecked().complement(),
            GraphFamilySpec::Join(a, b) => a
                .build_unchecked()
                .join(&b.build_unchecked())
                .expect("size checked above"),
        }
    }
}
