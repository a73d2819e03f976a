//! Error type shared across the crate.

use crate::polyring::Family;

/// Everything that can go wrong when driving the library with bad inputs.
///
/// Computations on valid inputs are total; errors only report misuse
/// (mixing variable families, querying an edge that is absent, indices
/// outside the ambient space, malformed combinatorial data).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Arithmetic attempted between polynomials of different families.
    #[error("family mismatch: expected {expected} but found {found}")]
    FamilyMismatch { expected: Family, found: Family },

    /// Crossing/weight query for an edge the matching does not contain.
    #[error("edge a{g}b{h} is not in the matching")]
    EdgeNotInMatching { g: u32, h: u32 },

    /// Edge set is not a partial matching of the stated bipartite graph.
    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    /// Element list is not a strictly increasing subset of {1, ..., bound}.
    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    /// Class index exceeds the dimension of the ambient projective space.
    #[error("class index {k} is out of range for P^{n}")]
    ClassOutOfRange { k: u32, n: u32 },

    /// (i, j, k) lies outside the window max(i,j) <= k <= i+j where the
    /// structure constant is nonzero and its polytope is defined.
    #[error("indices (i,j,k) = ({i},{j},{k}) violate max(i,j) <= k <= i+j")]
    OutsideWindow { i: u32, j: u32, k: u32 },
}
