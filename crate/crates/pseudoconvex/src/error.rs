//! Crate-wide error and premise-violation types.

use crate::recognition::AbaOccurrence;
use crate::set::VertexSet;
use serde::Serialize;
use thiserror::Error;

/// Why a theorem operation refused to run: its stated premise fails on the
/// given instance. Each variant carries the concrete counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum PremiseViolation {
    /// Three of the requested convex sets have empty common intersection.
    TripleIntersection { targets: [usize; 3] },
    /// Four of the requested convex sets have empty common intersection.
    QuadrupleIntersection { targets: [usize; 4] },
    /// Three hyperedges (indices, repetition allowed) share no vertex.
    EdgeTriple { edges: [usize; 3] },
    /// The vertex is extremal in the induced subhypergraph on `q ∪ {v}`.
    NotStronglyInside { vertex: usize, query: VertexSet },
    /// The four vertices are not all extremal with the stated circular order.
    CircularOrder { vertices: [usize; 4] },
    /// No existing hyperedge separates `a ∩ d` from `b ∩ d`.
    InseparableSubset { subset: VertexSet },
    /// A 4-subset of the query lies in no existing hyperedge.
    UncoveredSubset { subset: VertexSet },
    /// The sequences passed to the cup/cap step are not a cup and a cap
    /// sharing the pivot vertex.
    NotCupCapChain { detail: String },
}

/// One blocked step of a greedy extension: both membership choices for the
/// item being decided produce an ABA occurrence against the listed partner.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionConflict {
    /// Edge index (vertex extension) or vertex rank (hyperedge extension)
    /// whose membership could not be decided.
    pub item: usize,
    pub exclude_conflict: AbaOccurrence,
    pub include_conflict: AbaOccurrence,
}

#[derive(Clone, Debug, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),

    #[error("{what} requires {limit} or fewer {unit}, got {actual}")]
    SizeGuard {
        what: &'static str,
        unit: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("not a pseudohalfplane hypergraph under the declared signature: {0:?}")]
    NotPseudohalfplane(AbaOccurrence),

    #[error("premise violated: {0:?}")]
    PremiseViolated(PremiseViolation),

    #[error("extension blocked: {0:?} (invalid seed)")]
    ExtensionBlocked(Box<ExtensionConflict>),

    #[error("internal invariant failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn input(msg: impl Into<String>) -> Error {
        Error::Input(msg.into())
    }
}
