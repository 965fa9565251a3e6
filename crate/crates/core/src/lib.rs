//! Exact tools for Ramsey goodness questions about `K_{2,n}` against cycles:
//! bitset graphs with canonical forms, exact invariants with certificates,
//! the extremal constructions, isomorph-free enumeration, and exhaustive
//! verification harnesses.

pub mod canon;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod format;
pub mod graph;
pub mod verifier;
pub mod invariants;

pub use canon::{are_isomorphic, canonical_form, canonical_graph, canonical_labeling, CanonicalLabeling};
pub use error::{Error, Result};
pub use format::{decode_graph6, encode_graph6, from_adjacency_json, to_adjacency_json, AdjacencyList};
pub use graph::{CycleEmbedding, Graph, VertexSet, MAX_ORDER};

/// The guide's chapters, compiled so their examples run as doc-tests.
#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/invariants.md")]
    mod invariants {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
