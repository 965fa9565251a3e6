use serde::{Deserialize, Serialize};

use crate::graph::{CycleEmbedding, Graph, VertexSet};

/// A certificate that re-validates against the graph it was found in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A cycle, listed in traversal order.
    Cycle { vertices: Vec<usize> },
    /// A copy of `K_{2,n}`: two vertices and `n` of their common neighbours.
    K2n { pair: [usize; 2], common: Vec<usize> },
}

impl Witness {
    /// Re-checks the certificate against `g`.
    pub fn validate(&self, g: &Graph) -> bool {
        match self {
            Witness::Cycle { vertices } => CycleEmbedding::new(g, vertices.clone()).is_ok(),
            Witness::K2n { pair: [u, v], common } => {
                let Ok(shared) = g.common_neighbors(*u, *v) else {
                    return false;
                };
                let set: VertexSet = common.iter().copied().collect();
                set.len() == common.len() && set.is_subset(shared)
            }
        }
    }

    /// Cycle length, or the size `n` of the embedded `K_{2,n}`.
    pub fn size(&self) -> usize {
        match self {
            Witness::Cycle { vertices } => vertices.len(),
            Witness::K2n { common, .. } => common.len(),
        }
    }
}
