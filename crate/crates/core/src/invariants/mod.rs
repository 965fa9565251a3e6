//! Exact structural invariants and the certificates backing them.

mod connectivity;
mod cycles;
mod hypotheses;
mod pattern;
mod witness;

pub use connectivity::{connectivity, independence_number, is_bipartite, is_two_connected};
pub use cycles::{
    circumference, cycle_spectrum, cycles_of_length, cyclic_blocks, girth, is_weakly_pancyclic,
    longest_cycle,
};
pub use hypotheses::{
    brandt_hypothesis, cycle_lemma_hypothesis, dirac_cycle_bound_hypothesis,
    dirac_hamiltonian_hypothesis, min_union_neighborhood, nash_williams_hypothesis,
};
pub use pattern::{Pattern, PatternParams};
pub use witness::Witness;

use crate::error::{param, Result};
use crate::graph::Graph;

pub fn min_degree(g: &Graph) -> usize {
    g.vertices().iter().map(|v| g.degree(v)).min().unwrap_or(0)
}

pub fn max_degree(g: &Graph) -> usize {
    g.vertices().iter().map(|v| g.degree(v)).max().unwrap_or(0)
}

/// A cycle on exactly `len` vertices, if any. The search visits blocks and
/// vertices lowest index first, so the witness is reproducible.
pub fn has_cycle_of_length(g: &Graph, len: usize) -> Result<Option<Witness>> {
    if len < 3 || len > g.order() {
        return param(format!("cycle length {len} must lie in 3..={}", g.order()));
    }
    Ok(cycles::find_cycle_of_length(g, len).map(|vertices| Witness::Cycle { vertices }))
}

/// Whether `g` contains a cycle of length `len`; lengths outside `3..=order`
/// are simply absent.
pub fn contains_cycle(g: &Graph, len: usize) -> bool {
    cycles::find_cycle_of_length(g, len).is_some()
}

/// A Hamilton cycle, if any.
pub fn is_hamiltonian(g: &Graph) -> Result<Option<Witness>> {
    if g.order() < 3 {
        return param(format!("Hamiltonicity needs order ≥ 3, got {}", g.order()));
    }
    has_cycle_of_length(g, g.order())
}

/// Largest number of common neighbours over pairs of distinct vertices.
pub fn max_common_neighborhood(g: &Graph) -> usize {
    let n = g.order();
    let rows = g.rows();
    let mut best = 0;
    for u in 0..n {
        for v in u + 1..n {
            best = best.max((rows[u] & rows[v]).count_ones() as usize);
        }
    }
    best
}

/// No two vertices share `n` neighbours.
pub fn k2n_free(g: &Graph, n: usize) -> bool {
    let order = g.order();
    let rows = g.rows();
    (0..order).all(|u| (u + 1..order).all(|v| ((rows[u] & rows[v]).count_ones() as usize) < n))
}

/// The lexicographically first pair with at least `n` common neighbours,
/// with its `n` lowest common neighbours.
pub fn find_k2n(g: &Graph, n: usize) -> Option<Witness> {
    let order = g.order();
    for u in 0..order {
        for v in u + 1..order {
            let shared = g.neighbors(u) & g.neighbors(v);
            if shared.len() >= n {
                return Some(Witness::K2n {
                    pair: [u, v],
                    common: shared.iter().take(n).collect(),
                });
            }
        }
    }
    None
}
