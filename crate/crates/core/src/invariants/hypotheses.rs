//! Sufficient conditions for long cycles, each as an exact predicate.
//! Fractional thresholds are compared after clearing denominators.

use crate::graph::Graph;

use super::connectivity::{independence_number, is_bipartite, is_two_connected};
use super::min_degree;

/// 2-connected, and every nonadjacent pair has degree sum at least `k`
/// (guarantees a cycle of length at least `min(k, order)`).
pub fn dirac_cycle_bound_hypothesis(g: &Graph, k: usize) -> bool {
    is_two_connected(g)
        && g.vertices().iter().all(|u| {
            let far = g.vertices() - g.neighbors(u);
            far.iter()
                .filter(|&v| v > u)
                .all(|v| g.degree(u) + g.degree(v) >= k)
        })
}

/// At least three vertices and minimum degree at least half the order.
pub fn dirac_hamiltonian_hypothesis(g: &Graph) -> bool {
    g.order() >= 3 && 2 * min_degree(g) >= g.order()
}

/// 2-connected with minimum degree at least `(order + 2) / 3` and at least
/// the independence number.
pub fn nash_williams_hypothesis(g: &Graph) -> bool {
    let delta = min_degree(g);
    is_two_connected(g) && 3 * delta >= g.order() + 2 && delta >= independence_number(g)
}

/// 2-connected, not bipartite, and minimum degree at least `order / 4 + 250`.
pub fn brandt_hypothesis(g: &Graph) -> bool {
    4 * min_degree(g) >= g.order() + 1000 && is_two_connected(g) && !is_bipartite(g)
}

/// 2-connected, and every pair `u ≠ v` sees at least `k` vertices other
/// than themselves.
pub fn cycle_lemma_hypothesis(g: &Graph, k: usize) -> bool {
    is_two_connected(g) && min_union_neighborhood(g) >= k
}

/// Minimum over pairs `u ≠ v` of `|(N(u) ∪ N(v)) \ {u, v}|`; `usize::MAX`
/// for graphs with a single vertex.
pub fn min_union_neighborhood(g: &Graph) -> usize {
    let n = g.order();
    let mut best = usize::MAX;
    for u in 0..n {
        for v in u + 1..n {
            best = best.min(g.union_excl_unchecked(u, v));
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert!(dirac_hamiltonian_hypothesis(&Graph::complete(4).unwrap()));
        // C_5: δ = 2 = α but 3δ = 6 < 7
        assert!(!nash_williams_hypothesis(&Graph::cycle(5).unwrap()));
        assert!(nash_williams_hypothesis(&Graph::complete(5).unwrap()));
        assert!(!brandt_hypothesis(&Graph::complete(64).unwrap()));
        assert!(dirac_cycle_bound_hypothesis(&Graph::cycle(5).unwrap(), 4));
        assert!(!dirac_cycle_bound_hypothesis(&Graph::cycle(5).unwrap(), 5));
        assert!(!dirac_cycle_bound_hypothesis(&Graph::path(5).unwrap(), 0));
        assert!(cycle_lemma_hypothesis(&Graph::cycle(6).unwrap(), 2));
        assert!(!cycle_lemma_hypothesis(&Graph::cycle(6).unwrap(), 3));
    }
}
