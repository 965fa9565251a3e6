//! Vertex connectivity by unit-capacity max flow, 2-connectivity by block
//! decomposition, bipartiteness and the independence number.

use crate::graph::{Graph, VertexSet};

use super::cycles::cyclic_blocks;

/// Maximum number of internally vertex-disjoint `s`–`t` paths for a
/// nonadjacent pair, capped at `limit`.
///
/// Each vertex `v` is split into `in(v) = 2v` and `out(v) = 2v + 1` joined by
/// an arc of capacity one; every edge `uv` becomes arcs `out(u) → in(v)` and
/// `out(v) → in(u)`. Augmenting paths are found by breadth-first search.
fn local_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    let n = g.order();
    let nodes = 2 * n;
    // residual[a * nodes + b] > 0 iff arc a→b has spare capacity
    let mut residual = vec![0u8; nodes * nodes];
    for v in 0..n {
        residual[2 * v * nodes + 2 * v + 1] = 1;
        for w in g.neighbors(v) {
            residual[(2 * v + 1) * nodes + 2 * w] = 1;
        }
    }
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    let mut prev = vec![usize::MAX; nodes];
    let mut queue = Vec::with_capacity(nodes);
    while flow < limit {
        prev.fill(usize::MAX);
        prev[source] = source;
        queue.clear();
        queue.push(source);
        let mut head = 0;
        while head < queue.len() && prev[sink] == usize::MAX {
            let a = queue[head];
            head += 1;
            for b in 0..nodes {
                if prev[b] == usize::MAX && residual[a * nodes + b] > 0 {
                    prev[b] = a;
                    queue.push(b);
                }
            }
        }
        if prev[sink] == usize::MAX {
            break;
        }
        let mut b = sink;
        while b != source {
            let a = prev[b];
            residual[a * nodes + b] -= 1;
            residual[b * nodes + a] += 1;
            b = a;
        }
        flow += 1;
    }
    flow
}

/// Vertex connectivity κ: 0 for disconnected graphs, `order − 1` for
/// complete graphs, otherwise the fewest vertices whose removal disconnects.
pub fn connectivity(g: &Graph) -> usize {
    let n = g.order();
    if !g.is_connected() {
        return 0;
    }
    let mut best = n - 1;
    // a minimum cut misses one of the first best+1 vertices, and that vertex
    // has some later vertex on the far side of the cut
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if !g.has_edge(i, j) {
                best = best.min(local_connectivity(g, i, j, best));
            }
        }
        i += 1;
    }
    best
}

/// Connected, at least three vertices, and no cut vertex.
pub fn is_two_connected(g: &Graph) -> bool {
    if g.order() < 3 || !g.is_connected() {
        return false;
    }
    let blocks = cyclic_blocks(g);
    blocks.len() == 1 && blocks[0] == g.vertices()
}

pub fn is_bipartite(g: &Graph) -> bool {
    let mut side = [u8::MAX; 64];
    for comp in g.components() {
        let root = comp.first().expect("components are non-empty");
        side[root] = 0;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for w in g.neighbors(u) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    stack.push(w);
                } else if side[w] == side[u] {
                    return false;
                }
            }
        }
    }
    true
}

/// Size of a largest independent set, via maximum cliques of the complement.
pub fn independence_number(g: &Graph) -> usize {
    let h = g.complement();
    let mut best = 0;
    max_clique(&h, 0, h.vertices(), &mut best);
    best
}

/// Branch and bound: a greedy colouring of the candidates bounds the clique
/// that can still be added.
fn max_clique(g: &Graph, size: usize, candidates: VertexSet, best: &mut usize) {
    if candidates.is_empty() {
        *best = (*best).max(size);
        return;
    }
    // colour classes in order; vertices are branched on in reverse
    let mut order = Vec::with_capacity(candidates.len());
    let mut colours = Vec::with_capacity(candidates.len());
    let mut uncoloured = candidates;
    let mut colour = 0;
    while !uncoloured.is_empty() {
        colour += 1;
        let mut free = uncoloured;
        while let Some(v) = free.first() {
            order.push(v);
            colours.push(colour);
            uncoloured = uncoloured.without(v);
            free = free.without(v) - g.neighbors(v);
        }
    }
    let mut left = candidates;
    for k in (0..order.len()).rev() {
        if size + colours[k] <= *best {
            return;
        }
        let v = order[k];
        max_clique(g, size + 1, left & g.neighbors(v), best);
        left = left.without(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connectivity_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(connectivity(&k3.disjoint_union(&k3).unwrap()), 0);
        assert_eq!(connectivity(&Graph::cycle(8).unwrap()), 2);
        let k1 = Graph::complete(1).unwrap();
        let k6 = Graph::complete(6).unwrap();
        let g = k1.join(&k6.disjoint_union(&k6).unwrap()).unwrap();
        assert_eq!(connectivity(&g), 1);
        assert_eq!(connectivity(&k1), 0);
        assert_eq!(connectivity(&Graph::complete_multipartite(&[3, 4]).unwrap()), 3);
        for n in 3..=10 {
            assert_eq!(connectivity(&Graph::cycle(n).unwrap()), 2);
            assert_eq!(connectivity(&Graph::complete(n).unwrap()), n - 1);
        }
    }

    #[test]
    fn two_connected() {
        assert!(is_two_connected(&Graph::cycle(5).unwrap()));
        assert!(!is_two_connected(&Graph::path(5).unwrap()));
        assert!(!is_two_connected(&Graph::complete(2).unwrap()));
        let k1 = Graph::complete(1).unwrap();
        let k3 = Graph::complete(3).unwrap();
        assert!(!is_two_connected(&k1.join(&k3.disjoint_union(&k3).unwrap()).unwrap()));
    }

    #[test]
    fn independence() {
        assert_eq!(independence_number(&Graph::cycle(5).unwrap()), 2);
        assert_eq!(independence_number(&Graph::complete_multipartite(&[2, 3]).unwrap()), 3);
        assert_eq!(independence_number(&Graph::complete_multipartite(&[6, 6]).unwrap()), 6);
        assert_eq!(independence_number(&Graph::empty(40).unwrap()), 40);
        assert_eq!(independence_number(&Graph::complete(40).unwrap()), 1);
    }

    #[test]
    fn bipartite() {
        assert!(is_bipartite(&Graph::cycle(6).unwrap()));
        assert!(!is_bipartite(&Graph::cycle(7).unwrap()));
        assert!(is_bipartite(&Graph::empty(3).unwrap()));
    }
}
