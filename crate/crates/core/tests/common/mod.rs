//! Independent, deliberately naive oracles shared by the integration tests.
//! None of them uses the library's algorithms; they only read adjacency.

#![allow(dead_code)]

use ramsey_goodness::Graph;

/// Vertex pairs `(i, j)`, `i < j`, in a fixed order.
pub fn pairs(order: usize) -> Vec<(usize, usize)> {
    (0..order).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// The labelled graph whose edges are the pairs selected by `mask`.
pub fn labelled(order: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges: Vec<(usize, usize)> =
        pairs.iter().enumerate().filter(|&(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
    Graph::from_edges(order, &edges).expect("valid edges")
}

/// Every labelled graph on `order` vertices.
pub fn all_labelled(order: usize) -> impl Iterator<Item = Graph> {
    let pairs = pairs(order);
    (0..1u64 << pairs.len()).map(move |mask| labelled(order, &pairs, mask))
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn extend(n: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in 0..n {
            if !current.contains(&v) {
                current.push(v);
                extend(n, current, out);
                current.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(n, &mut Vec::new(), &mut out);
    out
}

/// The lexicographically smallest adjacency bit string over all
/// relabellings: a canonical form by exhaustion.
pub fn brute_canonical(g: &Graph) -> Vec<bool> {
    let n = g.order();
    let pairs = pairs(n);
    permutations(n)
        .into_iter()
        .map(|perm| pairs.iter().map(|&(i, j)| g.has_edge(perm[i], perm[j])).collect::<Vec<bool>>())
        .min()
        .unwrap_or_default()
}

/// Whether `g` has a cycle of exactly `len` vertices, by depth-first search
/// over simple paths starting at their smallest vertex.
pub fn has_cycle_brute(g: &Graph, len: usize) -> bool {
    fn walk(g: &Graph, start: usize, path: &mut Vec<usize>, len: usize) -> bool {
        let last = *path.last().expect("non-empty path");
        if path.len() == len {
            return g.has_edge(last, start);
        }
        for v in start + 1..g.order() {
            if !path.contains(&v) && g.has_edge(last, v) {
                path.push(v);
                if walk(g, start, path, len) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    len >= 3 && (0..g.order()).any(|s| walk(g, s, &mut vec![s], len))
}

/// All cycle lengths present, by brute force.
pub fn cycle_lengths_brute(g: &Graph) -> Vec<usize> {
    (3..=g.order()).filter(|&len| has_cycle_brute(g, len)).collect()
}

/// Whether some injective map of `K_{2,n}` (two hubs then `n` leaves) into
/// `g` sends every edge to an edge.
pub fn contains_k2n_brute(g: &Graph, n: usize) -> bool {
    fn extend(g: &Graph, n: usize, image: &mut Vec<usize>) -> bool {
        if image.len() == n + 2 {
            return true;
        }
        for v in 0..g.order() {
            if image.contains(&v) || (image.len() >= 2 && !(g.has_edge(image[0], v) && g.has_edge(image[1], v))) {
                continue;
            }
            image.push(v);
            if extend(g, n, image) {
                return true;
            }
            image.pop();
        }
        false
    }
    extend(g, n, &mut Vec::new())
}

/// Whether `g` stays connected after deleting any set of fewer than `k`
/// vertices (and has more than `k` vertices).
pub fn is_k_connected_brute(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if n <= k {
        return false;
    }
    (0..1u64 << n).filter(|m| (m.count_ones() as usize) < k).all(|removed| {
        let keep: Vec<usize> = (0..n).filter(|v| removed >> v & 1 == 0).collect();
        // flood fill within the kept vertices
        let mut seen = vec![keep[0]];
        let mut frontier = vec![keep[0]];
        while let Some(u) = frontier.pop() {
            for &w in &keep {
                if !seen.contains(&w) && g.has_edge(u, w) {
                    seen.push(w);
                    frontier.push(w);
                }
            }
        }
        seen.len() == keep.len()
    })
}

/// Vertex connectivity by brute force.
pub fn connectivity_brute(g: &Graph) -> usize {
    (0..g.order()).take_while(|&k| is_k_connected_brute(g, k + 1)).count()
}
