//! Canonical labelling by partition refinement and individualization.
//!
//! The search tree is the usual one: refine an ordered partition to an
//! equitable one, individualize each vertex of the first smallest
//! non-singleton cell, recurse. Each discrete leaf yields a relabelled
//! adjacency matrix; the largest one is canonical. Two leaves with equal
//! matrices give an automorphism, which is used to
//!
//! * jump back to the node where the current path left the first (or best)
//!   path, since the remaining subtree is an image of one already searched;
//! * skip children lying in the same orbit, under the automorphisms found so
//!   far that fix the current prefix, as an already explored child.
//!
//! The automorphisms found this way generate the full group, so the orbits
//! reported by [`CanonicalLabeling`] are exact.

use crate::format::encode_graph6;
use crate::graph::{Graph, VertexSet};

/// Result of canonically labelling one graph.
#[derive(Clone, Debug)]
pub struct CanonicalLabeling {
    labels: Vec<usize>,
    generators: Vec<Vec<u8>>,
    orbits: Vec<u8>,
}

impl CanonicalLabeling {
    /// `labels()[v]` is the canonical position of vertex `v`.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Automorphism generators as image tables (`gen[v]` is the image of `v`).
    pub fn generators(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        self.generators
            .iter()
            .map(|g| g.iter().map(|&x| x as usize).collect())
    }

    /// Smallest vertex in the automorphism orbit of `v`.
    pub fn orbit_representative(&self, v: usize) -> usize {
        self.orbits[v] as usize
    }

    pub fn same_orbit(&self, u: usize, v: usize) -> bool {
        self.orbits[u] == self.orbits[v]
    }

    /// Whether the automorphism group is trivial.
    pub fn is_rigid(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn orbit_count(&self) -> usize {
        self.orbits
            .iter()
            .enumerate()
            .filter(|&(v, &r)| v == r as usize)
            .count()
    }

    /// The graph relabelled into canonical position.
    pub fn apply(&self, g: &Graph) -> Graph {
        g.relabel_unchecked(&self.labels)
    }
}

pub fn canonical_labeling(g: &Graph) -> CanonicalLabeling {
    let n = g.order();
    let mut search = Search {
        rows: g.rows(),
        n,
        first: None,
        best: None,
        generators: Vec::new(),
        scratch: Vec::with_capacity(n),
    };
    let mut path = Vec::with_capacity(n);
    search.search(vec![VertexSet::prefix(n).bits()], &mut path);
    let best = search.best.expect("search reaches at least one leaf");
    let mut labels = vec![0; n];
    for (pos, &v) in best.lab.iter().enumerate() {
        labels[v as usize] = pos;
    }
    let orbits = orbits_of(n, search.generators.iter());
    CanonicalLabeling {
        labels,
        generators: search.generators,
        orbits,
    }
}

/// Byte string identifying the isomorphism class of `g`: the graph6 text of
/// its canonical relabelling.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    encode_graph6(&canonical_labeling(g).apply(g)).into_bytes()
}

pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_labeling(g).apply(g)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && canonical_graph(a) == canonical_graph(b)
}

struct Leaf {
    path: Vec<usize>,
    lab: Vec<u8>,
    cert: Vec<u64>,
}

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<u8>>,
    scratch: Vec<u64>,
}

impl Search<'_> {
    /// Refines `cells` to the coarsest equitable partition finer than it.
    /// Cells are split by the number of neighbours in a splitter cell, the
    /// fragments ordered by that count, so the result depends only on the
    /// structure and not on vertex names.
    fn refine(&mut self, cells: &mut Vec<u64>) {
        let mut counts = [0u8; 64];
        loop {
            let mut changed = false;
            let mut w = 0;
            while w < cells.len() {
                if cells.len() == self.n {
                    return;
                }
                let splitter = cells[w];
                self.scratch.clear();
                let mut split = false;
                for &cell in cells.iter() {
                    if cell & (cell - 1) == 0 {
                        self.scratch.push(cell);
                        continue;
                    }
                    let mut present = 0u128;
                    for v in VertexSet::from_bits(cell) {
                        let c = (self.rows[v] & splitter).count_ones() as u8;
                        counts[v] = c;
                        present |= 1u128 << c;
                    }
                    if present & (present - 1) == 0 {
                        self.scratch.push(cell);
                        continue;
                    }
                    split = true;
                    while present != 0 {
                        let c = present.trailing_zeros() as u8;
                        present &= present - 1;
                        let mut part = 0u64;
                        for v in VertexSet::from_bits(cell) {
                            if counts[v] == c {
                                part |= 1u64 << v;
                            }
                        }
                        self.scratch.push(part);
                    }
                }
                if split {
                    std::mem::swap(cells, &mut self.scratch);
                    changed = true;
                }
                w += 1;
            }
            if !changed {
                return;
            }
        }
    }

    /// Returns `Some(level)` to abandon every node deeper than `level`.
    fn search(&mut self, mut cells: Vec<u64>, path: &mut Vec<usize>) -> Option<usize> {
        self.refine(&mut cells);
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|&(i, c)| (c.count_ones(), i))
            .map(|(i, _)| i);
        let Some(target) = target else {
            return self.leaf(&cells, path);
        };
        let cell = cells[target];
        let mut explored = 0u64;
        for v in VertexSet::from_bits(cell) {
            if explored != 0 && self.equivalent_to_explored(path, explored, v) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1u64 << v);
            child.push(cell & !(1u64 << v));
            child.extend_from_slice(&cells[target + 1..]);
            path.push(v);
            let jump = self.search(child, path);
            path.pop();
            explored |= 1u64 << v;
            if let Some(level) = jump {
                if level < path.len() {
                    return Some(level);
                }
            }
        }
        None
    }

    fn equivalent_to_explored(&self, path: &[usize], explored: u64, v: usize) -> bool {
        if self.generators.is_empty() {
            return false;
        }
        let fixing = self
            .generators
            .iter()
            .filter(|g| path.iter().all(|&p| g[p] as usize == p));
        let orbits = orbits_of(self.n, fixing);
        VertexSet::from_bits(explored)
            .iter()
            .any(|u| orbits[u] == orbits[v])
    }

    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Option<usize> {
        let n = self.n;
        let lab: Vec<u8> = cells.iter().map(|c| c.trailing_zeros() as u8).collect();
        let mut pos = [0u8; 64];
        for (i, &v) in lab.iter().enumerate() {
            pos[v as usize] = i as u8;
        }
        let cert: Vec<u64> = lab
            .iter()
            .map(|&v| {
                VertexSet::from_bits(self.rows[v as usize])
                    .iter()
                    .fold(0u64, |row, w| row | 1u64 << pos[w])
            })
            .collect();
        let leaf = Leaf {
            path: path.to_vec(),
            lab,
            cert,
        };
        let Some(first) = &self.first else {
            self.best = Some(Leaf {
                path: leaf.path.clone(),
                lab: leaf.lab.clone(),
                cert: leaf.cert.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if first.cert == leaf.cert {
            let auto = automorphism(n, &first.lab, &leaf.lab);
            let level = common_prefix(&first.path, path);
            self.generators.push(auto);
            return Some(level);
        }
        let best = self.best.as_ref().expect("best set with first");
        match leaf.cert.cmp(&best.cert) {
            std::cmp::Ordering::Equal => {
                let auto = automorphism(n, &best.lab, &leaf.lab);
                let level = common_prefix(&best.path, path);
                self.generators.push(auto);
                Some(level)
            }
            std::cmp::Ordering::Greater => {
                self.best = Some(leaf);
                None
            }
            std::cmp::Ordering::Less => None,
        }
    }
}

/// The map sending `from[i]` to `to[i]` for every position `i`.
fn automorphism(n: usize, from: &[u8], to: &[u8]) -> Vec<u8> {
    let mut gamma = vec![0u8; n];
    for (&a, &b) in from.iter().zip(to) {
        gamma[a as usize] = b;
    }
    gamma
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Orbit representatives (smallest member) under the group generated by `gens`.
fn orbits_of<'a>(n: usize, gens: impl Iterator<Item = &'a Vec<u8>>) -> Vec<u8> {
    let mut parent: Vec<u8> = (0..n as u8).collect();
    fn find(parent: &mut [u8], mut x: u8) -> u8 {
        while parent[x as usize] != x {
            let up = parent[parent[x as usize] as usize];
            parent[x as usize] = up;
            x = up;
        }
        x
    }
    for g in gens {
        for v in 0..n {
            let a = find(&mut parent, v as u8);
            let b = find(&mut parent, g[v]);
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi as usize] = lo;
            }
        }
    }
    (0..n as u8).map(|v| find(&mut parent, v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    #[test]
    fn relabelled_cycles_agree() {
        let c5 = Graph::cycle(5).unwrap();
        let other = Graph::from_edges(5, &[(0, 2), (2, 1), (1, 4), (4, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_form(&c5), canonical_form(&other));
        let p5 = Graph::path(5).unwrap();
        assert_ne!(canonical_form(&c5), canonical_form(&p5));
    }

    #[test]
    fn claw_versus_triangle_plus_point() {
        let claw = Graph::complete_multipartite(&[1, 3]).unwrap();
        let tri = Graph::complete(3)
            .unwrap()
            .disjoint_union(&Graph::empty(1).unwrap())
            .unwrap();
        assert_ne!(canonical_form(&claw), canonical_form(&tri));
    }

    #[test]
    fn orbits_of_small_graphs() {
        let p4 = Graph::path(4).unwrap();
        let lab = canonical_labeling(&p4);
        assert!(lab.same_orbit(0, 3) && lab.same_orbit(1, 2) && !lab.same_orbit(0, 1));
        assert_eq!(lab.orbit_count(), 2);
        let pet = canonical_labeling(&petersen());
        assert_eq!(pet.orbit_count(), 1);
        let star = canonical_labeling(&Graph::complete_multipartite(&[1, 4]).unwrap());
        assert_eq!(star.orbit_count(), 2);
        let rigid = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 4)]).unwrap();
        // asymmetric? not necessarily; just check generators are automorphisms
        let lab = canonical_labeling(&rigid);
        for g in lab.generators() {
            assert_eq!(rigid.relabel(&g).unwrap(), rigid);
        }
    }

    #[test]
    fn highly_symmetric_graphs_are_fast() {
        // complete multipartite graphs have huge automorphism groups
        let g = Graph::complete_multipartite(&[10, 10, 10, 10, 10, 10]).unwrap();
        let lab = canonical_labeling(&g);
        assert_eq!(lab.orbit_count(), 1);
        let k64 = Graph::complete(64).unwrap();
        assert_eq!(canonical_graph(&k64), k64);
        let e = Graph::empty(40).unwrap();
        assert_eq!(canonical_graph(&e), e);
    }

    #[test]
    fn relabelled_petersen() {
        let g = petersen();
        let perm = [3, 7, 1, 9, 0, 2, 8, 4, 6, 5];
        assert_eq!(canonical_form(&g), canonical_form(&g.relabel(&perm).unwrap()));
    }
}
