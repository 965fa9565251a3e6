//! Simple undirected graphs on at most 64 vertices.
//!
//! Every adjacency row is a single `u64`, so neighbourhood algebra
//! (common neighbours, unions, complements) is a handful of word operations.
//! Graphs are values: the "mutators" return a new graph.

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Not, Sub};

use crate::error::{param, Error, Result};

/// Largest supported order.
pub const MAX_ORDER: usize = 64;

/// A subset of `0..64` stored as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    /// The set `{0, 1, ..., order - 1}`.
    #[inline]
    pub const fn prefix(order: usize) -> Self {
        if order >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << order) - 1)
        }
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && (self.0 >> v) & 1 == 1
    }

    #[inline]
    #[must_use]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    #[inline]
    #[must_use]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    /// Smallest element, if any.
    #[inline]
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Elements in increasing order.
    #[inline]
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitXor for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitxor(self, rhs: Self) -> Self {
        VertexSet(self.0 ^ rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn not(self) -> Self {
        VertexSet(!self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, VertexSet::with)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

/// Iterator over the elements of a [`VertexSet`], lowest first.
#[derive(Clone, Debug)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// A simple undirected graph with vertices `0..order`.
///
/// Invariants: `adj` is symmetric, loop-free, and every bit at a position
/// `>= order` is clear (including the rows past `order`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: [u64; MAX_ORDER],
}

fn check_order(order: usize) -> Result<()> {
    if (1..=MAX_ORDER).contains(&order) {
        Ok(())
    } else {
        Err(Error::OrderOutOfRange(order))
    }
}

impl Graph {
    /// The graph on `order` vertices with no edges.
    pub fn empty(order: usize) -> Result<Graph> {
        check_order(order)?;
        Ok(Graph {
            order,
            adj: [0; MAX_ORDER],
        })
    }

    /// `K_order`.
    pub fn complete(order: usize) -> Result<Graph> {
        Graph::empty(order).map(|g| g.complement())
    }

    /// The cycle `0 - 1 - ... - (order-1) - 0`.
    pub fn cycle(order: usize) -> Result<Graph> {
        if order < 3 {
            return param(format!("a cycle needs at least 3 vertices, got {order}"));
        }
        let mut g = Graph::empty(order)?;
        for v in 0..order {
            g.set_edge(v, (v + 1) % order);
        }
        Ok(g)
    }

    /// The path `0 - 1 - ... - (order-1)`.
    pub fn path(order: usize) -> Result<Graph> {
        let mut g = Graph::empty(order)?;
        for v in 1..order {
            g.set_edge(v - 1, v);
        }
        Ok(g)
    }

    /// Builds a graph from an edge list, rejecting loops and out-of-range
    /// endpoints. Repeated edges are harmless.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(order)?;
        for &(u, v) in edges {
            g.check_pair(u, v)?;
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from neighbour masks, validating every invariant.
    pub fn from_rows(rows: &[u64]) -> Result<Graph> {
        let order = rows.len();
        let mut g = Graph::empty(order)?;
        let valid = VertexSet::prefix(order).bits();
        for (v, &row) in rows.iter().enumerate() {
            if row & !valid != 0 {
                return param(format!("row {v} has bits beyond order {order}"));
            }
            if (row >> v) & 1 == 1 {
                return Err(Error::Loop(v));
            }
            g.adj[v] = row;
        }
        for u in 0..order {
            for v in VertexSet(rows[u]) {
                if (rows[v] >> u) & 1 == 0 {
                    return param(format!("adjacency is not symmetric at ({u}, {v})"));
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// All vertices as a set.
    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::prefix(self.order)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && (self.adj[u] >> v) & 1 == 1
    }

    /// Neighbour masks of vertices `0..order`.
    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.order]
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| {
            (VertexSet(self.adj[u]) - VertexSet::prefix(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        }
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        Ok(())
    }

    #[inline]
    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    #[inline]
    pub(crate) fn clear_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1u64 << v);
        self.adj[v] &= !(1u64 << u);
    }

    /// Returns a copy with the edge `{u, v}` added.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.set_edge(u, v);
        Ok(g)
    }

    /// Returns a copy with the edge `{u, v}` removed (if present).
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.clear_edge(u, v);
        Ok(g)
    }

    /// Appends a vertex `order` adjacent to `neighbors`.
    pub fn with_vertex(&self, neighbors: VertexSet) -> Result<Graph> {
        check_order(self.order + 1)?;
        if !neighbors.is_subset(self.vertices()) {
            return param("new vertex neighbours must be existing vertices");
        }
        let mut g = self.clone();
        g.push_vertex(neighbors);
        Ok(g)
    }

    #[inline]
    pub(crate) fn push_vertex(&mut self, neighbors: VertexSet) {
        let v = self.order;
        self.order += 1;
        self.adj[v] = neighbors.0;
        for u in neighbors {
            self.adj[u] |= 1u64 << v;
        }
    }

    pub fn complement(&self) -> Graph {
        let all = VertexSet::prefix(self.order).0;
        let mut g = self.clone();
        for v in 0..self.order {
            g.adj[v] = !self.adj[v] & all & !(1u64 << v);
        }
        g
    }

    /// Vertex-disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let order = self.order + other.order;
        check_order(order)?;
        let mut g = self.clone();
        g.order = order;
        for v in 0..other.order {
            g.adj[self.order + v] = other.adj[v] << self.order;
        }
        Ok(g)
    }

    /// Disjoint union plus every edge between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = VertexSet::prefix(self.order).0;
        let right = VertexSet::prefix(g.order).0 & !left;
        for v in 0..self.order {
            g.adj[v] |= right;
        }
        for v in self.order..g.order {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// `K_{a_1, ..., a_k}`: vertices adjacent iff they lie in different parts.
    /// Parts occupy consecutive index ranges in the given order.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
        if parts.is_empty() {
            return param("complete multipartite graph needs at least one part");
        }
        if let Some(i) = parts.iter().position(|&p| p == 0) {
            return param(format!("part {i} is empty"));
        }
        let order: usize = parts.iter().sum();
        let mut g = Graph::empty(order)?;
        let all = VertexSet::prefix(order).0;
        let mut start = 0;
        for &size in parts {
            let part = VertexSet::prefix(start + size).0 & !VertexSet::prefix(start).0;
            for v in start..start + size {
                g.adj[v] = all & !part;
            }
            start += size;
        }
        Ok(g)
    }

    /// `N(u) ∩ N(v)`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> Result<VertexSet> {
        self.check_pair(u, v)
            .map_err(|_| Error::Parameter(format!("common neighbours need distinct in-range vertices, got ({u}, {v})")))?;
        Ok(VertexSet(self.adj[u] & self.adj[v]))
    }

    /// `|(N(u) ∪ N(v)) \ {u, v}|`.
    pub fn union_neighborhood_excl(&self, u: usize, v: usize) -> Result<usize> {
        self.check_pair(u, v)
            .map_err(|_| Error::Parameter(format!("union neighbourhood needs distinct in-range vertices, got ({u}, {v})")))?;
        Ok(self.union_excl_unchecked(u, v))
    }

    #[inline]
    pub(crate) fn union_excl_unchecked(&self, u: usize, v: usize) -> usize {
        ((self.adj[u] | self.adj[v]) & !(1u64 << u) & !(1u64 << v)).count_ones() as usize
    }

    /// Subgraph induced by `keep`, relabelled to `0..keep.len()` preserving
    /// the relative order of vertices.
    pub fn induced(&self, keep: VertexSet) -> Result<Graph> {
        let keep = keep & self.vertices();
        let verts = keep.to_vec();
        let mut g = Graph::empty(verts.len())?;
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Deletes vertex `v`; later vertices shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        self.induced(self.vertices().without(v))
    }

    /// Relabels with `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.order {
            return param(format!(
                "permutation has length {}, graph has order {}",
                perm.len(),
                self.order
            ));
        }
        let image: VertexSet = perm.iter().copied().filter(|&p| p < self.order).collect();
        if image.len() != self.order {
            return param("relabelling is not a permutation");
        }
        Ok(self.relabel_unchecked(perm))
    }

    pub(crate) fn relabel_unchecked(&self, perm: &[usize]) -> Graph {
        let mut g = Graph {
            order: self.order,
            adj: [0; MAX_ORDER],
        };
        for u in 0..self.order {
            let mut row = 0u64;
            for w in VertexSet(self.adj[u]) {
                row |= 1u64 << perm[w];
            }
            g.adj[perm[u]] = row;
        }
        g
    }

    /// Connected components as vertex sets, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let comp = self.reach(start, left);
            left = left - comp;
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `start` inside `within` (which must contain `start`).
    #[inline]
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in VertexSet(frontier) {
                next |= self.adj[v];
            }
            next &= within.0 & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0, self.vertices()) == self.vertices()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, ", self.order)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// A cycle `v_1 v_2 ... v_l v_1` embedded in a graph.
///
/// Positions are taken modulo the cycle length, so `vertex(-1)` is the last
/// vertex and `vertex(l)` the first.
#[derive(Clone, Debug)]
pub struct CycleEmbedding<'g> {
    graph: &'g Graph,
    sequence: Vec<usize>,
    members: VertexSet,
}

impl<'g> CycleEmbedding<'g> {
    pub fn new(graph: &'g Graph, sequence: Vec<usize>) -> Result<Self> {
        let len = sequence.len();
        if len < 3 || len > graph.order() {
            return param(format!(
                "cycle length {len} must lie in 3..={}",
                graph.order()
            ));
        }
        let mut members = VertexSet::EMPTY;
        for &v in &sequence {
            graph.check_vertex(v)?;
            if members.contains(v) {
                return param(format!("vertex {v} repeats in cycle"));
            }
            members = members.with(v);
        }
        for i in 0..len {
            let (a, b) = (sequence[i], sequence[(i + 1) % len]);
            if !graph.has_edge(a, b) {
                return param(format!("cycle uses missing edge ({a}, {b})"));
            }
        }
        Ok(CycleEmbedding {
            graph,
            sequence,
            members,
        })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    pub fn members(&self) -> VertexSet {
        self.members
    }

    /// Vertex at cyclic position `i`.
    pub fn vertex(&self, i: isize) -> usize {
        self.sequence[i.rem_euclid(self.len() as isize) as usize]
    }

    /// Position of `v` on the cycle.
    pub fn position(&self, v: usize) -> Option<usize> {
        self.sequence.iter().position(|&w| w == v)
    }

    /// The arc `[i, j] = {i, i+1, ..., j}` of positions, walking forwards.
    pub fn arc(&self, i: usize, j: usize) -> Vec<usize> {
        let len = self.len();
        let steps = (j + len - i % len) % len;
        (0..=steps).map(|k| self.sequence[(i + k) % len]).collect()
    }

    /// Shorter of the two arc lengths (in edges) between positions `i` and `j`.
    pub fn circular_distance(&self, i: usize, j: usize) -> usize {
        let len = self.len();
        let d = (j + len - i % len) % len;
        d.min(len - d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_and_range() {
        let g = Graph::empty(5).unwrap();
        assert_eq!((g.order(), g.edge_count()), (5, 0));
        assert_eq!(Graph::empty(1).unwrap().order(), 1);
        assert_eq!(Graph::empty(65), Err(Error::OrderOutOfRange(65)));
        assert_eq!(Graph::empty(0), Err(Error::OrderOutOfRange(0)));
        assert_eq!(Graph::empty(64).unwrap().complement().edge_count(), 64 * 63 / 2);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(4).unwrap().complement(), Graph::empty(4).unwrap());
        let c5 = Graph::cycle(5).unwrap();
        let co = c5.complement();
        assert_eq!(co.edge_count(), 5);
        assert!(co.vertices().iter().all(|v| co.degree(v) == 2));
        assert!(co.is_connected());
        let star = Graph::complete_multipartite(&[1, 5]).unwrap();
        let co = star.complement();
        assert_eq!(co.edge_count(), 10);
        assert_eq!(co.components().len(), 2);
    }

    #[test]
    fn loops_rejected() {
        let g = Graph::empty(3).unwrap();
        assert_eq!(g.add_edge(1, 1), Err(Error::Loop(1)));
        assert!(matches!(g.add_edge(0, 3), Err(Error::VertexOutOfRange { .. })));
        assert!(Graph::from_rows(&[0b10, 0b00]).is_err());
        assert_eq!(Graph::from_rows(&[0b01]), Err(Error::Loop(0)));
    }

    #[test]
    fn union_and_join() {
        let k1 = Graph::complete(1).unwrap();
        let wheel = k1.join(&Graph::cycle(4).unwrap()).unwrap();
        assert_eq!((wheel.order(), wheel.edge_count()), (5, 8));
        assert_eq!(wheel.degree(0), 4);

        let k3 = Graph::complete(3).unwrap();
        let two = k3.disjoint_union(&k3).unwrap();
        assert_eq!((two.order(), two.edge_count(), two.components().len()), (6, 6, 2));

        let k6 = Graph::complete(6).unwrap();
        let g = k1.join(&k6.disjoint_union(&k6).unwrap()).unwrap();
        assert_eq!(g.order(), 13);
        assert_eq!(g.edge_count(), 12 + 2 * 15);

        let big = Graph::complete(40).unwrap();
        assert!(matches!(big.disjoint_union(&big), Err(Error::OrderOutOfRange(80))));
    }

    #[test]
    fn multipartite() {
        assert_eq!(Graph::complete_multipartite(&[2, 3]).unwrap().edge_count(), 6);
        assert_eq!(
            Graph::complete_multipartite(&[1, 1, 1]).unwrap(),
            Graph::complete(3).unwrap()
        );
        assert!(Graph::complete_multipartite(&[]).is_err());
        assert!(Graph::complete_multipartite(&[2, 0]).is_err());
    }

    #[test]
    fn neighbourhoods() {
        let k23 = Graph::complete_multipartite(&[2, 3]).unwrap();
        assert_eq!(k23.common_neighbors(0, 1).unwrap().len(), 3);
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.common_neighbors(0, 1).unwrap().len(), 0);
        assert_eq!(c5.union_neighborhood_excl(0, 1).unwrap(), 2);
        assert_eq!(c5.union_neighborhood_excl(0, 2).unwrap(), 3);
        assert!(matches!(c5.common_neighbors(2, 2), Err(Error::Parameter(_))));
    }

    #[test]
    fn induced_and_relabel() {
        let p4 = Graph::path(4).unwrap();
        let sub = p4.induced(VertexSet::from_iter([0, 1, 3])).unwrap();
        assert_eq!(sub.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        let r = p4.relabel(&[3, 2, 1, 0]).unwrap();
        assert_eq!(r, p4);
        assert!(p4.relabel(&[0, 0, 1, 2]).is_err());
        let with = p4.with_vertex(VertexSet::from_iter([0, 3])).unwrap();
        assert_eq!(with, Graph::cycle(5).unwrap());
    }

    #[test]
    fn cycle_embedding_arcs() {
        let c6 = Graph::cycle(6).unwrap();
        let emb = CycleEmbedding::new(&c6, vec![0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(emb.vertex(-1), 5);
        assert_eq!(emb.vertex(7), 1);
        assert_eq!(emb.arc(4, 1), vec![4, 5, 0, 1]);
        assert_eq!(emb.arc(2, 2), vec![2]);
        assert_eq!(emb.circular_distance(0, 4), 2);
        assert_eq!(emb.circular_distance(1, 4), 3);
        assert!(CycleEmbedding::new(&c6, vec![0, 1, 3]).is_err());
        assert!(CycleEmbedding::new(&c6, vec![0, 1]).is_err());
        assert!(CycleEmbedding::new(&c6, vec![0, 1, 0]).is_err());
    }

    #[test]
    fn vertex_set_ops() {
        let s: VertexSet = [1, 4, 63].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert!(s.contains(63) && !s.contains(64));
        assert_eq!(s.to_vec(), vec![1, 4, 63]);
        assert_eq!((s - VertexSet::singleton(4)).len(), 2);
        assert_eq!(VertexSet::prefix(64).len(), 64);
        assert_eq!(s.first(), Some(1));
    }
}
