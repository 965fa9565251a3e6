//! Exact cycle questions: girth, circumference, fixed-length cycles,
//! the cycle spectrum, and enumeration of cycles of a given length.
//!
//! Every cycle lives inside one biconnected block, so the searches run block
//! by block. Blocks of at most [`DP_LIMIT`] vertices use the subset dynamic
//! programme over `(vertex set, endpoint)`: `table[S]` holds the endpoints `e`
//! of paths that start at the lowest vertex of `S`, cover exactly `S` and end
//! at `e`. Larger blocks use depth-first branch and bound, pruning a partial
//! path when its length plus the vertices still reachable from its endpoint
//! cannot beat the target.

use std::collections::BTreeSet;

use crate::graph::{Graph, VertexSet};

use super::connectivity::is_bipartite;

/// Largest block handled by the subset dynamic programme.
pub const DP_LIMIT: usize = 20;

/// Shortest cycle length, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best = usize::MAX;
    let mut dist = [usize::MAX; 64];
    let mut parent = [usize::MAX; 64];
    let mut queue = [0usize; 64];
    for root in 0..n {
        dist[..n].fill(usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        let (mut head, mut tail) = (0, 1);
        queue[0] = root;
        while head < tail {
            let u = queue[head];
            head += 1;
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue[tail] = w;
                    tail += 1;
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// Biconnected blocks with at least three vertices, as vertex sets.
pub fn cyclic_blocks(g: &Graph) -> Vec<VertexSet> {
    struct State<'a> {
        g: &'a Graph,
        disc: [usize; 64],
        low: [usize; 64],
        time: usize,
        stack: Vec<(usize, usize)>,
        blocks: Vec<VertexSet>,
    }
    fn dfs(st: &mut State, u: usize, parent: usize) {
        st.disc[u] = st.time;
        st.low[u] = st.time;
        st.time += 1;
        for v in st.g.neighbors(u) {
            if st.disc[v] == usize::MAX {
                st.stack.push((u, v));
                dfs(st, v, u);
                st.low[u] = st.low[u].min(st.low[v]);
                if st.low[v] >= st.disc[u] {
                    let mut block = VertexSet::EMPTY;
                    while let Some((a, b)) = st.stack.pop() {
                        block = block.with(a).with(b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    if block.len() >= 3 {
                        st.blocks.push(block);
                    }
                }
            } else if v != parent && st.disc[v] < st.disc[u] {
                st.stack.push((u, v));
                st.low[u] = st.low[u].min(st.disc[v]);
            }
        }
    }
    let mut st = State {
        g,
        disc: [usize::MAX; 64],
        low: [0; 64],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in 0..g.order() {
        if st.disc[v] == usize::MAX {
            dfs(&mut st, v, usize::MAX);
        }
    }
    st.blocks.sort();
    st.blocks
}

/// A block as a standalone graph plus the map back to original vertices.
struct Block {
    graph: Graph,
    names: Vec<usize>,
}

impl Block {
    fn of(g: &Graph, verts: VertexSet) -> Block {
        Block {
            graph: g.induced(verts).expect("block has at least 3 vertices"),
            names: verts.to_vec(),
        }
    }

    fn rename(&self, cycle: Vec<usize>) -> Vec<usize> {
        cycle.into_iter().map(|v| self.names[v]).collect()
    }
}

/// Path table for the subset dynamic programme; masks with more than
/// `max_len` vertices are never extended.
fn path_table(g: &Graph, max_len: usize) -> Vec<u32> {
    let k = g.order();
    debug_assert!(k <= DP_LIMIT);
    let size = 1usize << k;
    let full = (size - 1) as u32;
    let rows: Vec<u32> = g.rows().iter().map(|&r| r as u32).collect();
    let mut table = vec![0u32; size];
    for s in 0..k {
        table[1 << s] = 1 << s;
    }
    for mask in 1..size {
        let ends = table[mask];
        if ends == 0 || mask.count_ones() as usize >= max_len {
            continue;
        }
        let s = mask.trailing_zeros();
        let allowed = full & !(mask as u32) & !((2u32 << s) - 1);
        for e in VertexSet::from_bits(ends as u64) {
            for w in VertexSet::from_bits((rows[e] & allowed) as u64) {
                table[mask | 1 << w] |= 1 << w;
            }
        }
    }
    table
}

/// Endpoints of covering paths of `mask` that close into a cycle.
#[inline]
fn closing(g: &Graph, table: &[u32], mask: usize) -> u32 {
    if mask.count_ones() < 3 {
        return 0;
    }
    let s = mask.trailing_zeros() as usize;
    table[mask] & g.rows()[s] as u32
}

/// Recovers the cycle through `mask` closing at `end`, starting at its lowest vertex.
fn rebuild(g: &Graph, table: &[u32], mask: usize, end: usize) -> Vec<usize> {
    let mut seq = vec![end];
    let (mut cur, mut e) = (mask, end);
    while cur.count_ones() > 1 {
        let prev = cur ^ (1 << e);
        let p = (table[prev] & g.rows()[e] as u32).trailing_zeros() as usize;
        seq.push(p);
        cur = prev;
        e = p;
    }
    seq.reverse();
    seq
}

fn dp_cycle_of_length(g: &Graph, len: usize) -> Option<Vec<usize>> {
    let table = path_table(g, len);
    (1..table.len())
        .filter(|m| m.count_ones() as usize == len)
        .find_map(|m| {
            let c = closing(g, &table, m);
            (c != 0).then(|| rebuild(g, &table, m, c.trailing_zeros() as usize))
        })
}

fn dp_longest_cycle(g: &Graph) -> Option<Vec<usize>> {
    let table = path_table(g, g.order());
    let mut best: Option<usize> = None;
    for m in 1..table.len() {
        if closing(g, &table, m) != 0 && best.is_none_or(|b| m.count_ones() > b.count_ones()) {
            best = Some(m);
        }
    }
    best.map(|m| {
        let c = closing(g, &table, m);
        rebuild(g, &table, m, c.trailing_zeros() as usize)
    })
}

fn dp_spectrum(g: &Graph, out: &mut BTreeSet<usize>) {
    let table = path_table(g, g.order());
    for m in 1..table.len() {
        if closing(g, &table, m) != 0 {
            out.insert(m.count_ones() as usize);
        }
    }
}

/// Depth-first cycle search over paths whose first vertex is their lowest.
struct PathSearch<'a> {
    g: &'a Graph,
    start: usize,
    allowed: VertexSet,
    path: Vec<usize>,
}

impl<'a> PathSearch<'a> {
    fn new(g: &'a Graph, start: usize) -> Self {
        PathSearch {
            g,
            start,
            allowed: g.vertices() - VertexSet::prefix(start + 1),
            path: vec![start],
        }
    }

    fn end(&self) -> usize {
        *self.path.last().expect("path is never empty")
    }

    fn closes(&self) -> bool {
        self.path.len() >= 3 && self.g.has_edge(self.end(), self.start)
    }

    /// Vertices still usable for extending the path, reachable from its end.
    fn reachable(&self, visited: VertexSet) -> VertexSet {
        let end = self.end();
        let free = self.allowed - visited;
        self.g.reach(end, free.with(end)).without(end)
    }

    /// Whether the cycle could still close through the reachable set.
    fn can_close(&self, reach: VertexSet) -> bool {
        let back = self.g.neighbors(self.start);
        self.path.len() >= 2 && (!(reach & back).is_empty() || back.contains(self.end()))
            || self.path.len() == 1
    }

    /// Calls `visit` on every cycle of exactly `len` vertices; stop when it returns true.
    fn exact(&mut self, len: usize, visited: VertexSet, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if self.path.len() == len {
            return self.closes() && visit(&self.path);
        }
        let reach = self.reachable(visited);
        if self.path.len() + reach.len() < len || !self.can_close(reach) {
            return false;
        }
        for w in self.g.neighbors(self.end()) & (self.allowed - visited) {
            self.path.push(w);
            let stop = self.exact(len, visited.with(w), visit);
            self.path.pop();
            if stop {
                return true;
            }
        }
        false
    }

    fn longest(&mut self, visited: VertexSet, best: &mut Vec<usize>, ceiling: usize) {
        if self.closes() && self.path.len() > best.len() {
            *best = self.path.clone();
        }
        if best.len() == ceiling {
            return;
        }
        let reach = self.reachable(visited);
        if self.path.len() + reach.len() <= best.len() || !self.can_close(reach) {
            return;
        }
        for w in self.g.neighbors(self.end()) & (self.allowed - visited) {
            self.path.push(w);
            self.longest(visited.with(w), best, ceiling);
            self.path.pop();
            if best.len() == ceiling {
                return;
            }
        }
    }
}

/// Relabels so that high-degree vertices come first; large blocks start the
/// branch and bound from the densest part.
fn degree_order(g: &Graph) -> (Graph, Vec<usize>) {
    let mut verts: Vec<usize> = (0..g.order()).collect();
    verts.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut perm = vec![0; g.order()];
    for (new, &old) in verts.iter().enumerate() {
        perm[old] = new;
    }
    (g.relabel_unchecked(&perm), verts)
}

fn bnb_cycle_of_length(g: &Graph, len: usize) -> Option<Vec<usize>> {
    let (h, back) = degree_order(g);
    let mut found = None;
    for s in 0..h.order() {
        if h.order() - s < len {
            break;
        }
        let mut search = PathSearch::new(&h, s);
        let hit = search.exact(len, VertexSet::singleton(s), &mut |p| {
            found = Some(p.iter().map(|&v| back[v]).collect::<Vec<_>>());
            true
        });
        if hit {
            break;
        }
    }
    found.map(normalize)
}

fn bnb_longest_cycle(g: &Graph) -> Option<Vec<usize>> {
    let (h, back) = degree_order(g);
    let mut best = Vec::new();
    for s in 0..h.order() {
        let ceiling = h.order() - s;
        if ceiling <= best.len() {
            break;
        }
        PathSearch::new(&h, s).longest(VertexSet::singleton(s), &mut best, ceiling);
    }
    (!best.is_empty()).then(|| normalize(best.iter().map(|&v| back[v]).collect()))
}

/// Rotates a cycle so it starts at its smallest vertex, second vertex the
/// smaller of its two neighbours.
fn normalize(mut cycle: Vec<usize>) -> Vec<usize> {
    let i = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap_or(0);
    cycle.rotate_left(i);
    if cycle.len() > 2 && cycle[1] > cycle[cycle.len() - 1] {
        cycle[1..].reverse();
    }
    cycle
}

fn block_cycle_of_length(block: &Block, len: usize) -> Option<Vec<usize>> {
    let cycle = if block.graph.order() <= DP_LIMIT {
        dp_cycle_of_length(&block.graph, len)
    } else {
        bnb_cycle_of_length(&block.graph, len)
    };
    cycle.map(|c| normalize(block.rename(c)))
}

/// A cycle on exactly `len` vertices, if one exists. Blocks are tried in
/// order of their smallest vertex, so the witness is reproducible.
pub(crate) fn find_cycle_of_length(g: &Graph, len: usize) -> Option<Vec<usize>> {
    if len < 3 || len > g.order() {
        return None;
    }
    cyclic_blocks(g)
        .into_iter()
        .filter(|b| b.len() >= len)
        .map(|b| Block::of(g, b))
        // bipartite blocks have no odd cycles
        .filter(|b| len.is_multiple_of(2) || !is_bipartite(&b.graph))
        .find_map(|b| block_cycle_of_length(&b, len))
}

/// A longest cycle, if the graph has any cycle.
pub fn longest_cycle(g: &Graph) -> Option<Vec<usize>> {
    let mut best: Option<Vec<usize>> = None;
    for verts in cyclic_blocks(g) {
        if best.as_ref().is_some_and(|c| c.len() >= verts.len()) {
            continue;
        }
        let block = Block::of(g, verts);
        let cycle = if block.graph.order() <= DP_LIMIT {
            dp_longest_cycle(&block.graph)
        } else {
            bnb_longest_cycle(&block.graph)
        };
        if let Some(c) = cycle {
            if best.as_ref().is_none_or(|b| c.len() > b.len()) {
                best = Some(normalize(block.rename(c)));
            }
        }
    }
    best
}

/// Longest cycle length; 0 for forests.
pub fn circumference(g: &Graph) -> usize {
    longest_cycle(g).map_or(0, |c| c.len())
}

/// All lengths `l` such that the graph has a cycle of length `l`.
pub fn cycle_spectrum(g: &Graph) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for verts in cyclic_blocks(g) {
        let block = Block::of(g, verts);
        if block.graph.order() <= DP_LIMIT {
            dp_spectrum(&block.graph, &mut out);
        } else {
            for len in 3..=block.graph.order() {
                if !out.contains(&len) && bnb_cycle_of_length(&block.graph, len).is_some() {
                    out.insert(len);
                }
            }
        }
    }
    out
}

/// Cycles spanning every length from girth to circumference. Forests count
/// as weakly pancyclic.
pub fn is_weakly_pancyclic(g: &Graph) -> bool {
    let spectrum = cycle_spectrum(g);
    match (spectrum.first(), spectrum.last()) {
        (Some(&lo), Some(&hi)) => spectrum.len() == hi - lo + 1,
        _ => true,
    }
}

/// Cycles on exactly `len` vertices, one per cycle (rotation and reflection
/// identified), each normalized to start at its smallest vertex. Stops after
/// `cap` cycles; the flag reports whether more exist.
pub fn cycles_of_length(g: &Graph, len: usize, cap: usize) -> (Vec<Vec<usize>>, bool) {
    let mut out = Vec::new();
    let mut capped = false;
    if len < 3 || len > g.order() {
        return (out, capped);
    }
    for s in 0..g.order() {
        if g.order() - s < len {
            break;
        }
        let mut search = PathSearch::new(g, s);
        let stop = search.exact(len, VertexSet::singleton(s), &mut |p| {
            // each cycle is met twice, once per direction
            if p[1] > p[p.len() - 1] {
                return false;
            }
            if out.len() == cap {
                capped = true;
                return true;
            }
            out.push(p.to_vec());
            false
        });
        if stop {
            break;
        }
    }
    (out, capped)
}
