//! Isomorph-free generation of graphs by canonical augmentation.
//!
//! Graphs of order `k + 1` are grown from graphs of order `k` by adding one
//! vertex with every possible neighbourhood. A child is kept only when the
//! added vertex is, up to automorphism, the vertex an isomorphism-invariant
//! rule would delete from it; the rule prefers vertices with the largest
//! `(degree, sum of neighbour degrees)` and breaks ties by canonical
//! position. Every isomorphism class then has exactly one parent class, and
//! children of one parent that are isomorphic differ by an automorphism of
//! the parent, which a per-parent set of canonical forms removes (parents
//! with no symmetry cannot produce such pairs, so the set is skipped there).
//!
//! Output order is fixed: depth-first, neighbourhood masks ascending. The
//! parallel entry points split the tree at a fixed depth and reassemble
//! subtree results in that same order, so every result is independent of
//! the worker count.

use std::collections::HashSet;
use std::fmt;
use std::io::{self, Write};
use std::ops::ControlFlow;
use std::sync::Arc;

use rayon::prelude::*;

use crate::canon::canonical_labeling;
use crate::format::encode_graph6;
use crate::graph::{Graph, VertexSet, MAX_ORDER};
use crate::invariants::k2n_free;

/// Order at which the parallel generators hand subtrees to workers.
pub const SPLIT_DEPTH: usize = 5;

/// Predicate type for [`GenerationFilter::Custom`].
pub type Predicate = Arc<dyn Fn(&Graph) -> bool + Send + Sync>;

/// Which graphs the generator emits.
#[derive(Clone)]
pub enum GenerationFilter {
    All,
    /// Graphs without `K_{2,n}`; closed under vertex deletion, so the
    /// generator prunes with it at every level.
    K2nFree(usize),
    /// An arbitrary isomorphism-invariant predicate. When `hereditary` is
    /// set it must hold for every induced subgraph of a passing graph, and
    /// it is applied at every level; otherwise only at the target order.
    Custom { predicate: Predicate, hereditary: bool },
}

impl GenerationFilter {
    pub fn custom(predicate: impl Fn(&Graph) -> bool + Send + Sync + 'static, hereditary: bool) -> Self {
        GenerationFilter::Custom { predicate: Arc::new(predicate), hereditary }
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        match self {
            GenerationFilter::All => true,
            GenerationFilter::K2nFree(n) => k2n_free(g, *n),
            GenerationFilter::Custom { predicate, .. } => predicate(g),
        }
    }

    pub fn is_hereditary(&self) -> bool {
        match self {
            GenerationFilter::All | GenerationFilter::K2nFree(_) => true,
            GenerationFilter::Custom { hereditary, .. } => *hereditary,
        }
    }

    /// Whether the filter must be tested on intermediate graphs.
    fn prunes(&self) -> bool {
        !matches!(self, GenerationFilter::All) && self.is_hereditary()
    }
}

impl fmt::Debug for GenerationFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenerationFilter::All => write!(f, "All"),
            GenerationFilter::K2nFree(n) => write!(f, "K2nFree({n})"),
            GenerationFilter::Custom { hereditary, .. } => {
                write!(f, "Custom {{ hereditary: {hereditary} }}")
            }
        }
    }
}

/// Invariant ranking used to pick the vertex whose deletion gives the parent.
#[inline]
fn deletion_key(g: &Graph, degrees: &[u32; MAX_ORDER], v: usize) -> (u32, u32) {
    let spread = g.neighbors(v).iter().map(|w| degrees[w]).sum();
    (degrees[v], spread)
}

/// Whether the last vertex of `child` is its canonical deletion vertex.
/// Returns the child's canonical graph when a labelling had to be computed.
fn is_canonical_extension(child: &Graph) -> (bool, Option<Graph>) {
    let n = child.order();
    let last = n - 1;
    let mut degrees = [0u32; MAX_ORDER];
    for v in 0..n {
        degrees[v] = child.degree(v) as u32;
    }
    let top_degree = degrees[..n].iter().copied().max().unwrap_or(0);
    if degrees[last] != top_degree {
        return (false, None);
    }
    let last_key = deletion_key(child, &degrees, last);
    let mut candidates = VertexSet::singleton(last);
    for v in 0..last {
        if degrees[v] == top_degree {
            let key = deletion_key(child, &degrees, v);
            if key > last_key {
                return (false, None);
            }
            if key == last_key {
                candidates = candidates.with(v);
            }
        }
    }
    if candidates.len() == 1 {
        return (true, None);
    }
    let labeling = canonical_labeling(child);
    let chosen = candidates
        .iter()
        .max_by_key(|&v| labeling.labels()[v])
        .expect("candidates are non-empty");
    (labeling.same_orbit(chosen, last), Some(labeling.apply(child)))
}

/// Children of `parent` kept by the augmentation rule, in mask order.
fn children(parent: &Graph, filter: &GenerationFilter, visit: &mut dyn FnMut(Graph) -> ControlFlow<()>) -> ControlFlow<()> {
    let k = parent.order();
    let symmetric = !canonical_labeling(parent).is_rigid();
    let mut seen: HashSet<Graph> = HashSet::new();
    let prunes = filter.prunes();
    for mask in 0..(1u64 << k) {
        let mut child = parent.clone();
        child.push_vertex(VertexSet::from_bits(mask));
        let (keep, canonical) = is_canonical_extension(&child);
        if !keep || (prunes && !filter.accepts(&child)) {
            continue;
        }
        if symmetric {
            let form = canonical.unwrap_or_else(|| canonical_labeling(&child).apply(&child));
            if !seen.insert(form) {
                continue;
            }
        }
        visit(child)?;
    }
    ControlFlow::Continue(())
}

fn descend(
    g: Graph,
    order: usize,
    filter: &GenerationFilter,
    visit: &mut dyn FnMut(&Graph) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if g.order() == order {
        if filter.prunes() || filter.accepts(&g) {
            return visit(&g);
        }
        return ControlFlow::Continue(());
    }
    children(&g, filter, &mut |child| descend(child, order, filter, visit))
}

fn root(filter: &GenerationFilter) -> Option<Graph> {
    let g = Graph::empty(1).expect("order 1 is valid");
    (!filter.prunes() || filter.accepts(&g)).then_some(g)
}

/// Calls `visit` once per isomorphism class of graphs on `order` vertices
/// passing `filter`, in a fixed order; `visit` may stop the run early.
/// Orders outside `1..=64` produce nothing.
pub fn enumerate(
    order: usize,
    filter: &GenerationFilter,
    visit: &mut dyn FnMut(&Graph) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if !(1..=MAX_ORDER).contains(&order) {
        return ControlFlow::Continue(());
    }
    match root(filter) {
        Some(g) => descend(g, order, filter, visit),
        None => ControlFlow::Continue(()),
    }
}

/// Number of classes emitted by [`enumerate`].
pub fn count(order: usize, filter: &GenerationFilter) -> usize {
    let mut total = 0;
    let _ = enumerate(order, filter, &mut |_| {
        total += 1;
        ControlFlow::Continue(())
    });
    total
}

/// All classes emitted by [`enumerate`], collected.
pub fn collect(order: usize, filter: &GenerationFilter) -> Vec<Graph> {
    let mut out = Vec::new();
    let _ = enumerate(order, filter, &mut |g| {
        out.push(g.clone());
        ControlFlow::Continue(())
    });
    out
}

/// Writes one graph6 line per class; returns the number written.
pub fn write_graph6<W: Write>(order: usize, filter: &GenerationFilter, out: &mut W) -> io::Result<usize> {
    let mut written = 0;
    let mut failure = None;
    let _ = enumerate(order, filter, &mut |g| match writeln!(out, "{}", encode_graph6(g)) {
        Ok(()) => {
            written += 1;
            ControlFlow::Continue(())
        }
        Err(e) => {
            failure = Some(e);
            ControlFlow::Break(())
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(written),
    }
}

/// The search-tree nodes at the split depth, in sequential order.
fn frontier(order: usize, filter: &GenerationFilter) -> Vec<Graph> {
    let depth = order.min(SPLIT_DEPTH);
    let mut out = Vec::new();
    if let Some(g) = root(filter) {
        // intermediate nodes, not finished graphs: only hereditary pruning applies
        let _ = descend_nodes(g, depth, filter, &mut out);
    }
    out
}

fn descend_nodes(g: Graph, depth: usize, filter: &GenerationFilter, out: &mut Vec<Graph>) -> ControlFlow<()> {
    if g.order() == depth {
        out.push(g);
        return ControlFlow::Continue(());
    }
    children(&g, filter, &mut |child| descend_nodes(child, depth, filter, out))
}

fn pool(workers: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool starts")
}

/// Folds every emitted class on `workers` threads. Each subtree below the
/// split depth is folded from `identity()` in sequential order and the
/// partial results are combined left to right with `reduce`, so any
/// associative `reduce` gives the same answer for every worker count.
pub fn fold_parallel<T, I, F, R>(
    order: usize,
    filter: &GenerationFilter,
    workers: usize,
    identity: I,
    fold: F,
    reduce: R,
) -> T
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(T, &Graph) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    if !(1..=MAX_ORDER).contains(&order) {
        return identity();
    }
    let nodes = frontier(order, filter);
    let partials: Vec<T> = pool(workers).install(|| {
        nodes
            .into_par_iter()
            .map(|node| {
                let mut acc = Some(identity());
                let _ = descend(node, order, filter, &mut |g| {
                    let prev = acc.take().expect("accumulator present");
                    acc = Some(fold(prev, g));
                    ControlFlow::Continue(())
                });
                acc.expect("accumulator present")
            })
            .collect()
    });
    partials.into_iter().fold(identity(), reduce)
}

/// The same classes as [`enumerate`], generated on `workers` threads and
/// returned in the sequential order.
pub fn enumerate_parallel(order: usize, filter: &GenerationFilter, workers: usize) -> Vec<Graph> {
    fold_parallel(
        order,
        filter,
        workers,
        Vec::new,
        |mut acc, g| {
            acc.push(g.clone());
            acc
        },
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    )
}

/// Number of classes, counted on `workers` threads.
pub fn count_parallel(order: usize, filter: &GenerationFilter, workers: usize) -> usize {
    fold_parallel(order, filter, workers, || 0, |acc, _| acc + 1, |a, b| a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| count(n, &GenerationFilter::All)).collect();
        assert_eq!(counts, [1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn square_free_on_four_vertices() {
        // of the 11 classes, C_4, the diamond and K_4 all contain a 4-cycle
        assert_eq!(count(4, &GenerationFilter::K2nFree(2)), 8);
    }

    #[test]
    fn no_duplicates() {
        let graphs = collect(6, &GenerationFilter::All);
        let forms: HashSet<_> = graphs.iter().map(canonical_form).collect();
        assert_eq!(forms.len(), graphs.len());
    }

    #[test]
    fn early_exit() {
        let mut seen = 0;
        let flow = enumerate(6, &GenerationFilter::All, &mut |_| {
            seen += 1;
            if seen == 10 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        assert!(flow.is_break());
        assert_eq!(seen, 10);
    }

    #[test]
    fn parallel_matches_sequential_order() {
        let filter = GenerationFilter::K2nFree(2);
        assert_eq!(enumerate_parallel(7, &filter, 3), collect(7, &filter));
        assert_eq!(count_parallel(3, &GenerationFilter::All, 2), 4);
    }

    #[test]
    fn non_hereditary_custom_filter() {
        let connected = GenerationFilter::custom(|g: &Graph| g.is_connected(), false);
        // connected graphs on 5 vertices
        assert_eq!(count(5, &connected), 21);
    }

    #[test]
    fn graph6_sink() {
        let mut buf = Vec::new();
        assert_eq!(write_graph6(3, &GenerationFilter::All, &mut buf).unwrap(), 4);
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 4);
        assert!(text.lines().all(|l| crate::format::decode_graph6(l).unwrap().order() == 3));
    }
}
