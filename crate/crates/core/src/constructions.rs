//! Explicit lower-bound colourings. Each builder returns the graph, its
//! complement, and a list of claims, each with the value it should have and
//! the value measured independently by [`crate::invariants`].

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::canon::are_isomorphic;
use crate::error::{param, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::invariants::{
    circumference, contains_cycle, k2n_free, max_common_neighborhood, Pattern, PatternParams,
};

/// How a claimed value relates to the measured one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// measured = claimed
    Equal,
    /// measured ≤ claimed
    AtMost,
    /// measured < claimed
    Below,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ClaimValue {
    Count(usize),
    Flag(bool),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub property: String,
    pub relation: Relation,
    pub claimed: ClaimValue,
    pub measured: ClaimValue,
    pub holds: bool,
}

impl Claim {
    fn count(property: &str, relation: Relation, claimed: usize, measured: usize) -> Claim {
        let holds = match relation {
            Relation::Equal => measured == claimed,
            Relation::AtMost => measured <= claimed,
            Relation::Below => measured < claimed,
        };
        Claim {
            property: property.to_owned(),
            relation,
            claimed: ClaimValue::Count(claimed),
            measured: ClaimValue::Count(measured),
            holds,
        }
    }

    fn flag(property: &str, claimed: bool, measured: bool) -> Claim {
        Claim {
            property: property.to_owned(),
            relation: Relation::Equal,
            claimed: ClaimValue::Flag(claimed),
            measured: ClaimValue::Flag(measured),
            holds: claimed == measured,
        }
    }
}

/// A constructed graph `G` (the side that must avoid `K_{2,n}`, or the red
/// side for generic colourings), its complement, and its checked claims.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionReport {
    pub name: String,
    pub params: BTreeMap<String, usize>,
    pub graph: Graph,
    pub complement_graph: Graph,
    pub claims: Vec<Claim>,
}

impl ConstructionReport {
    fn new(name: &str, params: &[(&str, usize)], graph: Graph) -> Self {
        ConstructionReport {
            name: name.to_owned(),
            params: params.iter().map(|&(k, v)| (k.to_owned(), v)).collect(),
            complement_graph: graph.complement(),
            graph,
            claims: Vec::new(),
        }
    }

    /// True iff every claim matched its measurement.
    pub fn verified(&self) -> bool {
        self.claims.iter().all(|c| c.holds)
    }

    pub fn claim(&self, property: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.property == property)
    }

    /// Measured count of a claim, if it is a count.
    pub fn measured(&self, property: &str) -> Option<usize> {
        match self.claim(property)?.measured {
            ClaimValue::Count(v) => Some(v),
            ClaimValue::Flag(_) => None,
        }
    }

    fn push(&mut self, claim: Claim) {
        self.claims.push(claim);
    }
}

fn check_total(order: usize) -> Result<()> {
    if (1..=MAX_ORDER).contains(&order) {
        Ok(())
    } else {
        param(format!("construction needs {order} vertices, outside 1..={MAX_ORDER}"))
    }
}

/// Disjoint union of cliques of the given sizes (empty sizes skipped).
fn cliques(sizes: &[usize]) -> Result<Graph> {
    let mut out: Option<Graph> = None;
    for &s in sizes.iter().filter(|&&s| s > 0) {
        let k = Graph::complete(s)?;
        out = Some(match out {
            None => k,
            Some(g) => g.disjoint_union(&k)?,
        });
    }
    out.ok_or_else(|| crate::Error::Parameter("no vertices to build".into()))
}

/// `K_1` joined to a disjoint union of cliques; vertex 0 is the apex and the
/// cliques follow in the given order.
fn apex_over_cliques(sizes: &[usize]) -> Result<Graph> {
    Graph::complete(1)?.join(&cliques(sizes)?)
}

/// Whether `g` with vertex 0 removed is complete multipartite with the
/// given part sizes, compared up to isomorphism.
fn non_apex_is_multipartite(g: &Graph, parts: &[usize]) -> bool {
    let rest = g.induced(g.vertices().without(0));
    match (rest, Graph::complete_multipartite(parts)) {
        (Ok(rest), Ok(expected)) => are_isomorphic(&rest, &expected),
        _ => false,
    }
}

/// The star `K_{1,m-1}` on `m` vertices: no two vertices share more than one
/// neighbour, and its complement `K_{m-1} ∪ K_1` has no cycle of length `m`
/// or `m + 1`.
pub fn star_witness(m: usize) -> Result<ConstructionReport> {
    if m < 3 {
        return param(format!("the star needs m ≥ 3, got {m}"));
    }
    check_total(m)?;
    let g = Graph::complete_multipartite(&[1, m - 1])?;
    let mut r = ConstructionReport::new("star", &[("m", m)], g);
    let (g, h) = (&r.graph, &r.complement_graph);
    let claims = vec![
        Claim::count("order", Relation::Equal, m, g.order()),
        Claim::count("max_common_neighborhood", Relation::AtMost, 1, max_common_neighborhood(g)),
        Claim::count("complement_circumference", Relation::Below, m, circumference(h)),
        Claim::flag("complement_has_forbidden_cycle", false, contains_cycle(h, m) || contains_cycle(h, m + 1)),
    ];
    for c in claims {
        r.push(c);
    }
    Ok(r)
}

/// The generic lower-bound colouring for a connected red graph on
/// `g_order` vertices against a blue pattern: red is `χ − 1` cliques of
/// order `g_order − 1` plus a clique of order `σ − 1`, so blue is complete
/// multipartite with those part sizes.
pub fn burr_witness(g_order: usize, pattern: PatternParams) -> Result<ConstructionReport> {
    if g_order < 2 || g_order < pattern.sigma {
        return param(format!(
            "g_order must be at least max(2, σ = {}), got {g_order}",
            pattern.sigma
        ));
    }
    let total = pattern.burr_bound(g_order) - 1;
    check_total(total)?;
    let mut parts = vec![g_order - 1; pattern.chi - 1];
    if pattern.sigma > 1 {
        parts.push(pattern.sigma - 1);
    }
    let red = cliques(&parts)?;
    let mut params = vec![("g_order", g_order), ("chi", pattern.chi), ("sigma", pattern.sigma)];
    let (name, blue_has) = match pattern.pattern {
        Pattern::Cycle { m } => {
            params.push(("m", m));
            ("burr_cycle", Box::new(move |b: &Graph| contains_cycle(b, m)) as Box<dyn Fn(&Graph) -> bool>)
        }
        Pattern::CyclePair { m } => {
            params.push(("m", m));
            (
                "burr_cycle_pair",
                Box::new(move |b: &Graph| contains_cycle(b, m) || contains_cycle(b, m + 1)) as Box<dyn Fn(&Graph) -> bool>,
            )
        }
        Pattern::K2n { n } => {
            params.push(("n", n));
            ("burr_k2n", Box::new(move |b: &Graph| !k2n_free(b, n)) as Box<dyn Fn(&Graph) -> bool>)
        }
    };
    let mut r = ConstructionReport::new(name, &params, red);
    let largest = r.graph.components().iter().map(|c| c.len()).max().unwrap_or(0);
    let blue_shape = Graph::complete_multipartite(&parts).is_ok_and(|k| are_isomorphic(&k, &r.complement_graph));
    let claims = vec![
        Claim::count("order", Relation::Equal, total, r.graph.order()),
        Claim::count("red_largest_component", Relation::Below, g_order, largest),
        Claim::flag("red_has_cycle_of_g_order", false, contains_cycle(&r.graph, g_order)),
        Claim::flag("blue_is_complete_multipartite", true, blue_shape),
        Claim::flag("blue_contains_pattern", false, blue_has(&r.complement_graph)),
    ];
    for c in claims {
        r.push(c);
    }
    Ok(r)
}

/// Complement is `K_1 ∨ (K_{m+t−p} ∪ p·K_{m+1})` on `(p+1)m + t + 1`
/// vertices; it beats the goodness bound for `K_{2,n}` against `C_{2m}` with
/// `n = pm + t`, for `p ≥ 1` and `p + 1 ≤ t < m + p − 1`.
pub fn uniform_badness_witness(m: usize, p: usize, t: usize) -> Result<ConstructionReport> {
    if p < 1 {
        return param(format!("p ≥ 1 violated (p = {p})"));
    }
    if t < p + 1 {
        return param(format!("t ≥ p + 1 violated (t = {t}, p = {p})"));
    }
    if t + 1 >= m + p {
        return param(format!("t < m + p − 1 violated (t = {t}, m = {m}, p = {p})"));
    }
    let order = (p + 1) * m + t + 1;
    check_total(order)?;
    let n = p * m + t;
    let mut sizes = vec![m + t - p];
    sizes.extend(std::iter::repeat_n(m + 1, p));
    let complement = apex_over_cliques(&sizes)?;
    let mut r = ConstructionReport::new(
        "uniform_badness",
        &[("m", m), ("n", n), ("p", p), ("t", t)],
        complement.complement(),
    );
    let (g, h) = (&r.graph, &r.complement_graph);
    let common = max_common_neighborhood(g);
    let claims = vec![
        Claim::count("order", Relation::Equal, n + m + 1, g.order()),
        Claim::count("complement_circumference", Relation::Equal, m + t - p + 1, circumference(h)),
        Claim::count("complement_circumference_below_2m", Relation::Below, 2 * m, circumference(h)),
        Claim::flag("complement_has_forbidden_cycle", false, contains_cycle(h, 2 * m)),
        Claim::count("max_common_neighborhood", Relation::Equal, p * m + t - 1, common),
        Claim::count("max_common_neighborhood_bound", Relation::AtMost, n - 1, common),
        Claim::flag("k2n_free", true, k2n_free(g, n)),
        Claim::flag("non_apex_multipartite", true, {
            let mut parts = vec![m + 1; p];
            parts.push(m + t - p);
            non_apex_is_multipartite(g, &parts)
        }),
        Claim::count("apex_degree", Relation::Equal, 0, g.degree(0)),
    ];
    for c in claims {
        r.push(c);
    }
    Ok(r)
}

/// Diagnostic for [`residue_badness_witness`] at `m ≤ 5`.
pub const RESIDUE_SMALL_M: &str = "m ≥ 6 required: K_1 ∨ K_{m+4} would contain C_{2m}";

/// Complement is `K_1 ∨ (K_{2m−t−2} ∪ K_{m+4} ∪ (q−2)·K_{m+1})` on
/// `n + m + 1` vertices with `n = q(m+1) − t`, covering the values of `n`
/// that [`uniform_badness_witness`] misses. Needs `q ≥ 2`, `t ≤ 2` and
/// `m ≥ 6`: for smaller `m` the clique `K_{m+5}` already holds a `C_{2m}`.
pub fn residue_badness_witness(m: usize, q: usize, t: usize) -> Result<ConstructionReport> {
    if m <= 5 {
        return param(RESIDUE_SMALL_M);
    }
    if q < 2 {
        return param(format!("q ≥ 2 violated (q = {q})"));
    }
    if t > 2 {
        return param(format!("t ∈ {{0, 1, 2}} violated (t = {t})"));
    }
    let n = q * (m + 1) - t;
    check_total(n + m + 1)?;
    let mut sizes = vec![2 * m - t - 2, m + 4];
    sizes.extend(std::iter::repeat_n(m + 1, q - 2));
    let complement = apex_over_cliques(&sizes)?;
    let mut r = ConstructionReport::new(
        "residue_badness",
        &[("m", m), ("n", n), ("q", q), ("t", t)],
        complement.complement(),
    );
    let (g, h) = (&r.graph, &r.complement_graph);
    let longest = circumference(h);
    let common = max_common_neighborhood(g);
    let claims = vec![
        Claim::count("order", Relation::Equal, n + m + 1, g.order()),
        Claim::count("complement_circumference", Relation::Equal, (2 * m - t - 1).max(m + 5), longest),
        Claim::count("complement_circumference_below_2m", Relation::Below, 2 * m, longest),
        Claim::flag("complement_has_forbidden_cycle", false, contains_cycle(h, 2 * m)),
        Claim::count("max_common_neighborhood_bound", Relation::AtMost, n - 1, common),
        Claim::flag("k2n_free", true, k2n_free(g, n)),
        Claim::flag("non_apex_multipartite", true, non_apex_is_multipartite(g, &sizes)),
        Claim::count("apex_degree", Relation::Equal, 0, g.degree(0)),
    ];
    for c in claims {
        r.push(c);
    }
    Ok(r)
}

/// Which construction, if any, beats the goodness bound for `K_{2,n}`
/// against `C_{2m}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "construction", rename_all = "snake_case")]
pub enum BadnessCover {
    /// [`uniform_badness_witness`] with `n = pm + t`.
    Uniform { p: usize, t: usize },
    /// [`residue_badness_witness`] with `n = q(m+1) − t`.
    Residue { q: usize, t: usize },
    /// `n ∈ {m, m+1}`, where goodness is an open question.
    Open,
    /// No construction here applies.
    Uncovered,
}

impl BadnessCover {
    /// Builds the chosen construction.
    pub fn build(self, m: usize) -> Option<Result<ConstructionReport>> {
        match self {
            BadnessCover::Uniform { p, t } => Some(uniform_badness_witness(m, p, t)),
            BadnessCover::Residue { q, t } => Some(residue_badness_witness(m, q, t)),
            BadnessCover::Open | BadnessCover::Uncovered => None,
        }
    }
}

/// Picks the construction for `(n, m)`: the uniform family with the smallest
/// admissible `p` first, then the residue family.
pub fn badness_parameter_cover(n: usize, m: usize) -> BadnessCover {
    if n == m || n == m + 1 {
        return BadnessCover::Open;
    }
    let mut p = 1;
    while p * m <= n {
        let t = n - p * m;
        if p < t && t + 1 < m + p {
            return BadnessCover::Uniform { p, t };
        }
        p += 1;
    }
    if m >= 6 {
        for t in 0..=2 {
            if (n + t).is_multiple_of(m + 1) && (n + t) / (m + 1) >= 2 {
                return BadnessCover::Residue { q: (n + t) / (m + 1), t };
            }
        }
    }
    BadnessCover::Uncovered
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star() {
        let r = star_witness(6).unwrap();
        assert!(r.verified(), "{r:?}");
        assert_eq!(r.measured("complement_circumference"), Some(5));
        let r = star_witness(3).unwrap();
        assert!(r.verified());
        assert_eq!(r.measured("complement_circumference"), Some(0));
        assert_eq!(star_witness(10).unwrap().measured("complement_circumference"), Some(9));
        assert!(star_witness(2).is_err());
    }

    #[test]
    fn uniform_examples() {
        let r = uniform_badness_witness(5, 1, 2).unwrap();
        assert!(r.verified(), "{r:?}");
        assert_eq!(r.graph.order(), 13);
        assert_eq!(r.measured("complement_circumference"), Some(7));
        assert_eq!(r.measured("max_common_neighborhood"), Some(6));
        let r = uniform_badness_witness(4, 2, 3).unwrap();
        assert!(r.verified(), "{r:?}");
        assert_eq!(r.graph.order(), 16);
        assert_eq!(r.measured("complement_circumference"), Some(6));
        assert_eq!(r.params["n"], 11);
        let e = uniform_badness_witness(5, 1, 1).unwrap_err();
        assert!(e.to_string().contains("t ≥ p + 1"));
    }

    #[test]
    fn residue_examples() {
        let r = residue_badness_witness(6, 2, 0).unwrap();
        assert!(r.verified(), "{r:?}");
        assert_eq!(r.graph.order(), 21);
        assert_eq!(r.measured("complement_circumference"), Some(11));
        let r = residue_badness_witness(6, 3, 2).unwrap();
        assert!(r.verified(), "{r:?}");
        assert_eq!(r.graph.order(), 26);
        assert_eq!(r.params["n"], 19);
        let e = residue_badness_witness(5, 2, 0).unwrap_err();
        assert!(e.to_string().contains("m ≥ 6 required"));
    }

    #[test]
    fn burr_examples() {
        let k = burr_witness(6, PatternParams::k2n(3).unwrap()).unwrap();
        assert!(k.verified(), "{k:?}");
        let star = star_witness(6).unwrap();
        assert!(are_isomorphic(&k.graph, &star.complement_graph));
        let c7 = burr_witness(5 + 2, PatternParams::cycle(7).unwrap()).unwrap();
        assert!(c7.verified(), "{c7:?}");
        assert_eq!(c7.graph.order(), 2 * 5 + 2);
        let c6 = burr_witness(4, PatternParams::cycle(6).unwrap()).unwrap();
        assert!(c6.verified(), "{c6:?}");
        assert_eq!(c6.graph.order(), 5);
    }

    #[test]
    fn cover() {
        assert_eq!(badness_parameter_cover(7, 5), BadnessCover::Uniform { p: 1, t: 2 });
        assert_eq!(badness_parameter_cover(14, 6), BadnessCover::Residue { q: 2, t: 0 });
        assert_eq!(badness_parameter_cover(6, 6), BadnessCover::Open);
        assert_eq!(badness_parameter_cover(7, 6), BadnessCover::Open);
        assert_eq!(badness_parameter_cover(4, 6), BadnessCover::Uncovered);
    }

    #[test]
    fn serializes_graph6() {
        let r = uniform_badness_witness(5, 1, 2).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["graph"], crate::format::encode_graph6(&r.graph));
        assert_eq!(v["claims"][0]["relation"], "equal");
    }
}
