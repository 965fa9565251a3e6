//! Human-readable rendering of reports.

use std::fmt::Write;

use serde_json::Value;

use ramsey_goodness::constructions::{ClaimValue, ConstructionReport, Relation};
use ramsey_goodness::encode_graph6;
use ramsey_goodness::verifier::{Outcome, VerificationReport};

use crate::args::{Claim, VerifyArgs};

/// The command-line token naming a claim.
pub fn claim_token(claim: Claim) -> &'static str {
    match claim {
        Claim::CyclePairGoodness => "thm1.3",
        Claim::CycleGoodness => "thm1.6",
        Claim::Badness => "thm1.4",
        Claim::ComplementTwoConnected => "lemma2.6",
        Claim::LongestCycleObservations => "lemma3.1",
        Claim::HamiltonianCriterion => "thm1.5",
        Claim::CitedLemmas => "lemma-props",
    }
}

fn show(value: Option<usize>, name: &str) -> String {
    value.map_or_else(|| name.to_owned(), |v| v.to_string())
}

/// One-paragraph statement of what a verification run tests.
pub fn claim_statement(claim: Claim, verify_args: &VerifyArgs) -> String {
    let n = show(verify_args.n, "n");
    let m = show(verify_args.m, "m");
    let m_plus = verify_args.m.map_or_else(|| "m+1".to_owned(), |m| (m + 1).to_string());
    let order = |default: usize| verify_args.max_order.unwrap_or(default);
    let body = match claim {
        Claim::CyclePairGoodness => format!(
            "testing: among graphs on {m_plus} vertices, each one without K_{{2,{n}}} has C_{m} or C_{m_plus} in its complement; together with the star colouring on {m} vertices this pins R(K_{{2,{n}}}, {{C_{m}, C_{m_plus}}}) = {m_plus}"
        ),
        Claim::CycleGoodness => format!(
            "testing: among graphs on {m_plus} vertices, each one without K_{{2,{n}}} has C_{m} in its complement; together with the star colouring on {m} vertices this pins R(K_{{2,{n}}}, C_{m}) = {m_plus}"
        ),
        Claim::Badness => format!(
            "testing: an explicit graph on {n}+{m}+1 vertices has no K_{{2,{n}}} and no C_{{2·{m}}} in its complement, so R(K_{{2,{n}}}, C_{{2·{m}}}) exceeds {n}+{m}+1"
        ),
        Claim::ComplementTwoConnected => format!(
            "testing: for every graph on {m_plus} vertices without K_{{2,{n}}} whose complement lacks C_{m}, that complement is 2-connected"
        ),
        Claim::LongestCycleObservations => format!(
            "testing, on every graph up to {} vertices, every longest cycle and every pair of vertices off it: neither vertex has two consecutive neighbours on the cycle, and their cycle neighbourhoods are never shifted against each other in a way that would splice into a longer cycle",
            order(7)
        ),
        Claim::HamiltonianCriterion => format!(
            "testing: each 2-connected graph on {m_plus} vertices without C_{m}, in which every pair of vertices jointly sees at least {m}/2 others, has a Hamilton cycle"
        ),
        Claim::CitedLemmas => format!(
            "testing the classical degree-based long-cycle criteria on every graph up to {} vertices",
            order(8)
        ),
    };
    format!("[{}] {body}", claim_token(claim))
}

fn outcome_word(outcome: Outcome) -> &'static str {
    match outcome {
        Outcome::Verified => "VERIFIED",
        Outcome::VerifiedVacuous => "VERIFIED (vacuous: no graph met the hypothesis)",
        Outcome::Counterexample => "COUNTEREXAMPLE",
        Outcome::Infeasible => "INFEASIBLE",
    }
}

pub fn verification(report: &VerificationReport, claim: Option<Claim>) -> String {
    let mut out = String::new();
    let title = match claim {
        Some(claim) => format!("{} ({})", claim_token(claim), report.claim),
        None => report.claim.clone(),
    };
    let params: Vec<String> = report.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let _ = writeln!(out, "{title}  [{}]", params.join(", "));
    let _ = writeln!(out, "outcome:           {}", outcome_word(report.outcome));
    if let Some(in_range) = report.in_theorem_range {
        let where_ = if in_range { "inside" } else { "outside" };
        let _ = writeln!(out, "parameters:        {where_} the range where the statement applies");
    }
    let _ = writeln!(out, "graphs examined:   {}", report.graphs_examined);
    let _ = writeln!(out, "hypothesis met:    {}", report.hypothesis_count);
    let _ = writeln!(out, "violations:        {}", report.violations);
    if let Some(value) = report.value {
        let _ = writeln!(out, "exact value:       {value}");
    }
    if let Some(witness) = &report.witness {
        let _ = writeln!(out, "lower-bound graph: {} ({} vertices)", encode_graph6(witness), witness.order());
    }
    if let Some(found) = &report.counterexample {
        let _ = writeln!(out, "counterexample:    {}", encode_graph6(&found.graph));
        if !found.detail.is_empty() {
            let _ = writeln!(out, "  {}", found.detail);
        }
    }
    if !report.counts.is_empty() {
        let _ = writeln!(out, "counts:");
        for (k, v) in &report.counts {
            let _ = writeln!(out, "  {k:<36} {v}");
        }
    }
    for note in &report.notes {
        let _ = writeln!(out, "note: {note}");
    }
    let _ = writeln!(out, "elapsed:           {:.3}s", report.elapsed_seconds);
    out
}

fn claim_value(value: ClaimValue) -> String {
    match value {
        ClaimValue::Count(v) => v.to_string(),
        ClaimValue::Flag(b) => b.to_string(),
    }
}

pub fn construction(report: &ConstructionReport) -> String {
    let mut out = String::new();
    let params: Vec<String> = report.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let _ = writeln!(out, "construction {}  [{}]", report.name, params.join(", "));
    let _ = writeln!(out, "graph:      {} ({} vertices, {} edges)", encode_graph6(&report.graph), report.graph.order(), report.graph.edge_count());
    let _ = writeln!(out, "complement: {}", encode_graph6(&report.complement_graph));
    for claim in &report.claims {
        let relation = match claim.relation {
            Relation::Equal => "=",
            Relation::AtMost => "≤",
            Relation::Below => "<",
        };
        let _ = writeln!(
            out,
            "  [{}] {:<36} measured {} {relation} claimed {}",
            if claim.holds { "ok" } else { "FAIL" },
            claim.property,
            claim_value(claim.measured),
            claim_value(claim.claimed),
        );
    }
    let verdict = if report.verified() { "all claims hold" } else { "SOME CLAIMS FAIL" };
    let _ = writeln!(out, "{verdict}");
    out
}

pub fn check(result: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(fields) = result {
        for (k, v) in fields {
            let _ = writeln!(out, "{k:<20} {v}");
        }
    }
    out.push('\n');
    out
}
