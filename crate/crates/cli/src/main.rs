mod args;
mod render;

use std::io::{self, BufRead, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use serde_json::{json, Value};

use ramsey_goodness::constructions::{
    burr_witness, residue_badness_witness, star_witness, uniform_badness_witness, ConstructionReport,
};
use ramsey_goodness::invariants::{
    circumference, connectivity, cycle_spectrum, find_k2n, girth, has_cycle_of_length,
    independence_number, longest_cycle, PatternParams,
};
use ramsey_goodness::verifier::{
    compute_ramsey, verify_badness, verify_cited_lemmas, verify_complement_two_connected,
    verify_goodness, verify_hamiltonian_criterion, verify_longest_cycle_observations, Outcome,
    RamseyTarget, Variant, VerificationReport,
};
use ramsey_goodness::{decode_graph6, encode_graph6, Error, Graph};

use args::{CheckArgs, Claim, Cli, Command, ConstructKind, OutputFormat, RamseyArgs, VerifyArgs};

/// Process exit statuses.
mod status {
    /// Verified (possibly vacuously), or every construction claim held.
    pub const SUCCESS: u8 = 0;
    /// A counterexample, a failed construction claim, or a `K_{2,n}` found.
    pub const REFUTED: u8 = 1;
    /// Infeasible run, invalid input or any other error.
    pub const FAILURE: u8 = 2;
}

/// Default largest order for the longest-cycle observation sweep.
const LONGEST_CYCLE_DEFAULT_ORDER: usize = 7;
/// Default largest order for the classical long-cycle criteria sweep.
const CITED_LEMMAS_DEFAULT_ORDER: usize = 8;

/// A rendered result and the exit status it implies.
struct Rendered {
    text: String,
    status: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(rendered) => match emit(&cli, &rendered.text) {
            Ok(()) => ExitCode::from(rendered.status),
            Err(e) => {
                eprintln!("error: cannot write output: {e}");
                ExitCode::from(status::FAILURE)
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(status::FAILURE)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> io::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn run(cli: &Cli) -> Result<Rendered, Error> {
    let workers = usize::from(cli.workers);
    match &cli.command {
        Command::Construct { kind } => construct(kind, cli.output),
        Command::Check(check_args) => check(check_args, cli.output),
        Command::Verify(verify_args) => verify(verify_args, workers, cli.output),
        Command::Ramsey(ramsey_args) => ramsey(ramsey_args, workers, cli.output),
    }
}

fn json_text(value: &impl serde::Serialize) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    text
}

fn construct(kind: &ConstructKind, output: OutputFormat) -> Result<Rendered, Error> {
    let start = Instant::now();
    let report: ConstructionReport = match kind {
        ConstructKind::Star { m } => star_witness(*m)?,
        ConstructKind::Burr { g_order, pattern } => {
            let params = match (pattern.cycle, pattern.pair, pattern.k2n) {
                (Some(m), _, _) => PatternParams::cycle(m)?,
                (_, Some(m), _) => PatternParams::cycle_pair(m)?,
                (_, _, Some(n)) => PatternParams::k2n(n)?,
                _ => unreachable!("clap requires exactly one pattern"),
            };
            burr_witness(*g_order, params)?
        }
        ConstructKind::Uniform { m, p, t } => uniform_badness_witness(*m, *p, *t)?,
        ConstructKind::Residue { m, q, t } => residue_badness_witness(*m, *q, *t)?,
    };
    eprintln!("built and measured {} in {:.3}s", report.name, start.elapsed().as_secs_f64());
    let text = match output {
        OutputFormat::Json => json_text(&report),
        OutputFormat::Human => render::construction(&report),
    };
    let status = if report.verified() { status::SUCCESS } else { status::REFUTED };
    Ok(Rendered { text, status })
}

fn check(check_args: &CheckArgs, output: OutputFormat) -> Result<Rendered, Error> {
    let inputs: Vec<String> = match &check_args.graph6 {
        Some(text) => vec![text.clone()],
        None => io::stdin()
            .lock()
            .lines()
            .map(|line| line.map_err(|e| Error::Format(format!("cannot read standard input: {e}"))))
            .filter(|line| !matches!(line, Ok(l) if l.trim().is_empty()))
            .collect::<Result<_, _>>()?,
    };
    if let Some(len) = check_args.cycle {
        if len < 3 {
            return Err(Error::Parameter(format!("cycle length must be at least 3, got {len}")));
        }
    }
    let mut results = Vec::with_capacity(inputs.len());
    let mut found_k2n = false;
    for input in &inputs {
        let g = decode_graph6(input.trim())?;
        let result = check_graph(&g, check_args)?;
        found_k2n |= result.get("k2n_free") == Some(&Value::Bool(false));
        results.push(result);
    }
    let text = match output {
        OutputFormat::Json => results.iter().map(|r| format!("{r}\n")).collect(),
        OutputFormat::Human => results.iter().map(render::check).collect(),
    };
    let status = if found_k2n { status::REFUTED } else { status::SUCCESS };
    Ok(Rendered { text, status })
}

/// Invariants of one graph as a JSON object; with no invariant flags, the
/// parameter-free ones are all computed.
fn check_graph(g: &Graph, check_args: &CheckArgs) -> Result<Value, Error> {
    let everything = !(check_args.circumference
        || check_args.girth
        || check_args.spectrum
        || check_args.connectivity
        || check_args.alpha
        || check_args.k2n.is_some()
        || check_args.cycle.is_some());
    let mut result = serde_json::Map::new();
    result.insert("graph6".into(), json!(encode_graph6(g)));
    result.insert("order".into(), json!(g.order()));
    result.insert("edges".into(), json!(g.edge_count()));
    if let Some(n) = check_args.k2n {
        if n < 1 {
            return Err(Error::Parameter("K_{2,n} needs n ≥ 1".into()));
        }
        let witness = find_k2n(g, n);
        result.insert("k2n_n".into(), json!(n));
        result.insert("k2n_free".into(), json!(witness.is_none()));
        result.insert("k2n_witness".into(), json!(witness));
    }
    if let Some(len) = check_args.cycle {
        let witness = if len <= g.order() { has_cycle_of_length(g, len)? } else { None };
        result.insert("cycle_length".into(), json!(len));
        result.insert("has_cycle".into(), json!(witness.is_some()));
        result.insert("cycle_witness".into(), json!(witness));
    }
    if everything || check_args.circumference {
        result.insert("circumference".into(), json!(circumference(g)));
        result.insert("longest_cycle".into(), json!(longest_cycle(g)));
    }
    if everything || check_args.girth {
        result.insert("girth".into(), json!(girth(g)));
    }
    if everything || check_args.spectrum {
        result.insert("cycle_spectrum".into(), json!(cycle_spectrum(g)));
    }
    if everything || check_args.connectivity {
        result.insert("connectivity".into(), json!(connectivity(g)));
    }
    if everything || check_args.alpha {
        result.insert("independence_number".into(), json!(independence_number(g)));
    }
    Ok(Value::Object(result))
}

fn required(value: Option<usize>, flag: &str, claim: Claim) -> Result<usize, Error> {
    value.ok_or_else(|| Error::Parameter(format!("--{flag} is required for {}", render::claim_token(claim))))
}

fn verify(verify_args: &VerifyArgs, workers: usize, output: OutputFormat) -> Result<Rendered, Error> {
    let claim = verify_args.claim;
    let n = || required(verify_args.n, "n", claim);
    let m = || required(verify_args.m, "m", claim);
    eprintln!("{}", render::claim_statement(claim, verify_args));
    eprintln!("running with {workers} worker(s) ...");
    let report = match claim {
        Claim::CyclePairGoodness => verify_goodness(n()?, m()?, Variant::Pair, workers)?,
        Claim::CycleGoodness => verify_goodness(n()?, m()?, Variant::Single, workers)?,
        Claim::Badness => verify_badness(n()?, m()?)?,
        Claim::ComplementTwoConnected => verify_complement_two_connected(n()?, m()?, workers)?,
        Claim::LongestCycleObservations => verify_longest_cycle_observations(
            verify_args.max_order.unwrap_or(LONGEST_CYCLE_DEFAULT_ORDER),
            workers,
        )?,
        Claim::HamiltonianCriterion => verify_hamiltonian_criterion(m()?, workers)?,
        Claim::CitedLemmas => {
            verify_cited_lemmas(verify_args.max_order.unwrap_or(CITED_LEMMAS_DEFAULT_ORDER), workers)?
        }
    };
    eprintln!(
        "done: {} graphs examined in {:.3}s",
        report.graphs_examined, report.elapsed_seconds
    );
    Ok(verification_output(&report, output, Some(claim)))
}

fn ramsey(ramsey_args: &RamseyArgs, workers: usize, output: OutputFormat) -> Result<Rendered, Error> {
    let target = match (ramsey_args.target.cycle, ramsey_args.target.pair) {
        (Some(m), _) => RamseyTarget::Cycle { m },
        (_, Some(m)) => RamseyTarget::CyclePair { m },
        _ => unreachable!("clap requires exactly one target"),
    };
    eprintln!("searching orders up to {} with {workers} worker(s) ...", ramsey_args.max_order);
    let report = compute_ramsey(ramsey_args.n, target, ramsey_args.max_order, workers)?;
    eprintln!(
        "done: {} graphs examined in {:.3}s",
        report.graphs_examined, report.elapsed_seconds
    );
    Ok(verification_output(&report, output, None))
}

fn verification_output(report: &VerificationReport, output: OutputFormat, claim: Option<Claim>) -> Rendered {
    let text = match output {
        OutputFormat::Json => json_text(report),
        OutputFormat::Human => render::verification(report, claim),
    };
    let status = match report.outcome {
        Outcome::Verified | Outcome::VerifiedVacuous => status::SUCCESS,
        Outcome::Counterexample => status::REFUTED,
        Outcome::Infeasible => status::FAILURE,
    };
    Rendered { text, status }
}
