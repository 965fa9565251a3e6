use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact constructions, invariant checks and exhaustive verification for
/// Ramsey goodness of K_{2,n} against cycles.
#[derive(Debug, Parser)]
#[command(name = "ramsey-goodness", version)]
pub struct Cli {
    /// Worker threads for exhaustive searches; never changes any result.
    #[arg(long, global = true, env = "RAMSEY_WORKERS", default_value_t = 1,
          value_parser = clap::value_parser!(u16).range(1..))]
    pub workers: u16,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Human)]
    pub output: OutputFormat,

    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Human,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a lower-bound construction and check its claimed properties.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Compute invariants of graphs given in graph6 (argument or stdin lines).
    Check(CheckArgs),
    /// Run an exhaustive verification harness.
    Verify(VerifyArgs),
    /// Compute a Ramsey number R(K_{2,n}, target) exactly by search.
    Ramsey(RamseyArgs),
}

#[derive(Debug, Subcommand)]
pub enum ConstructKind {
    /// The star K_{1,m-1}.
    Star {
        #[arg(long)]
        m: usize,
    },
    /// The generic chromatic lower-bound colouring against one pattern.
    Burr {
        /// Order of the connected red graph to avoid.
        #[arg(long)]
        g_order: usize,
        #[command(flatten)]
        pattern: PatternArg,
    },
    /// Complement K_1 ∨ (K_{m+t-p} ∪ p·K_{m+1}).
    #[command(name = "lemma41", alias = "uniform")]
    Uniform {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        t: usize,
    },
    /// Complement K_1 ∨ (K_{2m-t-2} ∪ K_{m+4} ∪ (q-2)·K_{m+1}).
    #[command(name = "lemma42", alias = "residue")]
    Residue {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        t: usize,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct PatternArg {
    /// Pattern C_m.
    #[arg(long, value_name = "M")]
    pub cycle: Option<usize>,
    /// Pattern {C_m, C_{m+1}}.
    #[arg(long, value_name = "M")]
    pub pair: Option<usize>,
    /// Pattern K_{2,n}.
    #[arg(long, value_name = "N")]
    pub k2n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Graph in graph6; read from stdin (one per line) when absent.
    pub graph6: Option<String>,
    /// Look for K_{2,n}; exit status 1 when one is found.
    #[arg(long, value_name = "N")]
    pub k2n: Option<usize>,
    /// Look for a cycle of exactly this length.
    #[arg(long, value_name = "M")]
    pub cycle: Option<usize>,
    #[arg(long)]
    pub circumference: bool,
    #[arg(long)]
    pub girth: bool,
    /// All cycle lengths present.
    #[arg(long)]
    pub spectrum: bool,
    #[arg(long)]
    pub connectivity: bool,
    /// Independence number.
    #[arg(long)]
    pub alpha: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Claim {
    /// Every K_{2,n}-free graph on m+1 vertices has C_m or C_{m+1} in its
    /// complement; with the star lower bound, R = m+1.
    #[value(name = "thm1.3", alias = "cycle-pair-goodness")]
    CyclePairGoodness,
    /// Every K_{2,n}-free graph on m+1 vertices has C_m in its complement;
    /// with the star lower bound, R = m+1.
    #[value(name = "thm1.6", alias = "cycle-goodness")]
    CycleGoodness,
    /// A K_{2,n}-free graph on n+m+1 vertices without C_{2m} in its complement.
    #[value(name = "thm1.4", alias = "badness")]
    Badness,
    /// Complements without C_m of K_{2,n}-free graphs on m+1 vertices are
    /// 2-connected.
    #[value(name = "lemma2.6", alias = "complement-two-connected")]
    ComplementTwoConnected,
    /// Structure of off-cycle vertices relative to a longest cycle.
    #[value(name = "lemma3.1", alias = "longest-cycle-observations")]
    LongestCycleObservations,
    /// Union-neighbourhood criterion for Hamiltonicity without C_m.
    #[value(name = "thm1.5", alias = "hamiltonian-criterion")]
    HamiltonianCriterion,
    /// Classical long-cycle criteria on all small graphs.
    #[value(name = "lemma-props", alias = "cited-lemmas")]
    CitedLemmas,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub claim: Claim,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    /// Largest order for the harnesses that sweep all small graphs.
    #[arg(long)]
    pub max_order: Option<usize>,
}

#[derive(Debug, Args)]
pub struct RamseyArgs {
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub target: TargetArg,
    /// Largest order searched before giving up.
    #[arg(long, default_value_t = ramsey_goodness::verifier::DEFAULT_RAMSEY_MAX_ORDER)]
    pub max_order: usize,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct TargetArg {
    /// The complement must contain C_m.
    #[arg(long, value_name = "M")]
    pub cycle: Option<usize>,
    /// The complement must contain C_m or C_{m+1}.
    #[arg(long, value_name = "M")]
    pub pair: Option<usize>,
}
