use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "seqlab",
    version,
    about = "Generate, verify and experiment with staggering integer sequences, power-series roots and lattice theta series"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub budgets: Budgets,
    /// Output format (defaults to bfile for sequences, csv for tables)
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Budgets {
    /// Largest number of terms any generator may produce
    #[arg(
        long,
        global = true,
        env = "SEQLAB_MAX_TERMS",
        default_value_t = 10_000_000,
        value_parser = clap::value_parser!(u64).range(1..)
    )]
    pub max_terms: u64,
    /// Largest numerator size, in decimal digits, for approximate squaring
    #[arg(
        long,
        global = true,
        env = "SEQLAB_MAX_DIGITS",
        default_value_t = 1_000_000,
        value_parser = clap::value_parser!(u64).range(1..)
    )]
    pub max_digits: u64,
    /// Largest number of lattice enumeration nodes
    #[arg(
        long,
        global = true,
        env = "SEQLAB_ENUM_BUDGET",
        default_value_t = 100_000_000,
        value_parser = clap::value_parser!(u64).range(1..)
    )]
    pub enum_budget: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a sequence: EKG, Gijswijt (any order), A079000 or Golomb
    Generate(GenerateArgs),
    /// Structural analyses: EKG lines and prime neighbors, Gijswijt blocks,
    /// A079000 difference runs, Golomb's formula
    Analyze {
        #[command(subcommand)]
        target: AnalyzeTarget,
    },
    /// Experiments without a known answer
    Experiment {
        #[command(subcommand)]
        kind: ExperimentKind,
    },
    /// Approximate squaring x -> x * ceil(x) from a rational start
    Approxsq(ApproxsqArgs),
    /// Integer k-th roots of power series and the reduced-modulus test
    Series {
        #[command(subcommand)]
        op: SeriesOp,
    },
    /// Theta series of a lattice by exact enumeration, or a bundled one
    Theta(ThetaArgs),
    /// Kissing numbers read off theta series, next to tabulated bounds
    Kissing,
    /// Compare a generated sequence against its reference b-file
    Verify(VerifyArgs),
    /// Rows for plotting the EKG lines and A079000 differences
    Plot(PlotArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SequenceName {
    Ekg,
    Gijswijt,
    A079000,
    Golomb,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Greedy,
    Closed,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    pub sequence: SequenceName,
    #[arg(long, short = 'n')]
    pub terms: u64,
    /// Order of the Gijswijt sequence: the next term is max(k, floor)
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub floor: u64,
    /// A079000 only
    #[arg(long, value_enum, default_value_t = Method::Greedy)]
    pub method: Method,
}

#[derive(Debug, Subcommand)]
pub enum AnalyzeTarget {
    /// Line labels (lower, upper, central) and the prime-neighbor pattern
    Ekg {
        #[arg(long, short = 'n', default_value_t = 1000)]
        terms: u64,
        /// Emit (n, a(n), label, a(n)/n, reference curve) rows
        #[arg(long)]
        plot_lines: bool,
        /// Check that every prime p > 2 sits between 2p and 3p
        #[arg(long)]
        neighbors: bool,
    },
    /// Block and glue decomposition
    Gijswijt {
        #[command(subcommand)]
        view: GijswijtView,
    },
    /// Closed form and first-difference runs
    A079000 {
        #[arg(long, short = 'n', default_value_t = 1000)]
        terms: u64,
        #[arg(long)]
        diff_runs: bool,
    },
    /// Golomb's sequence
    Golomb {
        #[command(subcommand)]
        view: GolombView,
    },
}

#[derive(Debug, Subcommand)]
pub enum GijswijtView {
    /// Blocks B_m and glue strings S_m of the order-M sequence
    Blocks {
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        order: u64,
        #[arg(long, default_value_t = 8)]
        count: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum GolombView {
    /// Nearest-integer agreement with phi^(2-phi) n^(phi-1)
    Formula {
        #[arg(long, short = 'n', default_value_t = 10_000)]
        terms: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum ExperimentKind {
    /// Extend a start string by the curling rule until a 1 appears
    Finiteness {
        /// Comma-separated start string, e.g. "2,3,2,2"
        #[arg(long)]
        initial: String,
        #[arg(long, default_value_t = 1000)]
        max_steps: usize,
    },
}

#[derive(Debug, Args)]
#[command(args_conflicts_with_subcommands = true)]
pub struct ApproxsqArgs {
    #[command(subcommand)]
    pub table: Option<ApproxsqTable>,
    /// Start value, `p/q` or an integer
    pub start: Option<String>,
    #[arg(long, default_value_t = seqlab::approxsq::DEFAULT_MAX_STEPS)]
    pub max_steps: usize,
    /// Print huge integers as their leading digits and a digit count
    #[arg(long, default_value_t = 40)]
    pub show_digits: usize,
}

#[derive(Debug, Subcommand)]
pub enum ApproxsqTable {
    /// Steps and integer reached for n/d, n = from..=to
    Table {
        #[arg(long)]
        denominator: u64,
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        #[arg(long, default_value_t = seqlab::approxsq::DEFAULT_MAX_STEPS)]
        max_steps: usize,
        #[arg(long, default_value_t = 40)]
        show_digits: usize,
    },
}

#[derive(Debug, Args)]
pub struct SeriesInput {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub k: u32,
    /// One integer per line from index 0, or `n value` lines; `#` starts a comment
    #[arg(long)]
    pub coeffs_file: PathBuf,
    /// Truncate the input to this order
    #[arg(long)]
    pub order: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum SeriesOp {
    /// Integer k-th root, or the first index where it stops being integral
    Root(SeriesInput),
    /// Decide whether the series is a k-th power modulo k·rad(k)
    Powertest {
        #[command(flatten)]
        input: SeriesInput,
        #[arg(long, default_value_t = seqlab::powerseries::DEFAULT_NODE_LIMIT)]
        node_limit: u64,
    },
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["lattice", "gram_file", "fixture"])))]
pub struct ThetaArgs {
    /// Built-in lattice: Z^n (or Zn), A2, D4, E8
    #[arg(long)]
    pub lattice: Option<String>,
    /// n lines of n integers
    #[arg(long)]
    pub gram_file: Option<PathBuf>,
    /// Bundled series: leech or nebe24
    #[arg(long)]
    pub fixture: Option<String>,
    #[arg(long, default_value_t = 20)]
    pub max_norm: usize,
    /// Print the integer K-th root instead of the series
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub root: Option<u32>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Sequence name or A-number; see `seqlab verify --help`
    #[arg(
        long_help = "Sequence name or A-number: ekg (A064413), gijswijt (A090822), \
gijswijt2 (A091787), a079000 (A079000), golomb (A001462), approxsq-steps (A072340), \
approxsq-reached (A085276), approxsq-orbit (A117596), d4-root (A108092)"
    )]
    pub name: String,
    #[arg(long, short = 'n')]
    pub terms: u64,
    /// Fetch the b-file from the OEIS host (cached) instead of the bundled copy
    #[arg(long)]
    pub online: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlotKind {
    /// EKG terms labelled by line, points not joined
    EkgLines,
    /// EKG terms for a joined-points plot
    EkgJoined,
    /// First differences of A079000
    A079000Diffs,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    pub kind: PlotKind,
    #[arg(long, default_value_t = 1)]
    pub from: u64,
    #[arg(long, default_value_t = 1000)]
    pub to: u64,
}
