use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tco_core::AlgoChoice;

/// Seed used when none is given; printed so runs can be repeated.
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Parser)]
#[command(
    name = "tco",
    version,
    about = "Minimum topic-connected overlay toolkit"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a solution connects every topic of an instance.
    Check {
        instance: PathBuf,
        solution: PathBuf,
    },
    /// Solve an instance.
    Solve(SolveArgs),
    /// Write the hitting-set reduction of an instance.
    Reduce {
        instance: PathBuf,
        #[arg(long, value_enum, default_value_t = ReduceTarget::Hs)]
        to: ReduceTarget,
        /// Output prefix; writes `<prefix>.hs` and `<prefix>.codec`.
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = tco_core::charsys::DEFAULT_AUDIENCE_CAP)]
        cap: usize,
    },
    /// Map a hitting-set solution back to an overlay.
    Lift {
        hs_solution: PathBuf,
        codec: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve a hitting-set instance directly.
    HsSolve(HsSolveArgs),
    /// Generate an instance.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Recover a source solution from an overlay of a generated gadget.
    Extract {
        #[arg(value_enum)]
        kind: Target,
        #[arg(long)]
        meta: PathBuf,
        solution: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run algorithms on every `.tco` file in a directory and write CSV.
    Bench(BenchArgs),
    /// Print the small-topic threshold for a number of users.
    Threshold {
        #[arg(required_unless_present = "log2", conflicts_with = "log2")]
        users: Option<u64>,
        /// Give log2 of the user count instead.
        #[arg(long)]
        log2: Option<f64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReduceTarget {
    Hs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Hs,
    Vc,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    pub instance: PathBuf,
    #[arg(long, default_value = "auto")]
    pub algo: AlgoChoice,
    /// Fail with exit code 3 unless an overlay of at most this cost exists.
    #[arg(long)]
    pub budget: Option<usize>,
    /// Largest audience handed to the hitting-set reduction.
    #[arg(long, default_value_t = tco_core::charsys::DEFAULT_AUDIENCE_CAP)]
    pub cap: usize,
    #[arg(long, default_value_t = tco_core::hitting::DEFAULT_NODE_LIMIT)]
    pub max_nodes: u64,
    #[arg(long, default_value_t = tco_core::solvers::DEFAULT_STATE_LIMIT)]
    pub max_states: u64,
    /// Recorded in the solution file.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Also run component merging and note its cost (auto only).
    #[arg(long)]
    pub compare_greedy: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HsAlgo {
    Exact,
    Setwise,
    Frequency,
}

#[derive(Debug, Args)]
pub struct HsSolveArgs {
    pub instance: PathBuf,
    #[arg(long, value_enum, default_value_t = HsAlgo::Exact)]
    pub algo: HsAlgo,
    #[arg(long)]
    pub budget: Option<usize>,
    #[arg(long, default_value_t = tco_core::hitting::DEFAULT_NODE_LIMIT)]
    pub max_nodes: u64,
    /// Apply the reduction rules for parameter `k` first and report the kernel.
    #[arg(long)]
    pub kernel: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum GenKind {
    /// Random instance with uniform audience sizes.
    Random {
        #[arg(long)]
        users: usize,
        #[arg(long)]
        topics: usize,
        #[arg(long, default_value_t = 2)]
        min: usize,
        #[arg(long)]
        max: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Gadget from a hitting-set instance; also writes `<out>.meta`.
    FromHs {
        hs: PathBuf,
        #[arg(long, required_unless_present = "epsilon", conflicts_with = "epsilon")]
        k: Option<usize>,
        #[arg(long)]
        epsilon: Option<f64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Gadget from a graph in `p edge` format; also writes `<out>.meta`.
    FromVc {
        graph: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub dir: PathBuf,
    /// Comma-separated algorithm names.
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "exact-hs,approx-hs,greedy-cm"
    )]
    pub algos: Vec<AlgoChoice>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = tco_core::charsys::DEFAULT_AUDIENCE_CAP)]
    pub cap: usize,
    #[arg(long, default_value_t = tco_core::hitting::DEFAULT_NODE_LIMIT)]
    pub max_nodes: u64,
}
