//! Command implementations behind the `tco` binary.
//!
//! Exit codes: 0 success, 1 infeasible or precondition violated, 2 parse or
//! input error, 3 budget or cap exceeded.

pub mod args;

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Context;
use tco_core::bench::{run_bench, write_csv, BenchCase};
use tco_core::charsys::{lift_hs_solution, reduce_tco_to_hs};
use tco_core::format::{
    emit_codec, emit_hs, emit_hs_solution, emit_instance, emit_solution_with_comments, parse_codec,
    parse_hs, parse_hs_solution, parse_instance, parse_solution,
};
use tco_core::hitting::{
    hs_branch_exact, hs_greedy_frequency, hs_greedy_setwise, hs_reduce_rules, BranchLimits,
    BranchOutcome, HsError,
};
use tco_core::reductions::{
    emit_hs_meta, emit_vc_meta, extract_hs_solution, extract_vc_solution, gen_from_hs, gen_from_vc,
    gen_random, parse_graph, parse_hs_meta, parse_vc_meta, KChoice, ReductionError,
};
use tco_core::solvers::{
    small_topic_threshold, small_topic_threshold_log2, solve_auto, AutoOptions,
};
use tco_core::{validate_solution, AlgoChoice, SolveError, SolverLimits};

use args::{
    BenchArgs, Cli, Command, GenKind, HsAlgo, HsSolveArgs, SolveArgs, Target, DEFAULT_SEED,
};

pub const EXIT_INFEASIBLE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_LIMIT: u8 = 3;

/// A failed command with the exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }

    fn input(err: anyhow::Error) -> Self {
        Failure::new(EXIT_INPUT, format!("{err:#}"))
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        let code = match e {
            SolveError::AudienceTooLarge { .. } | SolveError::SharedTopics { .. } => {
                EXIT_INFEASIBLE
            }
            SolveError::BudgetExceeded(_) | SolveError::CapExceeded(_) => EXIT_LIMIT,
            SolveError::Model(_) => EXIT_INPUT,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<ReductionError> for Failure {
    fn from(e: ReductionError) -> Self {
        let code = match e {
            ReductionError::Infeasible(_) => EXIT_INFEASIBLE,
            _ => EXIT_INPUT,
        };
        Failure::new(code, e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

/// Standard output and error of a command.
pub struct Io<'a> {
    pub out: &'a mut dyn Write,
    pub err: &'a mut dyn Write,
}

impl Io<'_> {
    fn say(&mut self, line: impl std::fmt::Display) {
        let _ = writeln!(self.out, "{line}");
    }

    fn note(&mut self, line: impl std::fmt::Display) {
        let _ = writeln!(self.err, "{line}");
    }

    /// Writes to `path`, or to standard output without one.
    fn emit(&mut self, path: Option<&Path>, text: &str) -> Result<(), Failure> {
        match path {
            Some(p) => write_file(p, text),
            None => self
                .out
                .write_all(text.as_bytes())
                .map_err(|e| Failure::new(EXIT_INPUT, format!("writing output: {e}"))),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(Failure::input)
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text)
        .with_context(|| format!("writing {}", path.display()))
        .map_err(Failure::input)
}

/// Reads a file and parses it, tagging errors with the path.
fn load<T, E: std::error::Error + Send + Sync + 'static>(
    path: &Path,
    parse: impl FnOnce(&str) -> Result<T, E>,
) -> Result<T, Failure> {
    let text = read(path)?;
    parse(&text)
        .with_context(|| format!("parsing {}", path.display()))
        .map_err(Failure::input)
}

fn with_suffix(path: &Path, suffix: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

pub fn run(cli: Cli, io: &mut Io<'_>) -> Outcome {
    match cli.command {
        Command::Check { instance, solution } => check(&instance, &solution, io),
        Command::Solve(args) => solve(&args, io),
        Command::Reduce {
            instance, out, cap, ..
        } => reduce(&instance, &out, cap, io),
        Command::Lift {
            hs_solution,
            codec,
            out,
        } => lift(&hs_solution, &codec, out.as_deref(), io),
        Command::HsSolve(args) => hs_solve(&args, io),
        Command::Gen { kind } => generate(kind, io),
        Command::Extract {
            kind,
            meta,
            solution,
            out,
        } => extract(kind, &meta, &solution, out.as_deref(), io),
        Command::Bench(args) => bench(&args, io),
        Command::Threshold { users, log2 } => threshold(users, log2, io),
    }
}

fn check(instance: &Path, solution: &Path, io: &mut Io<'_>) -> Outcome {
    let inst = load(instance, parse_instance)?;
    let overlay = load(solution, parse_solution)?;
    let report =
        validate_solution(&inst, &overlay).map_err(|e| Failure::new(EXIT_INPUT, e.to_string()))?;
    let _ = writeln!(io.out, "{report}");
    Ok(if report.feasible { 0 } else { EXIT_INFEASIBLE })
}

fn solve(args: &SolveArgs, io: &mut Io<'_>) -> Outcome {
    let inst = load(&args.instance, parse_instance)?;
    let limits = SolverLimits {
        budget: args.budget,
        max_states: args.max_states,
        max_nodes: args.max_nodes,
        audience_cap: args.cap,
    };
    let mut report = match args.algo {
        AlgoChoice::Auto => solve_auto(
            &inst,
            &AutoOptions {
                limits,
                compare_greedy: args.compare_greedy,
            },
        )?,
        choice => choice.run(&inst, &limits)?,
    };
    report.seed = args.seed;
    let text = emit_solution_with_comments(&report.overlay, &report.comment_lines());
    io.emit(args.out.as_deref(), &text)?;
    if args.out.is_some() {
        io.say(report.summary_line());
    } else {
        io.note(report.summary_line());
    }
    Ok(0)
}

fn reduce(instance: &Path, prefix: &Path, cap: usize, io: &mut Io<'_>) -> Outcome {
    let inst = load(instance, parse_instance)?;
    let (hs, codec) = reduce_tco_to_hs(&inst, cap).map_err(SolveError::from)?;
    write_file(&with_suffix(prefix, ".hs"), &emit_hs(&hs))?;
    write_file(&with_suffix(prefix, ".codec"), &emit_codec(&codec))?;
    io.say(format_args!(
        "hs {} elements {} sets",
        hs.n_elements(),
        hs.sets().len()
    ));
    Ok(0)
}

fn lift(hs_solution: &Path, codec: &Path, out: Option<&Path>, io: &mut Io<'_>) -> Outcome {
    let chosen = load(hs_solution, parse_hs_solution)?;
    let codec = load(codec, parse_codec)?;
    let overlay =
        lift_hs_solution(&codec, &chosen).map_err(|e| Failure::new(EXIT_INPUT, e.to_string()))?;
    io.emit(out, &emit_solution_with_comments(&overlay, &[]))?;
    Ok(0)
}

fn hs_solve(args: &HsSolveArgs, io: &mut Io<'_>) -> Outcome {
    let mut hs = load(&args.instance, parse_hs)?;
    let mut budget = args.budget;
    if let Some(k) = args.kernel {
        let kernel = hs_reduce_rules(&hs, k);
        io.note(format_args!(
            "kernel: {} of {} sets, {} rule applications, forced {:?}",
            kernel.instance.sets().len(),
            hs.sets().len(),
            kernel.trace.len(),
            kernel.forced
        ));
        hs = kernel.instance;
        budget = Some(budget.map_or(k, |b| b.min(k)));
    }
    let no_solution = |e: HsError| match e {
        HsError::EmptySet(_) if args.kernel.is_some() => Failure::new(
            EXIT_LIMIT,
            format!("no hitting set within the kernel budget ({e})"),
        ),
        e => Failure::new(EXIT_INFEASIBLE, e.to_string()),
    };
    let solution = match args.algo {
        HsAlgo::Setwise => hs_greedy_setwise(&hs).map_err(no_solution)?,
        HsAlgo::Frequency => hs_greedy_frequency(&hs).map_err(no_solution)?,
        HsAlgo::Exact => {
            let limits = BranchLimits {
                budget,
                max_nodes: args.max_nodes,
            };
            match hs_branch_exact(&hs, limits).map_err(no_solution)? {
                BranchOutcome::Solved(s) => s,
                BranchOutcome::BudgetExceeded => {
                    return Err(Failure::new(EXIT_LIMIT, "no hitting set within the budget"));
                }
                BranchOutcome::NodeLimit { nodes, .. } => {
                    return Err(Failure::new(
                        EXIT_LIMIT,
                        format!("node limit reached after {nodes} nodes"),
                    ));
                }
            }
        }
    };
    io.emit(args.out.as_deref(), &emit_hs_solution(&solution.chosen))?;
    io.note(format_args!("hs {} {}", solution.cost(), solution.optimal));
    Ok(0)
}

fn generate(kind: GenKind, io: &mut Io<'_>) -> Outcome {
    match kind {
        GenKind::Random {
            users,
            topics,
            min,
            max,
            seed,
            out,
        } => {
            let seed = seed.unwrap_or_else(|| {
                io.note(format_args!("seed {DEFAULT_SEED}"));
                DEFAULT_SEED
            });
            let inst = gen_random(users, topics, min, max, seed)?;
            io.emit(out.as_deref(), &emit_instance(&inst))?;
        }
        GenKind::FromHs {
            hs,
            k,
            epsilon,
            out,
        } => {
            let source = load(&hs, parse_hs)?;
            let choice = match (k, epsilon) {
                (Some(k), _) => KChoice::Override(k),
                (None, Some(eps)) => KChoice::Epsilon(eps),
                (None, None) => unreachable!("clap requires --k or --epsilon"),
            };
            let (inst, meta) = gen_from_hs(&source, choice)?;
            write_file(&out, &emit_instance(&inst))?;
            write_file(&with_suffix(&out, ".meta"), &emit_hs_meta(&meta))?;
            io.say(format_args!(
                "{} users {} topics k {}",
                inst.n_users(),
                inst.n_topics(),
                meta.k
            ));
        }
        GenKind::FromVc { graph, out } => {
            let g = load(&graph, parse_graph)?;
            let (inst, meta) = gen_from_vc(&g);
            write_file(&out, &emit_instance(&inst))?;
            write_file(&with_suffix(&out, ".meta"), &emit_vc_meta(&meta))?;
            io.say(format_args!(
                "{} users {} topics",
                inst.n_users(),
                inst.n_topics()
            ));
        }
    }
    Ok(0)
}

fn extract(
    kind: Target,
    meta: &Path,
    solution: &Path,
    out: Option<&Path>,
    io: &mut Io<'_>,
) -> Outcome {
    let overlay = load(solution, parse_solution)?;
    let text = match kind {
        Target::Hs => {
            let meta = load(meta, parse_hs_meta)?;
            emit_hs_solution(&extract_hs_solution(&overlay, &meta)?)
        }
        Target::Vc => {
            let meta = load(meta, parse_vc_meta)?;
            let cover = extract_vc_solution(&overlay, &meta)?;
            let mut text = format!("s vc {}\n", cover.len());
            for v in cover {
                let _ = writeln!(text, "v {}", v + 1);
            }
            text
        }
    };
    io.emit(out, &text)?;
    Ok(0)
}

fn bench(args: &BenchArgs, io: &mut Io<'_>) -> Outcome {
    let entries = fs::read_dir(&args.dir)
        .with_context(|| format!("listing {}", args.dir.display()))
        .map_err(Failure::input)?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "tco"))
        .collect();
    paths.sort();
    let cases = paths
        .iter()
        .map(|p| {
            Ok(BenchCase {
                name: p
                    .file_stem()
                    .unwrap_or_default()
                    .to_string_lossy()
                    .into_owned(),
                instance: load(p, parse_instance)?,
            })
        })
        .collect::<Result<Vec<_>, Failure>>()?;
    let seed = args.seed.unwrap_or_else(|| {
        io.note(format_args!("seed {DEFAULT_SEED}"));
        DEFAULT_SEED
    });
    let limits = SolverLimits {
        audience_cap: args.cap,
        max_nodes: args.max_nodes,
        ..SolverLimits::default()
    };
    let rows = run_bench(&cases, &args.algos, &limits, seed, args.jobs)
        .map_err(|e| Failure::new(EXIT_INPUT, format!("thread pool: {e}")))?;
    let mut buf = Vec::new();
    write_csv(&rows, &mut buf).map_err(|e| Failure::new(EXIT_INPUT, e.to_string()))?;
    io.emit(args.out.as_deref(), &String::from_utf8_lossy(&buf))?;
    io.note(format_args!(
        "{} rows from {} instances",
        rows.len(),
        cases.len()
    ));
    Ok(0)
}

fn threshold(users: Option<u64>, log2: Option<f64>, io: &mut Io<'_>) -> Outcome {
    let value = match (users, log2) {
        (Some(n), _) => small_topic_threshold(n),
        (None, Some(l)) => small_topic_threshold_log2(l),
        (None, None) => unreachable!("clap requires a user count or --log2"),
    }
    .map_err(|e| Failure::new(EXIT_INFEASIBLE, e.to_string()))?;
    io.say(value);
    Ok(0)
}
