use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use monoreg::dynamics::{
    attractors, path_trace, StateGraph, UpdateMode, DEFAULT_STATE_LIMIT, MAX_STATE_LIMIT,
};
use monoreg::function::{RegulatorContext, Shape, Sign};
use monoreg::io::{
    hasse_slice_dot, parse_expression_with, render_function, slice_json, state_graph_dot,
    state_graph_json, ModelDocument, ParseOptions,
};
use monoreg::neighborhood::{
    count_consistent, enumerate_all, random_path, HasseSlice, ENUMERATION_LIMIT,
};
use monoreg::pbn::{
    simulate, th_initial_state, th_model, Experiment, ProbabilisticNetwork, SimulationConfig,
    TerminationPolicy, DEFAULT_MAX_STEPS,
};
use monoreg::state::State;
use monoreg::verify::{verify_arity, Fault};
use monoreg::Error;

const EXIT_VIOLATION: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_VALIDATION: u8 = 3;

/// Consistent Boolean regulatory functions: neighbourhoods, dynamics and
/// probabilistic simulation.
#[derive(Parser)]
#[command(name = "monoreg", version)]
struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(short = 'o', long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parents, children and siblings of one function.
    Neighbors(NeighborsArgs),
    /// List every consistent function shape of arity P, or count them.
    Enumerate {
        p: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Transition counts along a random ascending Hasse path, as CSV.
    Walk {
        p: usize,
        #[arg(long, value_enum, default_value_t = Autoreg::None)]
        autoreg: Autoreg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// State transition graph of a model: stable states and attractors.
    Stg(StgArgs),
    /// Run the property suites for each arity in a range such as `1..4`.
    Verify {
        range: String,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<FaultArg>,
    },
    /// Probabilistic simulation and phenotype proportions.
    Pbn(PbnArgs),
}

#[derive(Args)]
struct NeighborsArgs {
    /// Function as a DNF expression, e.g. "s1 | (s2 & !s3)".
    #[arg(
        short = 'e',
        long,
        conflicts_with = "shape",
        required_unless_present = "shape"
    )]
    expr: Option<String>,
    /// Function as an antichain cover, e.g. "{{1},{2,3}}".
    #[arg(short = 's', long)]
    shape: Option<String>,
    /// Number of regulators when giving a shape; inferred otherwise.
    #[arg(short = 'p', long)]
    arity: Option<usize>,
    /// Push negations inward and distribute before parsing.
    #[arg(long)]
    normalize: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct StgArgs {
    model: PathBuf,
    #[arg(long, value_enum, default_value_t = Mode::Async)]
    mode: Mode,
    /// Shorthand for `--format dot`.
    #[arg(long)]
    dot: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest number of components explored exhaustively.
    #[arg(long, default_value_t = DEFAULT_STATE_LIMIT)]
    limit: usize,
    #[arg(long)]
    normalize: bool,
}

#[derive(Args)]
struct PbnArgs {
    /// Model file; a `probability` column declares ensembles.
    #[arg(conflicts_with = "th_preset", required_unless_present = "th_preset")]
    model: Option<PathBuf>,
    /// Use the built-in T helper cell model.
    #[arg(long)]
    th_preset: bool,
    #[arg(long, value_parser = parse_experiment)]
    experiment: Option<Experiment>,
    #[arg(long, default_value_t = 1000)]
    runs: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_MAX_STEPS)]
    max_steps: usize,
    #[arg(long, value_enum, default_value_t = PolicyArg::ReferenceFixedPoint)]
    policy: PolicyArg,
    /// Initial state, component 1 first; defaults to IFNg alone when the
    /// model has it, otherwise all zeros.
    #[arg(long)]
    initial: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Async,
    Sync,
}

#[derive(Clone, Copy, ValueEnum)]
enum Autoreg {
    None,
    Pos,
    Neg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    DropParent,
    MislabelRule,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolicyArg {
    Absorbing,
    ReferenceFixedPoint,
    FixedSteps,
}

fn parse_experiment(s: &str) -> Result<Experiment, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_parse_error() {
                EXIT_PARSE
            } else {
                EXIT_VALIDATION
            },
            message: e.to_string(),
        }
    }
}

fn validation(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_VALIDATION,
        message: message.into(),
    }
}

type CmdResult = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Neighbors(args) => neighbors(&args),
        Command::Enumerate { p, count_only } => enumerate(p, count_only),
        Command::Walk { p, autoreg, seed } => walk(p, autoreg, seed),
        Command::Stg(args) => stg(&args),
        Command::Verify {
            range,
            inject_fault,
        } => verify(&range, inject_fault),
        Command::Pbn(args) => pbn(&args),
    };
    let (text, code) = match result {
        Ok(text) => (text, 0),
        Err(f) if f.code == EXIT_VIOLATION => (f.message, EXIT_VIOLATION),
        Err(f) => {
            eprintln!("error: {}", f.message);
            return ExitCode::from(f.code);
        }
    };
    let written = match &cli.output {
        Some(path) => fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_VALIDATION);
    }
    ExitCode::from(code)
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_PARSE,
        message: format!("{}: {e}", path.display()),
    })
}

fn neighbors(args: &NeighborsArgs) -> CmdResult {
    let (shape, ctx, names) = match (&args.expr, &args.shape) {
        (Some(e), _) => {
            let f = parse_expression_with(
                e,
                ParseOptions {
                    normalize: args.normalize,
                },
            )?;
            (f.shape, f.ctx, f.names)
        }
        (None, Some(s)) => {
            let parsed: Shape = s.parse()?;
            let shape = match args.arity {
                Some(p) if p != parsed.arity() => Shape::new(p, parsed.clauses().to_vec())?,
                _ => parsed,
            };
            let p = shape.arity();
            let names = (1..=p).map(|k| format!("s{k}")).collect();
            (shape, RegulatorContext::all_positive(p)?, names)
        }
        (None, None) => return Err(validation("either --expr or --shape is required")),
    };
    let slice = HasseSlice::of(&shape);
    Ok(match args.format {
        Format::Dot => hasse_slice_dot(&slice).render(),
        Format::Json => json(&slice_json(&slice)),
        Format::Text | Format::Csv => {
            let expr = |s: &Shape| render_function(s, &ctx, &names);
            let mut out = format!("center: {shape}  {}\n", expr(&shape));
            out += &format!("parents ({}):\n", slice.parents.len());
            for p in &slice.parents {
                out += &format!(
                    "  {}  {} +{}  {}\n",
                    p.target,
                    p.rule,
                    p.delta_true_states(),
                    expr(&p.target)
                );
            }
            out += &format!("children ({}):\n", slice.children.len());
            for c in &slice.children {
                out += &format!(
                    "  {}  {} -{}  {}\n",
                    c.target,
                    c.rule,
                    c.delta_true_states(),
                    expr(&c.target)
                );
            }
            out += &format!("siblings ({}):\n", slice.siblings.len());
            for s in &slice.siblings {
                out += &format!("  {s}  {}\n", expr(s));
            }
            out
        }
    })
}

fn enumerate(p: usize, count_only: bool) -> CmdResult {
    if count_only {
        return Ok(format!("{}\n", count_consistent(p)?));
    }
    if p > ENUMERATION_LIMIT {
        return Err(validation(format!(
            "full enumeration is limited to p <= {ENUMERATION_LIMIT}; use --count-only"
        )));
    }
    let mut out = String::new();
    for s in enumerate_all(p)? {
        out += &s.to_string();
        out.push('\n');
    }
    Ok(out)
}

fn walk(p: usize, autoreg: Autoreg, seed: u64) -> CmdResult {
    if p == 0 || p > 8 {
        return Err(validation(format!("walk needs 1 <= p <= 8, got {p}")));
    }
    let positive = RegulatorContext::all_positive(p)?;
    let (ctx, n) = match autoreg {
        Autoreg::None => (positive, p + 1),
        Autoreg::Pos => (positive.with_self_index(p)?, p),
        Autoreg::Neg => {
            let mut signs = vec![Sign::Positive; p];
            signs[p - 1] = Sign::Negative;
            (RegulatorContext::new(signs)?.with_self_index(p)?, p)
        }
    };
    eprintln!("seed: {seed}");
    let path = random_path(p, seed)?;
    let trace = path_trace(&ctx, n, &path)?;
    let mut out = String::from("step,shape,total,increasing,decreasing\n");
    for (i, (shape, c)) in path.iter().zip(&trace).enumerate() {
        out += &format!(
            "{i},\"{shape}\",{},{},{}\n",
            c.total(),
            c.increasing,
            c.decreasing
        );
    }
    Ok(out)
}

fn stg(args: &StgArgs) -> CmdResult {
    if args.limit > MAX_STATE_LIMIT {
        return Err(validation(format!(
            "--limit is capped at {MAX_STATE_LIMIT}"
        )));
    }
    let text = read(&args.model)?;
    let bn = ModelDocument::parse(&text)?.to_network_with(ParseOptions {
        normalize: args.normalize,
    })?;
    let mode = match args.mode {
        Mode::Async => UpdateMode::Async,
        Mode::Sync => UpdateMode::Sync,
    };
    let graph = StateGraph::build(&bn, mode, args.limit)?;
    let format = if args.dot { Format::Dot } else { args.format };
    Ok(match format {
        Format::Dot => state_graph_dot(&graph).render(),
        Format::Json => json(&state_graph_json(&graph)),
        Format::Text | Format::Csv => {
            let stable: Vec<String> = graph.stable_states().iter().map(State::to_string).collect();
            let mut out = format!("stable: {}\n", stable.join(" "));
            let cycles: Vec<Vec<State>> = attractors(&graph)
                .into_iter()
                .filter(|a| a.len() > 1)
                .collect();
            out += &format!("cyclic attractors: {}\n", cycles.len());
            for a in cycles {
                let states: Vec<String> = a.iter().map(State::to_string).collect();
                out += &format!("  {}-cycle: {}\n", a.len(), states.join(" "));
            }
            out
        }
    })
}

fn parse_range(range: &str) -> Option<(usize, usize)> {
    match range.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
        }
        None => {
            let p = range.trim().parse().ok()?;
            Some((p, p))
        }
    }
}

fn verify(range: &str, fault: Option<FaultArg>) -> CmdResult {
    let (lo, hi) = parse_range(range).ok_or_else(|| Failure {
        code: EXIT_PARSE,
        message: format!("invalid range {range:?}, expected e.g. 1..4 or 3"),
    })?;
    if lo == 0 || lo > hi {
        return Err(validation(format!("empty range {range:?}")));
    }
    let fault = fault.map(|f| match f {
        FaultArg::DropParent => Fault::DropParent,
        FaultArg::MislabelRule => Fault::MislabelRule,
    });
    let mut out = String::new();
    let mut failed = false;
    for p in lo..=hi {
        let report = verify_arity(p, fault)?;
        failed |= !report.passed();
        out += &report.to_string();
    }
    if failed {
        out += "property violation\n";
        return Err(Failure {
            code: EXIT_VIOLATION,
            message: out,
        });
    }
    out += "all suites passed\n";
    Ok(out)
}

fn pbn(args: &PbnArgs) -> CmdResult {
    let (bn, mut pnet) = match &args.model {
        Some(path) => {
            let doc = ModelDocument::parse(&read(path)?)?;
            let pnet = ProbabilisticNetwork::from_resolved(doc.resolve(ParseOptions::default())?)?;
            (pnet.base().clone(), pnet)
        }
        None => {
            let bn = th_model();
            (bn.clone(), ProbabilisticNetwork::deterministic(bn))
        }
    };
    if let Some(e) = args.experiment {
        pnet = e.network(&bn)?;
    }
    let initial = match &args.initial {
        Some(s) => s.parse::<State>()?,
        None if bn.index_of("IFNg").is_some() => th_initial_state(&bn)?,
        None => State::zeros(bn.len()),
    };
    let mut config = SimulationConfig::new(initial, args.runs, args.seed);
    config.max_steps = args.max_steps;
    config.policy = match args.policy {
        PolicyArg::Absorbing => TerminationPolicy::Absorbing,
        PolicyArg::ReferenceFixedPoint => TerminationPolicy::ReferenceFixedPoint,
        PolicyArg::FixedSteps => TerminationPolicy::FixedSteps,
    };
    eprintln!("seed: {}", args.seed);
    let report = simulate(&pnet, &config)?;
    Ok(match args.format {
        Format::Csv => {
            let mut buf = Vec::new();
            report.write_ledger(&mut buf)?;
            String::from_utf8(buf).expect("csv is utf-8")
        }
        Format::Json => json(&serde_json::json!({
            "experiment": args.experiment.map(|e| e.to_string()),
            "runs": args.runs,
            "seed": args.seed,
            "policy": config.policy.to_string(),
            "max_steps": config.max_steps,
            "proportions": report.aggregate_json(),
        })),
        Format::Text | Format::Dot => {
            let label = args
                .experiment
                .map_or_else(|| "none".to_string(), |e| e.to_string());
            let mut out = format!(
                "experiment: {label}  runs: {}  seed: {}  policy: {}\n",
                args.runs, args.seed, config.policy
            );
            for (phenotype, share) in report.proportions() {
                out += &format!("{:<6}{:>6.1}%\n", phenotype.to_string(), share * 100.0);
            }
            out
        }
    })
}

fn json<T: serde::Serialize>(value: &T) -> String {
    format!(
        "{}\n",
        serde_json::to_string_pretty(value).expect("serializable")
    )
}
