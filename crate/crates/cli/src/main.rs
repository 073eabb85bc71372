//! `mbsr`: strong resolving graphs and Maker-Breaker resolving games.

mod play;

use clap::{Parser, Subcommand, ValueEnum};
use mbsr_core::analysis::{analyze, AnalysisOptions};
use mbsr_core::families::Family;
use mbsr_core::graph::{to_dot, to_edge_list, to_json, GraphFormat};
use mbsr_core::products::{cartesian, corona, direct, join, lexicographic, modular};
use mbsr_core::verify::{run_verification, summarize, VerifyConfig, WORKERS_ENV};
use mbsr_core::{Error, Graph, Limits};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_USAGE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_LIMIT: u8 = 3;
const EXIT_VERIFY: u8 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "mbsr",
    version,
    about = "Strong resolving graphs, (strong) metric dimension and Maker-Breaker resolving games",
    after_help = "Exit codes: 0 success, 1 usage error, 2 parse or input error, 3 limit exceeded, \
                  4 verification failures or analysis defects.\n\
                  Set MBSR_WORKERS to fix the number of worker threads used by verify-paper."
)]
struct Cli {
    /// Largest game board solved exactly [default: 20, verify-paper: 32]
    #[arg(long, global = true)]
    exact_limit: Option<usize>,

    /// Largest graph given to the canonical-labeling isomorphism test
    #[arg(long, global = true)]
    iso_limit: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Analyse a connected graph: SR graph, sdim, dim and game outcomes
    Analyze {
        /// Input graph (edge list, or JSON when the name ends in .json); `-` reads stdin
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
        format: InputFormat,
        /// Print the report as one JSON object
        #[arg(long)]
        json: bool,
        /// Skip the resolving game
        #[arg(long)]
        no_rg: bool,
        /// Largest graph for the exact metric dimension and resolving game
        #[arg(long)]
        dim_limit: Option<usize>,
    },
    /// Write a named graph family
    Generate {
        /// One of: path, cycle, complete, star, petersen, multipartite, spider, fan, wheel, tree
        family: String,
        /// Parameters, comma- or space-separated (e.g. `6`, `2,2,1`, `- 0 0 1`)
        params: Vec<String>,
        /// Output file (stdout when absent)
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Edges)]
        to: OutputFormat,
    },
    /// Build a product of two graphs (or the complement of one)
    Product {
        #[arg(value_enum)]
        operation: ProductOp,
        a: PathBuf,
        /// Second factor; not used by complement-a
        b: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Edges)]
        to: OutputFormat,
    },
    /// Check the known formulas and outcome tables; one JSON record per check
    VerifyPaper {
        /// Largest order of the exhaustive labeled-graph sweeps
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Random connected graphs (orders 7 to 9) in the sampled sweep
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        /// Write the records here instead of stdout
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Play a game against the engine, or watch the engine play itself
    Play {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = play::GameKind::Srg)]
        game: play::GameKind,
        #[arg(long, value_enum, default_value_t = play::Human::None)]
        human: play::Human,
        #[arg(long, value_enum, default_value_t = play::Side::Maker)]
        first: play::Side,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum InputFormat {
    Auto,
    Edges,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Edges,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ProductOp {
    Corona,
    Join,
    Cartesian,
    Direct,
    Lexicographic,
    Modular,
    ComplementA,
}

/// Command failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::LimitExceeded { .. } => EXIT_LIMIT,
            Error::InvalidParameter(_) => EXIT_USAGE,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn limits(cli: &Cli, exact_default: usize) -> Limits {
    let mut limits = Limits {
        exact: exact_default,
        ..Limits::default()
    };
    if let Some(k) = cli.exact_limit {
        limits.exact = k;
    }
    if let Some(k) = cli.iso_limit {
        limits.iso = k;
    }
    limits
}

fn run(cli: Cli) -> CmdResult {
    match &cli.command {
        Command::Analyze {
            input,
            format,
            json,
            no_rg,
            dim_limit,
        } => {
            let g = read_graph(input, *format)?;
            let mut limits = limits(&cli, Limits::default().exact);
            if let Some(k) = dim_limit {
                limits.dim = *k;
            }
            let opts = AnalysisOptions {
                limits,
                resolving_game: !no_rg,
            };
            let report = analyze(&g, &input.display().to_string(), &opts)?;
            if *json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.render_text());
            }
            Ok(if report.defects.is_empty() { 0 } else { EXIT_VERIFY })
        }
        Command::Generate {
            family,
            params,
            output,
            to,
        } => {
            let joined = params.join(",");
            let g = Family::parse(family, &joined)?.build()?;
            let header = vec![format!("{family} {}", params.join(" ")).trim_end().to_string()];
            write_graph(&g, &header, output.as_deref(), *to, family)?;
            Ok(0)
        }
        Command::Product {
            operation,
            a,
            b,
            output,
            to,
        } => {
            let ga = read_graph(a, InputFormat::Auto)?;
            let (g, header) = if *operation == ProductOp::ComplementA {
                if b.is_some() {
                    return Err(usage("complement-a takes a single input"));
                }
                (ga.complement(), vec![format!("complement of {}", a.display())])
            } else {
                let b = b.as_ref().ok_or_else(|| usage("this product needs two inputs"))?;
                let gb = read_graph(b, InputFormat::Auto)?;
                product(*operation, &ga, &gb, a, b)
            };
            write_graph(&g, &header, output.as_deref(), *to, "product")?;
            Ok(0)
        }
        Command::VerifyPaper {
            max_n,
            samples,
            seed,
            report,
        } => {
            let defaults = VerifyConfig::default();
            let cfg = VerifyConfig {
                max_n: *max_n,
                samples: *samples,
                seed: *seed,
                limits: limits(&cli, defaults.limits.exact),
            };
            if *max_n > 7 {
                return Err(usage("--max-n above 7 is out of reach of the exhaustive sweep"));
            }
            let records = run_verification(&cfg);
            let mut text = String::new();
            for r in &records {
                text.push_str(&r.to_json_line());
                text.push('\n');
            }
            match report {
                Some(path) => std::fs::write(path, text)?,
                None => std::io::stdout().write_all(text.as_bytes())?,
            }
            let summary = summarize(&records);
            eprintln!(
                "{} checks, {} failed, {}",
                summary.total,
                summary.failed,
                worker_note()
            );
            for r in records.iter().filter(|r| !r.pass) {
                eprintln!("FAIL {} [{}]: expected {}, computed {}", r.claim_id, r.instance, r.expected, r.computed);
            }
            Ok(if summary.failed == 0 { 0 } else { EXIT_VERIFY })
        }
        Command::Play {
            input,
            game,
            human,
            first,
        } => {
            let g = read_graph(input, InputFormat::Auto)?;
            let limits = limits(&cli, Limits::default().exact);
            let stdin = std::io::stdin();
            let mut out = std::io::stdout();
            play::play(&g, *game, *human, *first, &limits, &mut stdin.lock(), &mut out)?;
            Ok(0)
        }
    }
}

fn worker_note() -> String {
    match mbsr_core::verify::workers_from_env() {
        Some(k) => format!("{k} workers ({WORKERS_ENV})"),
        None => format!("{} workers", std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

fn usage(message: &str) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.to_string(),
    }
}

fn product(op: ProductOp, a: &Graph, b: &Graph, pa: &Path, pb: &Path) -> (Graph, Vec<String>) {
    let (n, m) = (a.n(), b.n());
    let names = format!("A = {}, B = {}", pa.display(), pb.display());
    let pair_note = format!("vertex (u, w) with u in A, w in B is u * {m} + w");
    match op {
        ProductOp::Corona => (
            corona(a, b),
            vec![
                format!("corona product A ⊙ B; {names}"),
                format!("vertices 0..{n} are A; copy i of B occupies {n} + i * {m} .. {n} + (i + 1) * {m}"),
            ],
        ),
        ProductOp::Join => (
            join(a, b),
            vec![
                format!("join A + B; {names}"),
                format!("vertices 0..{n} are A, vertex {n} + w is w in B"),
            ],
        ),
        ProductOp::Cartesian => (cartesian(a, b), vec![format!("Cartesian product A □ B; {names}"), pair_note]),
        ProductOp::Direct => (direct(a, b), vec![format!("direct product A × B; {names}"), pair_note]),
        ProductOp::Lexicographic => (
            lexicographic(a, b),
            vec![format!("lexicographic product A ∘ B; {names}"), pair_note],
        ),
        ProductOp::Modular => (modular(a, b), vec![format!("modular product A ◇ B; {names}"), pair_note]),
        ProductOp::ComplementA => unreachable!("handled by the caller"),
    }
}

fn read_graph(path: &Path, format: InputFormat) -> Result<Graph, Failure> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())?
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure {
            code: EXIT_INPUT,
            message: format!("{}: {e}", path.display()),
        })?
    };
    let format = match format {
        InputFormat::Auto => GraphFormat::from_path(path),
        InputFormat::Edges => GraphFormat::EdgeList,
        InputFormat::Json => GraphFormat::Json,
    };
    format.parse(&text).map_err(|e| Failure {
        code: EXIT_INPUT,
        message: format!("{}: {e}", path.display()),
    })
}

fn write_graph(g: &Graph, header: &[String], output: Option<&Path>, to: OutputFormat, name: &str) -> Result<(), Failure> {
    let text = match to {
        OutputFormat::Edges => to_edge_list(g, header),
        OutputFormat::Json => to_json(g) + "\n",
        OutputFormat::Dot => {
            let id: String = name.chars().filter(|c| c.is_ascii_alphanumeric()).collect();
            to_dot(g, if id.is_empty() { "g" } else { &id })
        }
    };
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}
