use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use netresil::attack::{self, AttackConfig, AttackScenario, TargetingMode};
use netresil::centrality::CentralityKind;
use netresil::generators::{barabasi_albert, erdos_renyi};
use netresil::report::{self, CommunityAlgorithm, Format, LabelMap, ResilienceReport};
use netresil::{Error, Graph};

#[derive(Parser)]
#[command(
    name = "netresil",
    version,
    about = "Network resilience under targeted and random node removal"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Centralities, communities and fragmentation metrics of a graph
    Analyze {
        /// Edge-list file, or `-` for stdin
        edgelist: PathBuf,
        #[arg(long, value_enum, default_value_t = Algorithm::Louvain)]
        algorithm: Algorithm,
        #[command(flatten)]
        out: Output,
    },
    /// Targeted versus random node-removal attack
    Attack {
        edgelist: PathBuf,
        /// Fraction of nodes to remove, strictly between 0 and 1
        #[arg(long, default_value_t = AttackScenario::DEFAULT_FRACTION)]
        fraction: f64,
        /// Seed of the random attack (trial i uses seed + i)
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Recompute the ranking after every removal
        #[arg(long)]
        adaptive: bool,
        #[arg(long, value_enum, default_value_t = Centrality::Betweenness)]
        centrality: Centrality,
        /// Number of random-attack trials
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Community detection
    Communities {
        edgelist: PathBuf,
        #[arg(long, value_enum, default_value_t = Algorithm::Louvain)]
        algorithm: Algorithm,
        #[command(flatten)]
        out: Output,
    },
    /// Synthetic graph as an edge list
    Generate {
        #[arg(long, value_enum)]
        model: Model,
        #[arg(long)]
        n: usize,
        /// Edges per arriving node (ba)
        #[arg(long)]
        m: Option<usize>,
        /// Edge probability (er)
        #[arg(long)]
        p: Option<f64>,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
    /// Write here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Dot,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algorithm {
    Louvain,
    GirvanNewman,
}

#[derive(Clone, Copy, ValueEnum)]
enum Centrality {
    Degree,
    Closeness,
    Betweenness,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Ba,
    Er,
}

enum Failure {
    Usage(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BadParams(_) | Error::BadFraction(_) => Failure::Usage(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn read_graph(path: &Path) -> Result<(Graph, LabelMap), Failure> {
    let mut text = String::new();
    let read = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map(drop)
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(report::parse_edge_list(&text)?)
}

fn tabular(format: Option<OutputFormat>, command: &str) -> Result<Format, Failure> {
    match format.unwrap_or(OutputFormat::Json) {
        OutputFormat::Json => Ok(Format::Json),
        OutputFormat::Csv => Ok(Format::Csv),
        _ => Err(Failure::Usage(format!("`{command}` supports --format json or csv"))),
    }
}

fn run(command: Command) -> Result<(), Failure> {
    let (bytes, out) = match command {
        Command::Analyze {
            edgelist,
            algorithm,
            out,
        } => {
            let format = tabular(out.format, "analyze")?;
            let (g, labels) = read_graph(&edgelist)?;
            let r = report::analyze(&g, algorithm.into(), Some(&labels))?;
            (report::emit_analysis(&r, format), out)
        }
        Command::Attack {
            edgelist,
            fraction,
            seed,
            adaptive,
            centrality,
            trials,
            out,
        } => {
            let format = tabular(out.format, "attack")?;
            let mode = if adaptive {
                TargetingMode::Adaptive
            } else {
                TargetingMode::Static
            };
            let targeted = AttackScenario::targeted(fraction)?
                .with_centrality(centrality.into())
                .with_mode(mode);
            let random = AttackScenario::random(fraction, seed)?;
            let (g, labels) = read_graph(&edgelist)?;
            let cmp =
                attack::compare_scenarios_with(&g, &targeted, &random, trials as usize, &AttackConfig::default())?;
            (
                report::emit_report(&ResilienceReport::new(&g, &cmp, Some(&labels)), format),
                out,
            )
        }
        Command::Communities {
            edgelist,
            algorithm,
            out,
        } => {
            let format = out.format.unwrap_or(OutputFormat::Json);
            if format == OutputFormat::Edgelist {
                return Err(Failure::Usage(
                    "`communities` supports --format json, csv or dot".into(),
                ));
            }
            let (g, labels) = read_graph(&edgelist)?;
            let r = report::detect_communities(&g, algorithm.into(), Some(&labels))?;
            let bytes = match format {
                OutputFormat::Json => report::emit_communities(&r, Format::Json),
                OutputFormat::Csv => report::emit_communities(&r, Format::Csv),
                _ => report::export_dot_labeled(&g, Some(&r.partition), Some(&labels)).into_bytes(),
            };
            (bytes, out)
        }
        Command::Generate {
            model,
            n,
            m,
            p,
            seed,
            out,
        } => {
            let g = match model {
                Model::Ba => {
                    let m = m.ok_or_else(|| Failure::Usage("--model ba requires --m".into()))?;
                    barabasi_albert(n, m, seed)?
                }
                Model::Er => {
                    let p = p.ok_or_else(|| Failure::Usage("--model er requires --p".into()))?;
                    erdos_renyi(n, p, seed)?
                }
            };
            let bytes = match out.format.unwrap_or(OutputFormat::Edgelist) {
                OutputFormat::Edgelist => report::emit_edge_list(&g, None).into_bytes(),
                OutputFormat::Dot => report::export_dot(&g, None).into_bytes(),
                OutputFormat::Json => {
                    let edges: Vec<[u64; 2]> = g.edges().map(|(a, b)| [a.0, b.0]).collect();
                    let doc = serde_json::json!({ "n": g.node_count(), "m": g.edge_count(), "edges": edges });
                    let mut v = serde_json::to_vec_pretty(&doc).expect("serializable");
                    v.push(b'\n');
                    v
                }
                OutputFormat::Csv => {
                    let mut s = String::from("source,target\n");
                    for (a, b) in g.edges() {
                        s.push_str(&format!("{a},{b}\n"));
                    }
                    s.into_bytes()
                }
            };
            (bytes, out)
        }
    };
    write_output(&bytes, out.output.as_deref())
}

fn write_output(bytes: &[u8], path: Option<&Path>) -> Result<(), Failure> {
    let result = match path {
        Some(path) => std::fs::write(path, bytes).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(bytes)
                .and_then(|()| stdout.flush())
                .map_err(|e| e.to_string())
        }
    };
    result.map_err(Failure::Input)
}

impl From<Algorithm> for CommunityAlgorithm {
    fn from(a: Algorithm) -> Self {
        match a {
            Algorithm::Louvain => CommunityAlgorithm::Louvain,
            Algorithm::GirvanNewman => CommunityAlgorithm::GirvanNewman,
        }
    }
}

impl From<Centrality> for CentralityKind {
    fn from(c: Centrality) -> Self {
        match c {
            Centrality::Degree => CentralityKind::Degree,
            Centrality::Closeness => CentralityKind::Closeness,
            Centrality::Betweenness => CentralityKind::Betweenness,
        }
    }
}
