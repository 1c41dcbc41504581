use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use edgering::Limits;
use edgering_cli::enumerate::{labeled, side_orbits, Constraints};
use edgering_cli::generate::{generate, instance_rng, Model, ModelKind, RandomFamily};
use edgering_cli::report::{analyze, AnalyzeOptions};
use edgering_cli::suite::{run, Family, Theorem};
use edgering_cli::{graph_file, CliError};

/// h-vectors and Gorenstein classification of graph edge rings.
#[derive(Parser)]
#[command(name = "edgering", version)]
struct Cli {
    /// Largest side size for exhaustive subset enumeration.
    #[arg(long, global = true, default_value_t = Limits::default().max_side)]
    max_side: usize,
    /// Byte budget for lattice-point layers.
    #[arg(long, global = true, default_value_t = Limits::default().memory_budget)]
    memory_budget: usize,
    /// Largest number of missing cross edges for supergraph enumeration.
    #[arg(long, global = true, default_value_t = Limits::default().max_missing_edges)]
    max_missing_edges: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full classification report for one graph.
    Analyze(AnalyzeArgs),
    /// h-vector only; accepts non-bipartite graphs.
    Hilbert(InputArgs),
    /// Run invariant suites over an exhaustive or random family.
    Verify(VerifyArgs),
    /// Print one random connected bipartite graph as a graph file.
    Generate(GenerateArgs),
    /// List or count bipartite graphs on fixed sides.
    Enumerate(EnumerateArgs),
}

#[derive(Args)]
struct InputArgs {
    #[arg(long)]
    input: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Skip the bipartite pipeline and report only the h-vector.
    #[arg(long)]
    hilbert_only: bool,
    /// Add per-check timings (makes output run-dependent).
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct ModelArgs {
    /// erdos-bipartite, matching-union, or mixed (verify only).
    #[arg(long, default_value = "mixed")]
    model: String,
    #[arg(long)]
    nx: Option<usize>,
    #[arg(long)]
    ny: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Largest side drawn when sizes are not fixed.
    #[arg(long, default_value_t = 7)]
    max_random_side: usize,
}

impl ModelArgs {
    fn family(&self) -> Result<RandomFamily, CliError> {
        let mut f = RandomFamily::new(self.model.parse::<ModelKind>()?);
        f.max_side = self.max_random_side;
        f.nx = self.nx;
        f.ny = self.ny;
        f.p = self.p;
        f.n = self.n;
        f.k = self.k;
        Ok(f)
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// All connected bipartite graphs with nx + ny up to this order.
    #[arg(long, conflicts_with = "random")]
    exhaustive: Option<usize>,
    /// Use every labeled graph instead of one per side-relabeling orbit.
    #[arg(long, requires = "exhaustive")]
    labeled: bool,
    /// Number of random instances.
    #[arg(long)]
    random: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    model: ModelArgs,
    /// A theorem name, a comma-separated list, or all.
    #[arg(long, default_value = "all")]
    theorem: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Stream number within the seed.
    #[arg(long, default_value_t = 0)]
    index: u64,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    nx: usize,
    #[arg(long)]
    ny: usize,
    #[arg(long)]
    connected: bool,
    #[arg(long)]
    two_connected: bool,
    #[arg(long)]
    matching_covered: bool,
    /// One graph per within-side relabeling orbit.
    #[arg(long)]
    orbits: bool,
    /// Print only the number of graphs.
    #[arg(long)]
    count: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn dispatch(cli: Cli) -> Result<u8, CliError> {
    let limits = Limits {
        max_side: cli.max_side,
        memory_budget: cli.memory_budget,
        max_missing_edges: cli.max_missing_edges,
    };
    match cli.command {
        Command::Analyze(a) => report(&a.input, a.hilbert_only, a.timings, limits),
        Command::Hilbert(a) => report(&a, true, false, limits),
        Command::Verify(a) => verify(a, limits),
        Command::Generate(a) => {
            let model = match a.model.model.parse::<ModelKind>()? {
                ModelKind::ErdosBipartite => Model::ErdosBipartite {
                    nx: a.model.nx.unwrap_or(3),
                    ny: a.model.ny.unwrap_or(3),
                    p: a.model.p.unwrap_or(0.5),
                },
                ModelKind::MatchingUnion => Model::MatchingUnion {
                    n: a.model.n.unwrap_or(3),
                    k: a.model.k.unwrap_or(2),
                },
                ModelKind::Mixed => {
                    return Err(CliError::Usage(
                        "generate needs --model erdos-bipartite or matching-union".into(),
                    ))
                }
            };
            let g = generate(&model, &mut instance_rng(a.seed, a.index))?;
            print!("{}", graph_file::serialize(&g));
            Ok(0)
        }
        Command::Enumerate(a) => {
            let c = Constraints {
                connected: a.connected,
                two_connected: a.two_connected,
                matching_covered: a.matching_covered,
            };
            let graphs: Box<dyn Iterator<Item = edgering::Graph>> = if a.orbits {
                Box::new(side_orbits(a.nx, a.ny, c)?.into_iter())
            } else {
                Box::new(labeled(a.nx, a.ny, c)?)
            };
            if a.count {
                println!("{}", graphs.count());
            } else {
                for (i, g) in graphs.enumerate() {
                    if i > 0 {
                        println!();
                    }
                    print!("{}", graph_file::serialize(&g));
                }
            }
            Ok(0)
        }
    }
}

fn report(input: &InputArgs, hilbert_only: bool, timings: bool, limits: Limits) -> Result<u8, CliError> {
    let g = graph_file::read(&input.input)?;
    let opts = AnalyzeOptions {
        limits,
        hilbert_only,
        timings,
    };
    let r = analyze(&g, &opts)?;
    if input.json {
        print!("{}", r.to_json());
    } else {
        print!("{}", r.to_text());
    }
    Ok(if r.all_checks_pass() { 0 } else { 1 })
}

fn verify(a: VerifyArgs, limits: Limits) -> Result<u8, CliError> {
    let family = match (a.exhaustive, a.random) {
        (Some(max_order), None) => Family::Exhaustive {
            max_order,
            labeled: a.labeled,
        },
        (None, Some(trials)) => Family::Random {
            trials,
            seed: a.seed,
            family: a.model.family()?,
        },
        _ => return Err(CliError::Usage("verify needs --exhaustive N or --random T".into())),
    };
    let theorems = Theorem::parse_selection(&a.theorem)?;
    let summary = run(&family, &theorems, &limits)?;
    if a.json {
        println!("{}", serde_json::to_string_pretty(&summary).expect("summary serializes"));
    } else {
        print!("{}", summary.to_text());
    }
    eprintln!("elapsed {:.1?}", summary.elapsed);
    Ok(if summary.failed() == 0 { 0 } else { 1 })
}
