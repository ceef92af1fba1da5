//! `netdecomp` command-line front end.
//!
//! Exit codes: 0 success, 1 I/O or algorithm failure, 2 usage error,
//! 3 verification found violations.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use netdecomp::bench::{self, Algorithm, Family, SweepConfig};
use netdecomp::graph::{parse_graph, write_graph, GraphKind};
use netdecomp::output::{from_json, to_json, CarvingJson, DecompositionJson};
use netdecomp::{
    color_bound, decompose, generate, verify_decomposition, verify_strong_carving, Graph, NodeMask, RoundLedger,
    Violation, WeakCarverKind,
};

#[derive(Parser)]
#[command(name = "netdecomp", version, about = "Strong-diameter ball carving and network decomposition")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph file.
    Gen(GenArgs),
    /// Carve the whole graph once.
    Carve(CarveArgs),
    /// Compute a network decomposition.
    Decompose(DecomposeArgs),
    /// Check a clustering file against a graph.
    Verify(VerifyArgs),
    /// Scaling sweep over doubling sizes, written as CSV.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum GenType {
    Path,
    Grid,
    Gnp,
    Regular,
    Barrier,
    Complete,
    Star,
}

#[derive(clap::Args)]
struct GenArgs {
    #[arg(long = "type", value_enum)]
    kind: GenType,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    width: Option<usize>,
    #[arg(long)]
    height: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, default_value_t = 4)]
    degree: usize,
    #[arg(long)]
    base_nodes: Option<usize>,
    #[arg(long, default_value_t = 8)]
    subdivision: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    Refined,
    Transform,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Self {
        match a {
            AlgoArg::Refined => Algorithm::Refined,
            AlgoArg::Transform => Algorithm::Transform,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BlackBoxArg {
    Trivial,
    LinialSaks,
}

impl From<BlackBoxArg> for WeakCarverKind {
    fn from(b: BlackBoxArg) -> Self {
        match b {
            BlackBoxArg::Trivial => WeakCarverKind::Trivial,
            BlackBoxArg::LinialSaks => WeakCarverKind::LinialSaks,
        }
    }
}

#[derive(clap::Args)]
struct CarveArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, default_value_t = 0.5)]
    eps: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "refined")]
    algo: AlgoArg,
    #[arg(long, value_enum, default_value = "linial-saks")]
    black_box: BlackBoxArg,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    ledger: Option<PathBuf>,
    #[arg(long)]
    no_verify: bool,
}

#[derive(clap::Args)]
struct DecomposeArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long = "eps-impl", alias = "algo", value_enum, default_value = "refined")]
    eps_impl: AlgoArg,
    #[arg(long, value_enum, default_value = "linial-saks")]
    black_box: BlackBoxArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    ledger: Option<PathBuf>,
    #[arg(long)]
    no_verify: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyMode {
    Decomposition,
    Carving,
}

#[derive(clap::Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    mode: VerifyMode,
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    clustering: PathBuf,
    /// Color budget; defaults to ceil(log2 n) + 1.
    #[arg(long)]
    c_bound: Option<usize>,
    /// Diameter budget; defaults to the bound recorded in the clustering.
    #[arg(long)]
    d_bound: Option<usize>,
    /// Dead-node budget for carvings; defaults to the recorded eps.
    #[arg(long)]
    eps: Option<f64>,
}

#[derive(clap::Args)]
struct BenchArgs {
    #[arg(long, default_value = "gnp")]
    family: String,
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 1)]
    trials: usize,
    #[arg(long)]
    csv: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "refined")]
    algo: AlgoArg,
    #[arg(long, value_enum, default_value = "linial-saks")]
    black_box: BlackBoxArg,
    /// Expected degree for the gnp family.
    #[arg(long, default_value_t = 8.0)]
    avg_degree: f64,
    /// Write 0 in the wall_ms column so reruns are byte-identical.
    #[arg(long)]
    no_wall_time: bool,
}

enum Failure {
    Io(String),
    Usage(String),
    Violations(Vec<Violation>),
}

impl From<netdecomp::Error> for Failure {
    fn from(e: netdecomp::Error) -> Self {
        match e {
            netdecomp::Error::InvalidParameter(msg) => Failure::Usage(msg),
            other => Failure::Io(other.to_string()),
        }
    }
}

type CliResult = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> CliResult {
    fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn need(value: Option<usize>, flag: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("--{flag} is required for this graph type")))
}

fn check(violations: Vec<Violation>) -> CliResult {
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Failure::Violations(violations))
    }
}

fn write_ledger(path: Option<&Path>, ledger: &RoundLedger) -> CliResult {
    match path {
        Some(p) => write(p, &(ledger.to_json() + "\n")),
        None => Ok(()),
    }
}

fn gen(args: GenArgs) -> CliResult {
    let kind = match args.kind {
        GenType::Path => GraphKind::Path { n: need(args.n, "n")? },
        GenType::Grid => GraphKind::Grid { width: need(args.width, "width")?, height: need(args.height, "height")? },
        GenType::Gnp => GraphKind::Gnp {
            n: need(args.n, "n")?,
            p: args.p.ok_or_else(|| Failure::Usage("--p is required for gnp".into()))?,
        },
        GenType::Regular => GraphKind::RegularExpander { n: need(args.n, "n")?, degree: args.degree },
        GenType::Barrier => GraphKind::Barrier {
            base_nodes: need(args.base_nodes, "base-nodes")?,
            degree: args.degree,
            subdivision_length: args.subdivision,
        },
        GenType::Complete => GraphKind::Complete { n: need(args.n, "n")? },
        GenType::Star => GraphKind::Star { leaves: need(args.n, "n")? },
    };
    let g = generate::generate(kind, args.seed)?;
    write(&args.out, &write_graph(&g))
}

fn carve(args: CarveArgs) -> CliResult {
    let g = read_graph(&args.input)?;
    let mask = NodeMask::full(g.n());
    let carver = Algorithm::from(args.algo).carver(args.black_box.into());
    let c = carver.carve(&g, &mask, args.eps, args.seed)?;
    if !args.no_verify {
        check(verify_strong_carving(&g, &mask, &c, args.eps, c.diameter_bound))?;
    }
    write(&args.out, &to_json(&CarvingJson::new(&g, &mask, &c, args.eps)))?;
    write_ledger(args.ledger.as_deref(), &c.ledger)
}

fn decompose_cmd(args: DecomposeArgs) -> CliResult {
    let g = read_graph(&args.input)?;
    let carver = Algorithm::from(args.eps_impl).carver(args.black_box.into());
    let (d, ledger) = decompose(&g, args.seed, carver.as_ref())?;
    if !args.no_verify {
        check(verify_decomposition(&g, &d, color_bound(g.n()), d.diameter_bound))?;
    }
    write(&args.out, &to_json(&DecompositionJson::new(&g, &d, &ledger)))?;
    write_ledger(args.ledger.as_deref(), &ledger)
}

fn verify(args: VerifyArgs) -> CliResult {
    let g = read_graph(&args.input)?;
    let text = read(&args.clustering)?;
    let parse_err = |e: netdecomp::Error| Failure::Io(format!("{}: {e}", args.clustering.display()));
    let violations = match args.mode {
        VerifyMode::Decomposition => {
            let d = from_json::<DecompositionJson>(&text).map_err(parse_err)?.into_decomposition();
            let c_bound = args.c_bound.unwrap_or_else(|| color_bound(g.n()));
            let d_bound = args.d_bound.unwrap_or(d.diameter_bound);
            verify_decomposition(&g, &d, c_bound, d_bound)
        }
        VerifyMode::Carving => {
            let json = from_json::<CarvingJson>(&text).map_err(parse_err)?;
            let eps = args.eps.unwrap_or(json.stats.eps);
            let c = json.into_carving(&g);
            let d_bound = args.d_bound.unwrap_or(c.diameter_bound);
            verify_strong_carving(&g, &NodeMask::full(g.n()), &c, eps, d_bound)
        }
    };
    check(violations)?;
    println!("ok");
    Ok(())
}

fn bench_cmd(args: BenchArgs) -> CliResult {
    let family: Family = args.family.parse()?;
    let config = SweepConfig {
        family,
        sizes: args.sizes,
        trials: args.trials,
        seed: args.seed,
        algorithm: args.algo.into(),
        black_box: args.black_box.into(),
        avg_degree: args.avg_degree,
        wall_time: !args.no_wall_time,
    };
    let records = bench::sweep(&config)?;
    let file = fs::File::create(&args.csv).map_err(|e| Failure::Io(format!("{}: {e}", args.csv.display())))?;
    bench::write_csv(&records, file).map_err(|e| Failure::Io(format!("{}: {e}", args.csv.display())))
}

fn configure_threads() -> CliResult {
    let Ok(value) = std::env::var("NETDECOMP_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| Failure::Usage(format!("NETDECOMP_THREADS must be a positive integer, got {value:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::Io(e.to_string()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = configure_threads().and_then(|()| match cli.command {
        Command::Gen(a) => gen(a),
        Command::Carve(a) => carve(a),
        Command::Decompose(a) => decompose_cmd(a),
        Command::Verify(a) => verify(a),
        Command::Bench(a) => bench_cmd(a),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Violations(v)) => {
            println!("{}", serde_json::to_string_pretty(&v).expect("violations serialize"));
            eprintln!("{} violation(s)", v.len());
            ExitCode::from(3)
        }
    }
}
