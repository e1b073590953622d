//! Thin command-line front end over the sidonlab library.
//!
//! Exit codes: 0 all checks passed, 1 an assertion failed, 2 unusable
//! input (bad flags or unparseable files), 3 a resource guard tripped.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sidonlab::cayley::CayleyGraph;
use sidonlab::constructions::{self, Dim11Variant};
use sidonlab::corpus;
use sidonlab::error::Error;
use sidonlab::format;
use sidonlab::report::{self, Assertion};

#[derive(Parser)]
#[command(name = "sidonlab", version, about = "Sidon sets in F_2^n: construct, verify, analyze, export")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a set from one of the known families and write it to a file.
    Construct(ConstructArgs),
    /// Run the verification battery on a point-set file, emit a JSON report.
    Verify(VerifyArgs),
    /// Spectrum and export of the gamma Cayley graph of a point set.
    Cayley(CayleyArgs),
    /// Lower-bound table for odd n, optionally with halving witnesses.
    Bounds(BoundsArgs),
    /// Randomized search for cover/graph equivalence counterexamples.
    Scan(ScanArgs),
}

#[derive(Args)]
struct ConstructArgs {
    #[command(subcommand)]
    kind: ConstructKind,
}

#[derive(Subcommand)]
enum ConstructKind {
    /// The n+1 affinely independent points {0, e_1, ..., e_n}.
    Affind {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Multiplicative subgroup of order gcd(2^j + 1, 2^n - 1) in GF(2^n).
    Subgroup {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        j: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Sum-free subgroup of order gcd(d - 2^j, 2^n - 1) from an APN power map.
    CarletPicek {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        d: u64,
        #[arg(long)]
        j: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Graph {(x, x^d)} of a power map over GF(2^m), inside F_2^{2m}.
    ApnGraph {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 3)]
        d: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// The 24-point one-cover in F_2^11.
    Dim11 {
        #[arg(long, value_enum, default_value_t = VariantArg::Listed)]
        variant: VariantArg,
        #[arg(long)]
        out: PathBuf,
    },
    /// Halve a Sidon set into one dimension lower along its best hyperplane.
    Halving {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Listed,
    Roots23,
}

#[derive(Args)]
struct VerifyArgs {
    /// Point-set file (text or JSON).
    input: PathBuf,
    /// Assertions: sidon, maximal, separable, bent-gamma, kcover=K,
    /// linearity=L, affine-dim=D, srg=v,k,lambda,mu. Repeatable.
    #[arg(long = "assert", value_name = "CHECK")]
    assertions: Vec<String>,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CayleyArgs {
    /// Point-set file (text or JSON).
    input: PathBuf,
    /// Print the eigenvalue spectrum as value:multiplicity pairs.
    #[arg(long)]
    spectrum: bool,
    /// Export the graph in this format.
    #[arg(long, value_enum)]
    export: Option<ExportFormat>,
    /// Export sink (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Edgelist,
    Dot,
}

#[derive(Args)]
struct BoundsArgs {
    /// Inclusive odd range, e.g. 5..13, or a single odd value.
    #[arg(long = "odd-n", value_name = "RANGE", default_value = "5..13")]
    odd_n: String,
    /// Construct and verify halving witnesses where the field fits (2n <= 14).
    #[arg(long)]
    witness: bool,
    /// Directory for witness files (default: current directory).
    #[arg(long, default_value = ".")]
    witness_dir: PathBuf,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
    /// Write the table here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct ScanArgs {
    /// Ambient dimension (2..=14).
    #[arg(long)]
    n: usize,
    /// Number of random maximal Sidon sets to classify.
    #[arg(long, default_value_t = 1000)]
    count: u64,
    /// RNG seed; results are a pure function of (n, count, seed).
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads (default: SIDONLAB_THREADS or the machine width).
    #[arg(long)]
    threads: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Parse(_) | Error::InvalidArgument(_) => 2,
                Error::SizeGuard(_) => 3,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> sidonlab::Result<ExitCode> {
    match cli.command {
        Command::Construct(args) => construct(args),
        Command::Verify(args) => verify(args),
        Command::Cayley(args) => cayley_cmd(args),
        Command::Bounds(args) => bounds(args),
        Command::Scan(args) => scan(args),
    }
}

fn construct(args: ConstructArgs) -> sidonlab::Result<ExitCode> {
    let (set, out) = match args.kind {
        ConstructKind::Affind { n, out } => {
            if n == 0 || n > sidonlab::pointset::MAX_DIM {
                return Err(Error::InvalidArgument("need 1 <= n <= 22".into()));
            }
            (constructions::affinely_independent_set(n), out)
        }
        ConstructKind::Subgroup { n, j, out } => (constructions::subgroup_sidon(n, j)?, out),
        ConstructKind::CarletPicek { n, d, j, out } => {
            (constructions::carlet_picek_set(n, d, j)?, out)
        }
        ConstructKind::ApnGraph { m, d, out } => {
            let g = constructions::apn_power_graph(m, d)?;
            println!("sidon: {}", g.sidon);
            (g.set, out)
        }
        ConstructKind::Dim11 { variant, out } => {
            let v = match variant {
                VariantArg::Listed => Dim11Variant::Listed,
                VariantArg::Roots23 => Dim11Variant::Roots23,
            };
            (constructions::dim11_one_cover(v), out)
        }
        ConstructKind::Halving { input, out } => {
            let s = format::read_point_set(&input)?;
            (constructions::halving(&s)?, out)
        }
    };
    format::save_point_set(&out, &set)?;
    println!("size: {}", set.len());
    println!("dim: {}", set.dim());
    println!("wrote: {}", out.display());
    Ok(ExitCode::SUCCESS)
}

fn verify(args: VerifyArgs) -> sidonlab::Result<ExitCode> {
    let set = format::read_point_set(&args.input)?;
    let assertions: Vec<Assertion> = args
        .assertions
        .iter()
        .map(|a| a.parse())
        .collect::<sidonlab::Result<_>>()?;
    let mut rep = report::verify_point_set(&set, &args.input.display().to_string());
    let outcomes: Vec<_> = assertions.iter().map(|a| a.check(&rep)).collect();
    let all_passed = outcomes.iter().all(|o| o.passed);
    rep.assertions = outcomes;
    let json = serde_json::to_string_pretty(&rep).expect("reports serialize");
    match args.out {
        Some(path) => std::fs::write(path, json + "\n")?,
        None => println!("{json}"),
    }
    for o in &rep.assertions {
        eprintln!(
            "assert {}: {} ({})",
            o.assertion,
            if o.passed { "ok" } else { "FAILED" },
            o.detail
        );
    }
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cayley_cmd(args: CayleyArgs) -> sidonlab::Result<ExitCode> {
    let set = format::read_point_set(&args.input)?;
    let graph = CayleyGraph::from_set(&set);
    if args.spectrum || args.export.is_none() {
        let spectrum = graph.spectrum();
        let line: Vec<String> = spectrum
            .iter()
            .rev()
            .map(|(v, m)| format!("{v}:{m}"))
            .collect();
        println!("{}", line.join(" "));
    }
    if let Some(fmt) = args.export {
        let mut sink: Box<dyn Write> = match &args.out {
            Some(path) => Box::new(std::io::BufWriter::new(std::fs::File::create(path)?)),
            None => Box::new(std::io::stdout().lock()),
        };
        match fmt {
            ExportFormat::Edgelist => graph.export_edgelist(&mut sink)?,
            ExportFormat::Dot => graph.export_dot(&mut sink)?,
        }
        sink.flush()?;
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_odd_range(spec: &str) -> sidonlab::Result<Vec<u32>> {
    let parse_one = |s: &str| {
        s.trim()
            .parse::<u32>()
            .map_err(|_| Error::InvalidArgument(format!("bad odd-n value {s:?}")))
    };
    let (lo, hi) = match spec.split_once("..") {
        Some((a, b)) => (parse_one(a)?, parse_one(b)?),
        None => {
            let v = parse_one(spec)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(Error::InvalidArgument("empty odd-n range".into()));
    }
    Ok((lo..=hi).filter(|v| v % 2 == 1).collect())
}

fn bounds(args: BoundsArgs) -> sidonlab::Result<ExitCode> {
    let ns = parse_odd_range(&args.odd_n)?;
    let rows = constructions::bound_table(&ns, args.witness)?;
    let mut witness_files: Vec<Option<String>> = Vec::with_capacity(rows.len());
    for row in &rows {
        match &row.witness {
            Some(w) => {
                let name = format!("witness_n{}_dim{}.set", row.odd_n, row.ambient_dim);
                let path = args.witness_dir.join(&name);
                format::save_point_set(&path, w)?;
                witness_files.push(Some(path.display().to_string()));
            }
            None => witness_files.push(None),
        }
    }
    let table = match args.format {
        TableFormat::Csv => format::bounds_to_csv(&rows, &witness_files),
        TableFormat::Json => format::bounds_to_json(&rows, &witness_files) + "\n",
    };
    match args.out {
        Some(path) => std::fs::write(path, table)?,
        None => print!("{table}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn scan(args: ScanArgs) -> sidonlab::Result<ExitCode> {
    let threads = args.threads.unwrap_or_else(corpus::thread_count_hint);
    let report = corpus::scan_kcover_equivalence(args.n, args.count, args.seed, threads)?;
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("reports serialize")
    );
    if !report.counterexamples.is_empty() {
        eprintln!(
            "found {} equivalence counterexample(s); this would be new",
            report.counterexamples.len()
        );
    }
    Ok(ExitCode::SUCCESS)
}
