use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use toric_dual::polyfile::parse_polytope;
use toric_dual::polytope::LatticePolytope;
use toric_dual::report::DualDegreeReport;
use toric_dual::surface::surface_dual_degree;
use toric_dual::sweep::{run_sweep, with_thread_cap, OutputFormat, SweepConfig, SweepMode};
use toric_dual::threefold::threefold_dual_degree;
use toric_dual::wps::{defectivity_and_conjecture_scan, format_table, wps_report, wps_table, TableFilter, Weights};
use toric_dual::{Error, Result};

#[derive(Parser)]
#[command(name = "toric-dual", version, about = "Dual degrees and Euler obstructions of toric surfaces and 3-folds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report for a lattice polygon or a weighted projective plane.
    Surface(Source<3>),
    /// Report for a lattice 3-polytope or a weighted projective 3-space.
    Threefold(Source<4>),
    /// Euler obstruction table of P(1, k, m, n) for k <= m <= n <= max.
    Table {
        #[arg(long)]
        max: u64,
        #[arg(long, conflicts_with = "non_isolated")]
        isolated: bool,
        #[arg(long)]
        non_isolated: bool,
    },
    /// Defective members of P(1, k, m, n) and cone patterns, as JSON.
    Scan {
        #[arg(long)]
        max: u64,
    },
    /// Batch run over a weighted family or a list of polytope files.
    Sweep {
        #[arg(value_enum)]
        mode: Mode,
        /// Polytope files, for `files` mode.
        files: Vec<PathBuf>,
        #[arg(long, default_value_t = 10)]
        max: u64,
        #[arg(long, value_enum, default_value_t = Filter::All)]
        filter: Filter,
        #[arg(long)]
        json: bool,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Source<const N: usize> {
    /// Polytope file: a `dim n` line followed by one point per line.
    #[arg(required_unless_present = "wps", conflicts_with = "wps")]
    file: Option<PathBuf>,
    /// Weights of a weighted projective space.
    #[arg(long, num_args = N, value_name = "Q")]
    wps: Option<Vec<u64>>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Surfaces,
    Threefolds,
    Files,
}

#[derive(Clone, Copy, ValueEnum)]
enum Filter {
    All,
    Isolated,
    NonIsolated,
}

impl From<Filter> for TableFilter {
    fn from(f: Filter) -> Self {
        match f {
            Filter::All => TableFilter::All,
            Filter::Isolated => TableFilter::Isolated,
            Filter::NonIsolated => TableFilter::NonIsolated,
        }
    }
}

fn read_polytope(path: &PathBuf, dim: usize) -> Result<LatticePolytope> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("{}: {e}", path.display()),
    })?;
    let p = parse_polytope(&text)?;
    if p.dim() != dim {
        return Err(Error::WrongDimension {
            expected: dim,
            actual: p.dim(),
        });
    }
    Ok(p)
}

fn source_report<const N: usize>(src: &Source<N>, dim: usize) -> Result<DualDegreeReport> {
    match (&src.file, &src.wps) {
        (_, Some(q)) => Ok(wps_report(&Weights::new(q.clone())?)?.report),
        (Some(path), None) => {
            let p = read_polytope(path, dim)?;
            if dim == 2 {
                surface_dual_degree(&p)
            } else {
                threefold_dual_degree(&p)
            }
        }
        (None, None) => unreachable!("clap requires a source"),
    }
}

fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Surface(src) => Ok(source_report(&src, 2)?.to_json() + "\n"),
        Command::Threefold(src) => Ok(source_report(&src, 3)?.to_json() + "\n"),
        Command::Table {
            max,
            isolated,
            non_isolated,
        } => {
            let filter = match (isolated, non_isolated) {
                (true, _) => TableFilter::Isolated,
                (_, true) => TableFilter::NonIsolated,
                _ => TableFilter::All,
            };
            Ok(format_table(&with_thread_cap(|| wps_table(max, filter))?))
        }
        Command::Scan { max } => Ok(with_thread_cap(|| defectivity_and_conjecture_scan(max))?.to_json() + "\n"),
        Command::Sweep {
            mode,
            files,
            max,
            filter,
            json,
            output,
        } => {
            let mode = match mode {
                Mode::Surfaces => SweepMode::SurfaceWps,
                Mode::Threefolds => SweepMode::ThreefoldWps,
                Mode::Files => SweepMode::PolytopeFiles(files),
            };
            let config = SweepConfig {
                mode,
                max,
                filter: filter.into(),
                format: if json { OutputFormat::Json } else { OutputFormat::Tsv },
                output,
            };
            Ok(run_sweep(&config)?.unwrap_or_default())
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("error")).init();
    match run(Cli::parse()) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::OracleMismatch(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
