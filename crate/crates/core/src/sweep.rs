//! Batch computations over families of weighted projective spaces or lists of
//! polytope files. Work is spread over a thread pool; rows come out in input
//! order whatever the scheduling.

use std::path::PathBuf;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyfile::parse_polytope;
use crate::report::{int, ints};
use crate::surface::surface_dual_degree;
use crate::threefold::threefold_dual_degree;
use crate::wps::{reduced_triples, wps_report, TableFilter, Weights};

/// Environment variable capping the number of worker threads.
pub const THREADS_VAR: &str = "TORIC_DUAL_THREADS";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SweepMode {
    /// `P(k, m, n)` for pairwise coprime `k <= m <= n <= max`.
    SurfaceWps,
    /// `P(1, k, m, n)` for `k <= m <= n <= max` with `gcd(k, m, n) = 1`.
    ThreefoldWps,
    /// The listed polytope files.
    PolytopeFiles(Vec<PathBuf>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Tsv,
    Json,
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub mode: SweepMode,
    pub max: u64,
    pub filter: TableFilter,
    pub format: OutputFormat,
    pub output: Option<PathBuf>,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max == 0 {
            return Err(Error::InvalidWeights("sweep bound must be at least 1".into()));
        }
        if let SweepMode::PolytopeFiles(files) = &self.mode {
            if files.is_empty() {
                return Err(Error::InvalidWeights("no polytope files given".into()));
            }
        }
        Ok(())
    }
}

/// One result of a sweep.
#[derive(Clone, Debug, Serialize)]
pub struct SweepRow {
    pub input: String,
    #[serde(serialize_with = "int")]
    pub degree: BigInt,
    pub defective: bool,
    #[serde(serialize_with = "ints")]
    pub vertex_eu: Vec<BigInt>,
}

impl SweepRow {
    fn to_line(&self) -> String {
        let eu: Vec<String> = self.vertex_eu.iter().map(|e| e.to_string()).collect();
        format!("{} {} {} {}", self.input, self.degree, u8::from(self.defective), eu.join(" "))
    }
}

/// Runs `f` on a pool sized by [`THREADS_VAR`] when it is set.
pub fn with_thread_cap<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    let cap = std::env::var(THREADS_VAR).ok().and_then(|v| v.parse::<usize>().ok());
    match cap.and_then(|n| rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build().ok()) {
        Some(pool) => pool.install(f),
        None => f(),
    }
}

fn weights_row(w: Weights, label: String) -> Result<SweepRow> {
    let r = wps_report(&w)?;
    Ok(SweepRow {
        input: label,
        degree: r.degree,
        defective: r.defective,
        vertex_eu: r.vertex_eu,
    })
}

fn pairwise_coprime(t: &[u64; 3]) -> bool {
    use num_integer::Integer;
    t[0].gcd(&t[1]) == 1 && t[0].gcd(&t[2]) == 1 && t[1].gcd(&t[2]) == 1
}

/// Computes every row of the sweep.
pub fn sweep_rows(config: &SweepConfig) -> Result<Vec<SweepRow>> {
    config.validate()?;
    with_thread_cap(|| match &config.mode {
        SweepMode::SurfaceWps => reduced_triples(config.max)
            .into_iter()
            .filter(pairwise_coprime)
            .collect::<Vec<_>>()
            .par_iter()
            .map(|t| weights_row(Weights::new(t.to_vec())?, format!("{} {} {}", t[0], t[1], t[2])))
            .collect(),
        SweepMode::ThreefoldWps => reduced_triples(config.max)
            .into_iter()
            .filter(|t| match config.filter {
                TableFilter::All => true,
                TableFilter::Isolated => pairwise_coprime(t),
                TableFilter::NonIsolated => !pairwise_coprime(t),
            })
            .collect::<Vec<_>>()
            .par_iter()
            .map(|t| weights_row(Weights::new(vec![1, t[0], t[1], t[2]])?, format!("1 {} {} {}", t[0], t[1], t[2])))
            .collect(),
        SweepMode::PolytopeFiles(files) => files
            .par_iter()
            .map(|path| {
                let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
                    line: 0,
                    msg: format!("{}: {e}", path.display()),
                })?;
                let p = parse_polytope(&text)?;
                let r = match p.dim() {
                    2 => surface_dual_degree(&p)?,
                    3 => threefold_dual_degree(&p)?,
                    d => {
                        return Err(Error::WrongDimension {
                            expected: 3,
                            actual: d,
                        })
                    }
                };
                Ok(SweepRow {
                    input: path.display().to_string(),
                    vertex_eu: r.faces_of_dim(0).map(|f| f.eu.clone()).collect(),
                    degree: r.degree,
                    defective: r.defective,
                })
            })
            .collect(),
    })
}

/// Formats rows as space-separated lines (`input degree defective Eu...`) or a JSON array.
pub fn format_rows(rows: &[SweepRow], format: OutputFormat) -> String {
    match format {
        OutputFormat::Tsv => rows.iter().map(|r| r.to_line() + "\n").collect(),
        OutputFormat::Json => serde_json::to_string_pretty(rows).expect("rows serialize") + "\n",
    }
}

/// Runs the sweep and writes the formatted result to the configured path, or
/// returns it when no path is set.
pub fn run_sweep(config: &SweepConfig) -> Result<Option<String>> {
    let text = format_rows(&sweep_rows(config)?, config.format);
    match &config.output {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Error::Parse {
                line: 0,
                msg: format!("{}: {e}", path.display()),
            })?;
            Ok(None)
        }
        None => Ok(Some(text)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(mode: SweepMode, max: u64) -> SweepConfig {
        SweepConfig {
            mode,
            max,
            filter: TableFilter::All,
            format: OutputFormat::Tsv,
            output: None,
        }
    }

    #[test]
    fn surface_sweep_is_ordered() {
        let text = run_sweep(&config(SweepMode::SurfaceWps, 3)).unwrap().unwrap();
        assert_eq!(text, "1 1 1 0 1 1 1 1\n1 1 2 0 1 1 1 0\n1 1 3 0 1 1 1 -1\n1 2 3 7 0 1 0 0\n");
    }

    #[test]
    fn thread_cap_gives_identical_output() {
        let c = config(SweepMode::ThreefoldWps, 4);
        let free = run_sweep(&c).unwrap();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let single = pool.install(|| run_sweep(&c).unwrap());
        assert_eq!(free, single);
    }

    #[test]
    fn invalid_configs() {
        assert!(config(SweepMode::SurfaceWps, 0).validate().is_err());
        assert!(config(SweepMode::PolytopeFiles(vec![]), 3).validate().is_err());
    }
}
