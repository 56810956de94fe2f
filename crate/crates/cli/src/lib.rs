//! Benchmark driver: single runs, exact enumeration, LP export, instance
//! generation and the replicated parameter study.

pub mod commands;
pub mod doe;
pub mod record;

pub use commands::{
    cmd_exact, cmd_export_lp, cmd_gen, cmd_solve, load_instance, solve_instance, SolveOptions,
};
pub use doe::{run_doe, DoeGrid};
pub use record::{write_csv, CsvRow, RunRecord};

use gqap_core::evaluation::EvalError;
use gqap_core::exact::ExactError;
use gqap_core::ga::GaError;
use gqap_core::instance::ParseError;
use gqap_core::InstanceError;
use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum BenchError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Ga(#[from] GaError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),
    #[error("invalid design grid: {0}")]
    Grid(String),
}

/// `doe` command: runs the grid and writes the CSV (or returns it as text).
pub fn cmd_doe(
    instance_path: &std::path::Path,
    grid: &DoeGrid,
    max_iter: u64,
    z_reference: Option<f64>,
    output: Option<&std::path::Path>,
) -> Result<(Vec<CsvRow>, String), BenchError> {
    let inst = load_instance(instance_path)?;
    let rows = run_doe(&inst, grid, max_iter, z_reference)?;
    let mut buf = Vec::new();
    write_csv(&mut buf, &rows)?;
    if let Some(path) = output {
        commands::write_file(path, &buf)?;
    }
    Ok((rows, String::from_utf8(buf).expect("csv output is utf-8")))
}
