use anyhow::Result;
use clap::{Args, Parser, Subcommand};
use gqap_bench::commands::{solve_summary, stats_line};
use gqap_bench::{cmd_doe, cmd_exact, cmd_export_lp, cmd_gen, cmd_solve, DoeGrid, SolveOptions};
use gqap_core::exact::DEFAULT_LIMIT;
use gqap_core::ga::DEFAULT_MAX_ITER;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "gqap", version, about = "Generalized quadratic assignment benchmark tools")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the genetic algorithm (plus local search) once.
    Solve(SolveArgs),
    /// Enumerate all assignments of a small instance.
    Exact {
        #[arg(long)]
        instance: PathBuf,
        /// Refuse instances whose N^M exceeds this.
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: u128,
    },
    /// Write the linearized model in LP format.
    ExportLp {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        output: PathBuf,
        /// Keep zero-cost linearization columns and rows.
        #[arg(long)]
        counting: bool,
    },
    /// Generate a random feasible instance.
    Gen {
        #[arg(long)]
        machines: usize,
        #[arg(long)]
        locations: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Replicated population-size x stall-limit study.
    Doe(DoeArgs),
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    instance: PathBuf,
    #[arg(long, default_value_t = 10)]
    n_pop: usize,
    #[arg(long, default_value_t = 100)]
    max_k: u64,
    #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
    max_iter: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    no_local_search: bool,
    /// Reference cost for the percent deviation.
    #[arg(long)]
    z_ref: Option<f64>,
    /// Also write the run as a one-row CSV.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct DoeArgs {
    #[arg(long)]
    instance: PathBuf,
    #[arg(long, value_delimiter = ',', default_value = "5,10,15")]
    n_pop_levels: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "10,40,70")]
    max_k_levels: Vec<u64>,
    #[arg(long, default_value_t = 3)]
    replicates: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
    max_iter: u64,
    #[arg(long)]
    z_ref: Option<f64>,
    /// CSV destination; printed to stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Solve(a) => {
            let opts = SolveOptions {
                n_pop: a.n_pop,
                max_k: a.max_k,
                max_iter: a.max_iter,
                seed: a.seed,
                local_search: !a.no_local_search,
                z_reference: a.z_ref,
            };
            let record = cmd_solve(&a.instance, &opts, a.output.as_deref())?;
            print!("{}", solve_summary(&record));
        }
        Command::Exact { instance, limit } => {
            let (_, report) = cmd_exact(&instance, limit)?;
            print!("{report}");
        }
        Command::ExportLp {
            instance,
            output,
            counting,
        } => {
            let stats = cmd_export_lp(&instance, &output, counting)?;
            println!("{}", stats_line(&stats));
        }
        Command::Gen {
            machines,
            locations,
            seed,
            output,
        } => {
            let text = cmd_gen(machines, locations, seed)?;
            match output {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))?,
                None => print!("{text}"),
            }
        }
        Command::Doe(a) => {
            let grid = DoeGrid {
                n_pop_levels: a.n_pop_levels,
                max_k_levels: a.max_k_levels,
                replicates: a.replicates,
                base_seed: a.seed,
            };
            let (rows, csv) =
                cmd_doe(&a.instance, &grid, a.max_iter, a.z_ref, a.output.as_deref())?;
            match a.output {
                Some(path) => println!("wrote {} rows to {}", rows.len(), path.display()),
                None => print!("{csv}"),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
