use crate::record::{write_csv, CsvRow, RunRecord};
use crate::BenchError;
use gqap_core::exact::{
    brute_force_optimum, model_statistics, write_lp, ExactResult, LpOptions, ModelStats,
};
use gqap_core::ga::{run_ga, GaParams};
use gqap_core::instance::{generate_random_instance, parse_instance, serialize_instance, GenRanges};
use gqap_core::local_search::steepest_descent;
use gqap_core::{percent_deviation, Assignment, GqapInstance};
use std::fs;
use std::path::Path;
use std::time::Instant;

/// Reads and parses an instance file, naming it after the file stem.
pub fn load_instance(path: &Path) -> Result<GqapInstance, BenchError> {
    let text = fs::read_to_string(path).map_err(|source| BenchError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    parse_instance(&text)
        .map(|inst| inst.with_name(name))
        .map_err(|source| BenchError::Parse {
            path: path.to_path_buf(),
            source,
        })
}

pub(crate) fn write_file(path: &Path, contents: &[u8]) -> Result<(), BenchError> {
    fs::write(path, contents).map_err(|source| BenchError::Io {
        path: path.to_path_buf(),
        source,
    })
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub n_pop: usize,
    pub max_k: u64,
    pub max_iter: u64,
    pub seed: u64,
    pub local_search: bool,
    pub z_reference: Option<f64>,
}

/// GA followed by steepest descent on the GA's best feasible solution.
pub fn solve_instance(
    inst: &GqapInstance,
    opts: &SolveOptions,
    replicate: u32,
) -> Result<RunRecord, BenchError> {
    if let Some(z) = opts.z_reference {
        percent_deviation(z, z)?;
    }
    let start = Instant::now();
    let mut params = GaParams::new(opts.n_pop, opts.max_k, opts.seed);
    params.max_iter = opts.max_iter;
    let ga = run_ga(inst, &params)?;

    let (best, z_after) = if ga.feasible && opts.local_search {
        steepest_descent(inst, &ga.best_assignment)?
    } else {
        (ga.best_assignment.clone(), ga.z_best)
    };
    let percent_dev = match opts.z_reference {
        Some(z_ref) if ga.feasible => Some(percent_deviation(z_after, z_ref)?),
        _ => None,
    };
    Ok(RunRecord {
        instance_name: inst.name().to_string(),
        n_pop: opts.n_pop,
        max_k: opts.max_k,
        replicate,
        seed: opts.seed,
        elapsed_seconds: start.elapsed().as_secs_f64(),
        z_best_ga: ga.z_best,
        z_best_after_ls: z_after,
        best_assignment: best,
        feasible: ga.feasible,
        z_reference: opts.z_reference,
        percent_dev,
        iterations_run: ga.iterations_run,
    })
}

/// `solve`: one run, optionally written as a one-row CSV.
pub fn cmd_solve(
    instance_path: &Path,
    opts: &SolveOptions,
    output: Option<&Path>,
) -> Result<RunRecord, BenchError> {
    let inst = load_instance(instance_path)?;
    let record = solve_instance(&inst, opts, 1)?;
    if let Some(path) = output {
        let mut buf = Vec::new();
        write_csv(&mut buf, &[CsvRow::data(record.clone())])?;
        write_file(path, &buf)?;
    }
    Ok(record)
}

pub fn solve_summary(r: &RunRecord) -> String {
    let status = if r.feasible { "feasible" } else { "no feasible solution" };
    let mut out = format!(
        "instance {} n_pop={} max_k={} seed={}\n  status: {status}\n  z_best (GA): {}\n  z_best (after local search): {}\n  best assignment: {}\n  GA iterations: {}\n  time: {:.3} s\n",
        r.instance_name,
        r.n_pop,
        r.max_k,
        r.seed,
        r.z_best_ga,
        r.z_best_after_ls,
        cop_form(&r.best_assignment),
        r.iterations_run,
        r.elapsed_seconds,
    );
    if let (Some(z_ref), Some(d)) = (r.z_reference, r.percent_dev) {
        out.push_str(&format!("  deviation from {z_ref}: {d:.2}%\n"));
    }
    out
}

/// `(3, 1, 4, 2, 1, 1)`
pub fn cop_form(s: &Assignment) -> String {
    let parts: Vec<String> = s.one_based().iter().map(|k| k.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// `x_13 = x_21 = ... = 1`; indices are comma-separated when any exceeds 9.
pub fn x_form(s: &Assignment) -> String {
    let slots = s.one_based();
    let compact = slots.len() < 10 && slots.iter().all(|&k| k < 10);
    let parts: Vec<String> = slots
        .iter()
        .enumerate()
        .map(|(i, &k)| {
            if compact {
                format!("x_{}{}", i + 1, k)
            } else {
                format!("x_{},{}", i + 1, k)
            }
        })
        .collect();
    format!("{} = 1", parts.join(" = "))
}

pub fn cmd_exact(instance_path: &Path, limit: u128) -> Result<(ExactResult, String), BenchError> {
    let inst = load_instance(instance_path)?;
    let res = brute_force_optimum(&inst, limit)?;
    let report = format!(
        "optimal solution: {}\n{}\nz = {}\nfeasible assignments: {} of {}\n",
        cop_form(&res.optimum),
        x_form(&res.optimum),
        res.z_opt,
        res.feasible_count,
        res.enumerated
    );
    Ok((res, report))
}

pub fn stats_line(stats: &ModelStats) -> String {
    format!(
        "constraints={} variables={} binaries={}",
        stats.constraints, stats.variables, stats.binaries
    )
}

/// Writes the linearized model and returns the full model's statistics.
pub fn cmd_export_lp(
    instance_path: &Path,
    output: &Path,
    counting_mode: bool,
) -> Result<ModelStats, BenchError> {
    let inst = load_instance(instance_path)?;
    let lp = write_lp(&inst, LpOptions { counting_mode });
    write_file(output, lp.as_bytes())?;
    Ok(model_statistics(
        inst.machine_count() as u64,
        inst.location_count() as u64,
    ))
}

/// Generates an instance and returns its text (with a name comment).
pub fn cmd_gen(machines: usize, locations: usize, seed: u64) -> Result<String, BenchError> {
    let inst = generate_random_instance(machines, locations, seed, &GenRanges::default())?;
    Ok(format!("# {}\n{}", inst.name(), serialize_instance(&inst)))
}
