//! Steady-state genetic algorithm with repair.
//!
//! One run proceeds as follows:
//!
//! 1. Draw `n_pop` random solutions and evaluate them.
//! 2. Record the best feasible member (or the sentinel cost if none).
//! 3. Loop until `max_iter` passes or `max_k` consecutive non-duplicate
//!    children without improvement:
//!    select two parents by binary tournament, apply one-point crossover,
//!    pairwise-exchange mutation and capacity repair, then offer the child
//!    to the population.
//!
//! All randomness comes from one ChaCha8 stream seeded with
//! [`GaParams::seed`]. Draw order: initialization (member by member,
//! machine by machine); then per pass: first tournament (2 indices), second
//! tournament attempts (2 indices each), crossover cut, crossover
//! orientation, mutation positions `j1` then `j2`, and one draw per overused
//! location during repair.

mod operators;
mod population;

pub use operators::{
    crossover_at, draw_pair, hold_tournament, one_point_crossover, repair_unfit, repair_with,
    replace_into, swap_at, swap_mutation, tournament_pair, tournament_pair_with, Replacement,
};
pub use population::{best_of, init_population, Population};

use crate::evaluation::{evaluate_unchecked, Assignment};
use crate::instance::GqapInstance;
use population::best_index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};
use thiserror::Error;

pub const DEFAULT_MAX_ITER: u64 = 100_000;
pub const DEFAULT_SENTINEL: f64 = 9_999_999.0;
pub const DEFAULT_RETRY_CAP: usize = 50;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GaError {
    #[error("invalid parameter: {0}")]
    Params(String),
    #[error("crossover and mutation need at least 2 machines, got {0}")]
    TooFewMachines(usize),
    #[error("parents have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct GaParams {
    /// Population size.
    pub n_pop: usize,
    /// Stop after this many consecutive non-duplicate children without a
    /// strict improvement of the best cost.
    pub max_k: u64,
    /// Hard cap on loop passes.
    pub max_iter: u64,
    pub seed: u64,
    /// Cost reported while no feasible solution has been seen.
    pub sentinel_fitness: f64,
    /// Attempts allowed for the second tournament to find a distinct parent.
    pub tournament_retry_cap: usize,
}

impl GaParams {
    pub fn new(n_pop: usize, max_k: u64, seed: u64) -> Self {
        Self {
            n_pop,
            max_k,
            max_iter: DEFAULT_MAX_ITER,
            seed,
            sentinel_fitness: DEFAULT_SENTINEL,
            tournament_retry_cap: DEFAULT_RETRY_CAP,
        }
    }

    pub fn validate(&self) -> Result<(), GaError> {
        let bad = |msg: &str| Err(GaError::Params(msg.to_string()));
        if self.n_pop < 2 {
            return bad("n_pop must be at least 2");
        }
        if self.max_k < 1 {
            return bad("max_k must be at least 1");
        }
        if self.max_iter < 1 {
            return bad("max_iter must be at least 1");
        }
        if !(self.sentinel_fitness > 0.0) {
            return bad("sentinel_fitness must be positive");
        }
        if self.tournament_retry_cap < 1 {
            return bad("tournament_retry_cap must be at least 1");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopReason {
    IterCap,
    Stall,
}

#[derive(Debug, Clone)]
pub struct GaResult {
    pub best_assignment: Assignment,
    /// Best feasible cost, or the sentinel when none was found.
    pub z_best: f64,
    pub feasible: bool,
    pub iterations_run: u64,
    pub k_at_stop: u64,
    pub stop_reason: StopReason,
    /// `(iteration, z_best)` at initialization and at every strict improvement.
    pub improvement_trace: Vec<(u64, f64)>,
    pub elapsed: Duration,
}

impl GaResult {
    /// Equality on everything except wall time.
    pub fn same_outcome(&self, other: &GaResult) -> bool {
        self.best_assignment == other.best_assignment
            && self.z_best == other.z_best
            && self.feasible == other.feasible
            && self.iterations_run == other.iterations_run
            && self.k_at_stop == other.k_at_stop
            && self.stop_reason == other.stop_reason
            && self.improvement_trace == other.improvement_trace
    }
}

/// Runs the genetic algorithm on `inst`.
///
/// Requires at least two machines, since crossover and mutation are
/// undefined otherwise.
pub fn run_ga(inst: &GqapInstance, params: &GaParams) -> Result<GaResult, GaError> {
    params.validate()?;
    let m = inst.machine_count();
    if m < 2 {
        return Err(GaError::TooFewMachines(m));
    }
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);

    let mut pop = init_population(inst, params.n_pop, &mut rng);
    let (idx, cost) = best_index(&pop);
    let mut best = pop.members()[idx].assignment.clone();
    let mut z_best = cost;
    let mut trace = vec![(0, z_best.unwrap_or(params.sentinel_fitness))];

    let mut iteration: u64 = 0;
    let mut k_iter: u64 = 0;
    while iteration < params.max_iter && k_iter < params.max_k {
        iteration += 1;

        let Some((p1, p2)) = tournament_pair(&pop, params.tournament_retry_cap, &mut rng) else {
            continue;
        };
        let child = one_point_crossover(&p1, &p2, &mut rng)?;
        let (child, _) = swap_mutation(&child, &mut rng)?;
        let child = repair_unfit(inst, &child, &mut rng);
        let child = evaluate_unchecked(inst, child);

        if replace_into(&mut pop, child) == Replacement::Duplicate {
            continue;
        }

        let (idx, cost) = best_index(&pop);
        let improved = match (cost, z_best) {
            (Some(c), Some(z)) => c < z,
            (Some(_), None) => true,
            (None, _) => false,
        };
        if improved {
            best = pop.members()[idx].assignment.clone();
            z_best = cost;
            trace.push((iteration, cost.unwrap_or(params.sentinel_fitness)));
            k_iter = 0;
        } else {
            if z_best.is_none() {
                best = pop.members()[idx].assignment.clone();
            }
            k_iter += 1;
        }
    }

    Ok(GaResult {
        best_assignment: best,
        z_best: z_best.unwrap_or(params.sentinel_fitness),
        feasible: z_best.is_some(),
        iterations_run: iteration,
        k_at_stop: k_iter,
        stop_reason: if k_iter >= params.max_k {
            StopReason::Stall
        } else {
            StopReason::IterCap
        },
        improvement_trace: trace,
        elapsed: start.elapsed(),
    })
}
