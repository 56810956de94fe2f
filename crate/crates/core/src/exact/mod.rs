//! Ground truth for small instances: exhaustive search and MILP export.

mod brute_force;
mod lp;

pub use brute_force::{brute_force_optimum, ExactResult, DEFAULT_LIMIT};
pub use lp::{model_statistics, write_lp, LpOptions, ModelStats};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error(
        "search space {locations}^{machines} = {} exceeds the enumeration limit {limit}",
        if *size == u128::MAX { "more than 2^128".to_string() } else { size.to_string() }
    )]
    TooLarge {
        machines: usize,
        locations: usize,
        size: u128,
        limit: u128,
    },
    #[error("no assignment satisfies the capacity constraints")]
    Infeasible,
}
