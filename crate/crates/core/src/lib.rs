//! Generalized quadratic assignment problem (GQAP) toolkit.
//!
//! - [`instance`]: problem data, text format and seeded generation
//! - [`evaluation`]: solution cost, loads, unfitness
//! - [`ga`]: steady-state genetic algorithm with capacity repair
//! - [`local_search`]: steepest descent over reassign/exchange moves
//! - [`exact`]: exhaustive optimum and linearized MILP export

pub mod evaluation;
pub mod exact;
pub mod ga;
pub mod instance;
pub mod local_search;
pub mod matrix;

pub use evaluation::{
    evaluate, location_loads, percent_deviation, total_cost, unfitness_of, Assignment,
    EvalError, EvaluatedAssignment,
};
pub use instance::{GqapInstance, InstanceError};
pub use matrix::Matrix;
