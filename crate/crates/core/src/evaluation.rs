//! Solution representation and whole-solution evaluation.
//!
//! A solution is a sequence `S` with one entry per machine naming the
//! location it occupies. Its fitness is the total cost
//!
//! ```text
//! TC(S) = sum_i a[i][S(i)] + unit_cost * sum_i sum_{j != i} f[i][j] * d[S(i)][S(j)]
//! ```
//!
//! where both ordered pairs `(i, j)` and `(j, i)` contribute, and its
//! unfitness is the total capacity overuse `sum_k max(0, load_k - c_k)`.
//! Unfitness is zero exactly when the solution is feasible.
//!
//! Locations are stored 0-based; [`Assignment`] displays and parses the
//! 1-based form used in reports (`3 1 4 2 1 1`).

use crate::instance::GqapInstance;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("assignment has {got} entries but the instance has {want} machines")]
    Length { got: usize, want: usize },
    #[error("machine {machine} is assigned to location {location}, outside 1..={locations}")]
    Location {
        machine: usize,
        location: usize,
        locations: usize,
    },
    #[error("reference value must be positive, got {0}")]
    NonPositiveReference(f64),
    #[error("cannot parse assignment: {0}")]
    Parse(String),
}

/// Machine-to-location map. Entry `i` is the 0-based location of machine `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assignment(Vec<usize>);

impl Assignment {
    pub fn new(slots: Vec<usize>) -> Self {
        Self(slots)
    }

    /// Builds from 1-based location numbers, as written in reports.
    pub fn from_one_based(slots: &[usize]) -> Result<Self, EvalError> {
        slots
            .iter()
            .enumerate()
            .map(|(i, &k)| {
                k.checked_sub(1).ok_or(EvalError::Location {
                    machine: i + 1,
                    location: 0,
                    locations: usize::MAX,
                })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Self)
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|k| k + 1).collect()
    }

    #[inline]
    pub fn slots(&self) -> &[usize] {
        &self.0
    }

    #[inline]
    pub fn slots_mut(&mut self) -> &mut [usize] {
        &mut self.0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Checks length and location range against `inst`.
    pub fn validate(&self, inst: &GqapInstance) -> Result<(), EvalError> {
        let want = inst.machine_count();
        if self.0.len() != want {
            return Err(EvalError::Length {
                got: self.0.len(),
                want,
            });
        }
        let n = inst.location_count();
        match self.0.iter().position(|&k| k >= n) {
            Some(i) => Err(EvalError::Location {
                machine: i + 1,
                location: self.0[i] + 1,
                locations: n,
            }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, k) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", k + 1)?;
        }
        Ok(())
    }
}

impl FromStr for Assignment {
    type Err = EvalError;

    /// Parses 1-based locations separated by whitespace and/or commas,
    /// optionally wrapped in parentheses.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let slots = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| EvalError::Parse(t.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_one_based(&slots)
    }
}

/// An assignment together with its fitness, unfitness and per-location loads.
#[derive(Debug, Clone, PartialEq)]
pub struct EvaluatedAssignment {
    pub assignment: Assignment,
    /// Total cost `TC(S)`.
    pub fitness: f64,
    /// Total capacity overuse; zero iff feasible.
    pub unfitness: f64,
    pub loads: Vec<f64>,
}

impl EvaluatedAssignment {
    #[inline]
    pub fn is_feasible(&self) -> bool {
        self.unfitness == 0.0
    }
}

/// Total cost of `s` under `inst`.
pub fn total_cost(inst: &GqapInstance, s: &Assignment) -> Result<f64, EvalError> {
    s.validate(inst)?;
    Ok(cost_unchecked(inst, s.slots()))
}

pub(crate) fn cost_unchecked(inst: &GqapInstance, slots: &[usize]) -> f64 {
    let flow = inst.flow();
    let dist = inst.distance();
    let mut transport = 0.0;
    for (i, &ki) in slots.iter().enumerate() {
        let f_row = flow.row(i);
        let d_row = dist.row(ki);
        for (j, &kj) in slots.iter().enumerate() {
            if j != i {
                transport += f_row[j] * d_row[kj];
            }
        }
    }
    let fixed: f64 = slots
        .iter()
        .enumerate()
        .map(|(i, &k)| inst.assign_cost()[(i, k)])
        .sum();
    fixed + inst.unit_cost() * transport
}

/// Space consumed at each location.
pub fn location_loads(inst: &GqapInstance, s: &Assignment) -> Result<Vec<f64>, EvalError> {
    s.validate(inst)?;
    Ok(loads_unchecked(inst, s.slots()))
}

pub(crate) fn loads_unchecked(inst: &GqapInstance, slots: &[usize]) -> Vec<f64> {
    let mut loads = vec![0.0; inst.location_count()];
    for (&k, &r) in slots.iter().zip(inst.requirement()) {
        loads[k] += r;
    }
    loads
}

pub(crate) fn overuse(loads: &[f64], capacity: &[f64]) -> f64 {
    loads
        .iter()
        .zip(capacity)
        .map(|(l, c)| (l - c).max(0.0))
        .sum()
}

/// Total capacity overuse of `s`.
pub fn unfitness_of(inst: &GqapInstance, s: &Assignment) -> Result<f64, EvalError> {
    let loads = location_loads(inst, s)?;
    Ok(overuse(&loads, inst.capacity()))
}

pub fn evaluate(inst: &GqapInstance, s: &Assignment) -> Result<EvaluatedAssignment, EvalError> {
    s.validate(inst)?;
    Ok(evaluate_unchecked(inst, s.clone()))
}

pub(crate) fn evaluate_unchecked(inst: &GqapInstance, s: Assignment) -> EvaluatedAssignment {
    let loads = loads_unchecked(inst, s.slots());
    EvaluatedAssignment {
        fitness: cost_unchecked(inst, s.slots()),
        unfitness: overuse(&loads, inst.capacity()),
        loads,
        assignment: s,
    }
}

/// Signed percentage `100 * (z - z_ref) / z_ref`.
pub fn percent_deviation(z: f64, z_ref: f64) -> Result<f64, EvalError> {
    if !(z_ref > 0.0) {
        return Err(EvalError::NonPositiveReference(z_ref));
    }
    Ok(100.0 * (z - z_ref) / z_ref)
}
