//! Problem data for the generalized quadratic assignment problem.
//!
//! An instance assigns `M` machines to `N` capacitated locations. Several
//! machines may share a location as long as the sum of their space
//! requirements stays within the location's capacity. The cost of a plan is
//! the sum of fixed assignment costs plus flow times distance over every
//! ordered pair of distinct machines, scaled by a uniform transport unit cost.
//!
//! Instances are immutable once built; all constructors validate dimensions
//! and reject negative or non-finite entries.

mod format;
mod generate;

pub use format::{parse_instance, serialize_instance, ParseError, ParseErrorKind, Section};
pub use generate::{generate_random_instance, GenRanges, ValueRange};

use crate::matrix::Matrix;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum InstanceError {
    #[error("instance must have at least one machine and one location (got M={machines}, N={locations})")]
    Empty { machines: usize, locations: usize },
    #[error("{field} has shape {got_rows}x{got_cols}, expected {want_rows}x{want_cols}")]
    Shape {
        field: &'static str,
        got_rows: usize,
        got_cols: usize,
        want_rows: usize,
        want_cols: usize,
    },
    #[error("{field}[{index}] = {value} is not a finite nonnegative number")]
    BadValue {
        field: &'static str,
        index: usize,
        value: f64,
    },
    #[error("invalid generator range for {field}: min {min} > max {max}")]
    BadRange {
        field: &'static str,
        min: u32,
        max: u32,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct GqapInstance {
    name: String,
    flow: Matrix,
    distance: Matrix,
    assign_cost: Matrix,
    requirement: Vec<f64>,
    capacity: Vec<f64>,
    unit_cost: f64,
}

impl GqapInstance {
    /// Validates and assembles an instance. The machine count is taken from
    /// `assign_cost.rows()` and the location count from `assign_cost.cols()`.
    pub fn new(
        flow: Matrix,
        distance: Matrix,
        assign_cost: Matrix,
        requirement: Vec<f64>,
        capacity: Vec<f64>,
        unit_cost: f64,
    ) -> Result<Self, InstanceError> {
        let m = assign_cost.rows();
        let n = assign_cost.cols();
        if m == 0 || n == 0 {
            return Err(InstanceError::Empty {
                machines: m,
                locations: n,
            });
        }
        check_shape("F", &flow, m, m)?;
        check_shape("D", &distance, n, n)?;
        check_shape("R", &requirement, 1, m)?;
        check_shape("C", &capacity, 1, n)?;
        for (field, values) in [
            ("A", assign_cost.as_slice()),
            ("F", flow.as_slice()),
            ("D", distance.as_slice()),
            ("R", requirement.as_slice()),
            ("C", capacity.as_slice()),
            ("UNIT_COST", std::slice::from_ref(&unit_cost)),
        ] {
            check_values(field, values)?;
        }
        Ok(Self {
            name: String::new(),
            flow,
            distance,
            assign_cost,
            requirement,
            capacity,
            unit_cost,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Number of machines `M`.
    #[inline]
    pub fn machine_count(&self) -> usize {
        self.assign_cost.rows()
    }

    /// Number of locations `N`.
    #[inline]
    pub fn location_count(&self) -> usize {
        self.assign_cost.cols()
    }

    #[inline]
    pub fn flow(&self) -> &Matrix {
        &self.flow
    }

    #[inline]
    pub fn distance(&self) -> &Matrix {
        &self.distance
    }

    #[inline]
    pub fn assign_cost(&self) -> &Matrix {
        &self.assign_cost
    }

    #[inline]
    pub fn requirement(&self) -> &[f64] {
        &self.requirement
    }

    #[inline]
    pub fn capacity(&self) -> &[f64] {
        &self.capacity
    }

    #[inline]
    pub fn unit_cost(&self) -> f64 {
        self.unit_cost
    }

    /// Size of the full assignment space `N^M`, saturating at `u128::MAX`.
    pub fn search_space(&self) -> u128 {
        let n = self.location_count() as u128;
        u32::try_from(self.machine_count())
            .ok()
            .and_then(|m| n.checked_pow(m))
            .unwrap_or(u128::MAX)
    }
}

trait Shaped {
    fn shape(&self) -> (usize, usize);
}

impl Shaped for Matrix {
    fn shape(&self) -> (usize, usize) {
        (self.rows(), self.cols())
    }
}

impl Shaped for Vec<f64> {
    fn shape(&self) -> (usize, usize) {
        (1, self.len())
    }
}

fn check_shape<S: Shaped>(
    field: &'static str,
    value: &S,
    want_rows: usize,
    want_cols: usize,
) -> Result<(), InstanceError> {
    let (got_rows, got_cols) = value.shape();
    if (got_rows, got_cols) != (want_rows, want_cols) {
        return Err(InstanceError::Shape {
            field,
            got_rows,
            got_cols,
            want_rows,
            want_cols,
        });
    }
    Ok(())
}

fn check_values(field: &'static str, values: &[f64]) -> Result<(), InstanceError> {
    match values
        .iter()
        .position(|v| !v.is_finite() || *v < 0.0)
    {
        Some(index) => Err(InstanceError::BadValue {
            field,
            index,
            value: values[index],
        }),
        None => Ok(()),
    }
}
