//! Seeded random instances that always admit a feasible assignment.

use super::{GqapInstance, InstanceError};
use crate::matrix::Matrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Inclusive integer range for one generated field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValueRange {
    pub min: u32,
    pub max: u32,
}

impl ValueRange {
    pub const fn new(min: u32, max: u32) -> Self {
        Self { min, max }
    }

    fn check(self, field: &'static str) -> Result<Self, InstanceError> {
        if self.min > self.max {
            return Err(InstanceError::BadRange {
                field,
                min: self.min,
                max: self.max,
            });
        }
        Ok(self)
    }

    fn sample<R: Rng>(self, rng: &mut R) -> f64 {
        f64::from(rng.gen_range(self.min..=self.max))
    }
}

/// Bounds for every generated field. Values are integral so costs stay exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenRanges {
    pub flow: ValueRange,
    pub distance: ValueRange,
    pub assign_cost: ValueRange,
    pub requirement: ValueRange,
    /// Extra capacity added on top of the planted assignment's load.
    pub capacity_slack: ValueRange,
}

impl Default for GenRanges {
    fn default() -> Self {
        Self {
            flow: ValueRange::new(0, 20),
            distance: ValueRange::new(1, 20),
            assign_cost: ValueRange::new(10, 100),
            requirement: ValueRange::new(1, 10),
            capacity_slack: ValueRange::new(0, 5),
        }
    }
}

/// Generates an instance from `(machines, locations, seed, ranges)`.
///
/// A random planted assignment is drawn first and every capacity is set to
/// the planted load at that location plus a random slack, so the planted
/// assignment is feasible. Flow and distance have zero diagonals; distance
/// is symmetric, flow is not.
pub fn generate_random_instance(
    machines: usize,
    locations: usize,
    seed: u64,
    ranges: &GenRanges,
) -> Result<GqapInstance, InstanceError> {
    if machines == 0 || locations == 0 {
        return Err(InstanceError::Empty {
            machines,
            locations,
        });
    }
    let flow_r = ranges.flow.check("flow")?;
    let dist_r = ranges.distance.check("distance")?;
    let cost_r = ranges.assign_cost.check("assign_cost")?;
    let req_r = ranges.requirement.check("requirement")?;
    let slack_r = ranges.capacity_slack.check("capacity_slack")?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut flow = Matrix::zeros(machines, machines);
    for i in 0..machines {
        for j in 0..machines {
            if i != j {
                flow.set(i, j, flow_r.sample(&mut rng));
            }
        }
    }
    let mut distance = Matrix::zeros(locations, locations);
    for k in 0..locations {
        for l in k + 1..locations {
            let d = dist_r.sample(&mut rng);
            distance.set(k, l, d);
            distance.set(l, k, d);
        }
    }
    let mut assign_cost = Matrix::zeros(machines, locations);
    for i in 0..machines {
        for k in 0..locations {
            assign_cost.set(i, k, cost_r.sample(&mut rng));
        }
    }
    let requirement: Vec<f64> = (0..machines).map(|_| req_r.sample(&mut rng)).collect();

    let mut capacity = vec![0.0; locations];
    for &r in &requirement {
        capacity[rng.gen_range(0..locations)] += r;
    }
    for c in &mut capacity {
        *c += slack_r.sample(&mut rng);
    }

    Ok(GqapInstance::new(flow, distance, assign_cost, requirement, capacity, 1.0)?
        .with_name(format!("rand-{machines}x{locations}-s{seed}")))
}
