use super::ExactError;
use crate::evaluation::{cost_unchecked, Assignment};
use crate::instance::GqapInstance;
use rayon::prelude::*;

pub const DEFAULT_LIMIT: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq)]
pub struct ExactResult {
    pub optimum: Assignment,
    pub z_opt: f64,
    /// Number of feasible assignments in the whole space.
    pub feasible_count: u64,
    /// Nominal size of the space covered, `N^M` (visited or pruned).
    pub enumerated: u128,
}

struct Branch {
    best: Option<(f64, Vec<usize>)>,
    feasible: u64,
}

/// Depth-first search in lexicographic order. `slots[..depth]` is fixed and
/// `cost` holds the exact contribution of those machines. Subtrees whose
/// partial load already exceeds a capacity are skipped.
struct Search<'a> {
    inst: &'a GqapInstance,
    slots: Vec<usize>,
    loads: Vec<f64>,
}

impl Search<'_> {
    fn place_cost(&self, i: usize, k: usize) -> f64 {
        let flow = self.inst.flow();
        let dist = self.inst.distance();
        let mut pair = 0.0;
        for j in 0..i {
            let l = self.slots[j];
            pair += flow[(i, j)] * dist[(k, l)] + flow[(j, i)] * dist[(l, k)];
        }
        self.inst.assign_cost()[(i, k)] + self.inst.unit_cost() * pair
    }

    fn descend(&mut self, depth: usize, cost: f64, out: &mut Branch) {
        let m = self.inst.machine_count();
        if depth == m {
            out.feasible += 1;
            if out.best.as_ref().is_none_or(|(b, _)| cost < *b) {
                out.best = Some((cost, self.slots.clone()));
            }
            return;
        }
        let r = self.inst.requirement()[depth];
        for k in 0..self.inst.location_count() {
            if self.loads[k] + r > self.inst.capacity()[k] {
                continue;
            }
            self.slots[depth] = k;
            let step = self.place_cost(depth, k);
            self.loads[k] += r;
            self.descend(depth + 1, cost + step, out);
            self.loads[k] -= r;
        }
    }
}

/// Exhaustive optimum over all `N^M` assignments.
///
/// Refuses when `N^M > limit`. Ties between equal-cost optima go to the
/// lexicographically smallest assignment. The first machine's location
/// partitions the work across threads; the reduction keeps that order.
pub fn brute_force_optimum(inst: &GqapInstance, limit: u128) -> Result<ExactResult, ExactError> {
    let space = inst.search_space();
    if space > limit {
        return Err(ExactError::TooLarge {
            machines: inst.machine_count(),
            locations: inst.location_count(),
            size: space,
            limit,
        });
    }
    let m = inst.machine_count();
    let branches: Vec<Branch> = (0..inst.location_count())
        .into_par_iter()
        .map(|k0| {
            let mut out = Branch {
                best: None,
                feasible: 0,
            };
            let r0 = inst.requirement()[0];
            if r0 > inst.capacity()[k0] {
                return out;
            }
            let mut search = Search {
                inst,
                slots: vec![0; m],
                loads: vec![0.0; inst.location_count()],
            };
            search.slots[0] = k0;
            search.loads[k0] = r0;
            let first = search.place_cost(0, k0);
            search.descend(1, first, &mut out);
            out
        })
        .collect();

    let feasible_count = branches.iter().map(|b| b.feasible).sum();
    let best = branches
        .into_iter()
        .filter_map(|b| b.best)
        .fold(None, |acc: Option<(f64, Vec<usize>)>, cand| match acc {
            Some((c, _)) if c <= cand.0 => acc,
            _ => Some(cand),
        });
    let (_, slots) = best.ok_or(ExactError::Infeasible)?;
    let z_opt = cost_unchecked(inst, &slots);
    Ok(ExactResult {
        optimum: Assignment::new(slots),
        z_opt,
        feasible_count,
        enumerated: space,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::parse_instance;

    #[test]
    fn minimal_instance() {
        let inst = parse_instance("1 1\nA\n5\nF\n0\nD\n0\nR\n1\nC\n1\n").unwrap();
        let res = brute_force_optimum(&inst, DEFAULT_LIMIT).unwrap();
        assert_eq!(res.optimum.slots(), &[0]);
        assert_eq!(res.z_opt, 5.0);
        assert_eq!(res.feasible_count, 1);
    }

    #[test]
    fn two_by_two() {
        let inst =
            parse_instance("2 2\nA\n1 2\n3 4\nF\n0 3\n2 0\nD\n0 5\n5 0\nR\n1 1\nC\n2 2\n").unwrap();
        let res = brute_force_optimum(&inst, DEFAULT_LIMIT).unwrap();
        assert_eq!(res.optimum.to_string(), "1 1");
        assert_eq!(res.z_opt, 4.0);
        assert_eq!(res.feasible_count, 4);
        assert_eq!(res.enumerated, 4);
    }

    #[test]
    fn ties_break_lexicographically() {
        let inst =
            parse_instance("2 2\nA\n0 0\n0 0\nF\n0 0\n0 0\nD\n0 0\n0 0\nR\n1 1\nC\n1 1\n").unwrap();
        let res = brute_force_optimum(&inst, DEFAULT_LIMIT).unwrap();
        assert_eq!(res.optimum.to_string(), "1 2");
        assert_eq!(res.feasible_count, 2);
    }

    #[test]
    fn refusal_and_infeasibility() {
        let inst =
            parse_instance("2 2\nA\n0 0\n0 0\nF\n0 0\n0 0\nD\n0 0\n0 0\nR\n3 3\nC\n1 1\n").unwrap();
        assert_eq!(brute_force_optimum(&inst, DEFAULT_LIMIT), Err(ExactError::Infeasible));
        let err = brute_force_optimum(&inst, 3).unwrap_err();
        assert!(err.to_string().contains("2^2 = 4"), "{err}");
    }
}
