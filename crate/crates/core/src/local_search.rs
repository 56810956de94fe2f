//! Steepest-descent neighborhood search.
//!
//! The neighborhood of a solution is every single-machine reassignment
//! followed by every pairwise exchange of two machines sitting on different
//! locations. Each step moves to the cheapest feasible neighbor if it is
//! strictly cheaper than the current solution.

use crate::evaluation::{evaluate_unchecked, Assignment, EvalError};
use crate::instance::GqapInstance;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Neighborhood {
    pub moves: Vec<Assignment>,
}

impl Neighborhood {
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }
}

/// Enumerates reassignments (machine ascending, location ascending) then
/// exchanges (`i < j`, both ascending).
pub fn neighbors(inst: &GqapInstance, s: &Assignment) -> Result<Neighborhood, EvalError> {
    s.validate(inst)?;
    let slots = s.slots();
    let m = slots.len();
    let n = inst.location_count();
    let mut moves = Vec::with_capacity(m * (n - 1) + m * (m - 1) / 2);
    for i in 0..m {
        for k in (0..n).filter(|&k| k != slots[i]) {
            let mut next = s.clone();
            next.slots_mut()[i] = k;
            moves.push(next);
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            if slots[i] != slots[j] {
                let mut next = s.clone();
                next.slots_mut().swap(i, j);
                moves.push(next);
            }
        }
    }
    Ok(Neighborhood { moves })
}

/// Descends from `s` until no feasible neighbor is strictly cheaper.
///
/// Infeasible inputs are returned unchanged with their cost.
pub fn steepest_descent(
    inst: &GqapInstance,
    s: &Assignment,
) -> Result<(Assignment, f64), EvalError> {
    s.validate(inst)?;
    let start = evaluate_unchecked(inst, s.clone());
    let mut current = start.assignment;
    let mut cost = start.fitness;
    if start.unfitness > 0.0 {
        return Ok((current, cost));
    }
    loop {
        let best = neighbors(inst, &current)?
            .moves
            .into_iter()
            .map(|cand| evaluate_unchecked(inst, cand))
            .filter(|e| e.is_feasible())
            .fold(None, |best: Option<(Assignment, f64)>, e| match best {
                Some((_, c)) if c <= e.fitness => best,
                _ => Some((e.assignment, e.fitness)),
            });
        match best {
            Some((next, c)) if c < cost => {
                current = next;
                cost = c;
            }
            _ => return Ok((current, cost)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evaluation::total_cost;
    use crate::instance::parse_instance;

    fn a(s: &str) -> Assignment {
        s.parse().unwrap()
    }

    #[test]
    fn two_by_two_neighborhood() {
        let inst =
            parse_instance("2 2\nA\n1 2\n3 4\nF\n0 3\n2 0\nD\n0 5\n5 0\nR\n1 1\nC\n2 2\n").unwrap();
        let nb = neighbors(&inst, &a("1 2")).unwrap();
        assert_eq!(nb.moves, vec![a("2 2"), a("1 1"), a("2 1")]);
    }

    #[test]
    fn single_location_has_no_neighbors() {
        let inst = parse_instance("3 1\nA\n1\n1\n1\nF\n0 0 0\n0 0 0\n0 0 0\nD\n0\nR\n1 1 1\nC\n3\n")
            .unwrap();
        assert!(neighbors(&inst, &a("1 1 1")).unwrap().is_empty());
        assert_eq!(steepest_descent(&inst, &a("1 1 1")).unwrap(), (a("1 1 1"), 3.0));
    }

    #[test]
    fn descends_to_cheapest_on_two_by_two() {
        let inst =
            parse_instance("2 2\nA\n1 2\n3 4\nF\n0 3\n2 0\nD\n0 5\n5 0\nR\n1 1\nC\n2 2\n").unwrap();
        // costs: (1,1)=4, (1,2)=30, (2,1)=30, (2,2)=6
        let (s, c) = steepest_descent(&inst, &a("1 2")).unwrap();
        assert_eq!((s.clone(), c), (a("1 1"), 4.0));
        assert_eq!(total_cost(&inst, &s).unwrap(), c);
    }

    #[test]
    fn infeasible_input_is_returned_unchanged() {
        let inst =
            parse_instance("2 2\nA\n0 0\n0 0\nF\n0 0\n0 0\nD\n0 0\n0 0\nR\n3 3\nC\n4 10\n").unwrap();
        assert_eq!(steepest_descent(&inst, &a("1 1")).unwrap(), (a("1 1"), 0.0));
    }
}
