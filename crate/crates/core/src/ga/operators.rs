//! Selection, crossover, mutation, repair and replacement.
//!
//! Every randomized operator has a deterministic `*_at` / `*_with` twin that
//! takes the random choices as arguments, so worked examples can be replayed
//! exactly.

use super::population::Population;
use super::GaError;
use crate::evaluation::{loads_unchecked, overuse, Assignment, EvaluatedAssignment};
use crate::instance::GqapInstance;
use rand::Rng;

/// Binary tournament between members `a` and `b` on fitness alone.
/// `a` wins ties.
#[inline]
pub fn hold_tournament(pop: &Population, a: usize, b: usize) -> usize {
    let members = pop.members();
    if members[a].fitness <= members[b].fitness {
        a
    } else {
        b
    }
}

/// Two distinct member indices, uniform over ordered pairs.
pub fn draw_pair<R: Rng + ?Sized>(n: usize, rng: &mut R) -> (usize, usize) {
    let a = rng.gen_range(0..n);
    let mut b = rng.gen_range(0..n - 1);
    if b >= a {
        b += 1;
    }
    (a, b)
}

/// Runs the two parent tournaments with contestants supplied by `draw`.
///
/// The first tournament is held once. The second is repeated until its
/// winner's genotype differs from the first parent's, at most `retry_cap`
/// times. Returns the member indices of both parents, or `None` when the cap
/// was exhausted.
pub fn tournament_pair_with<F>(
    pop: &Population,
    retry_cap: usize,
    mut draw: F,
) -> Option<(usize, usize)>
where
    F: FnMut() -> (usize, usize),
{
    let (a, b) = draw();
    let first = hold_tournament(pop, a, b);
    let first_genes = &pop.members()[first].assignment;
    for _ in 0..retry_cap {
        let (a, b) = draw();
        let second = hold_tournament(pop, a, b);
        if &pop.members()[second].assignment != first_genes {
            return Some((first, second));
        }
    }
    None
}

/// Selects two parents with distinct genotypes by binary tournament.
pub fn tournament_pair<R: Rng + ?Sized>(
    pop: &Population,
    retry_cap: usize,
    rng: &mut R,
) -> Option<(Assignment, Assignment)> {
    let n = pop.len();
    if n < 2 {
        return None;
    }
    tournament_pair_with(pop, retry_cap, || draw_pair(n, rng)).map(|(i, j)| {
        (
            pop.members()[i].assignment.clone(),
            pop.members()[j].assignment.clone(),
        )
    })
}

fn require_two(len: usize) -> Result<(), GaError> {
    if len < 2 {
        return Err(GaError::TooFewMachines(len));
    }
    Ok(())
}

/// Child made of the first `cut` genes of one parent and the rest of the
/// other. With `first_orientation` the prefix comes from `p1`.
pub fn crossover_at(
    p1: &Assignment,
    p2: &Assignment,
    cut: usize,
    first_orientation: bool,
) -> Assignment {
    let (head, tail) = if first_orientation { (p1, p2) } else { (p2, p1) };
    let mut slots = head.slots()[..cut].to_vec();
    slots.extend_from_slice(&tail.slots()[cut..]);
    Assignment::new(slots)
}

/// One-point crossover: cut uniform in `1..M`, orientation a fair coin.
pub fn one_point_crossover<R: Rng + ?Sized>(
    p1: &Assignment,
    p2: &Assignment,
    rng: &mut R,
) -> Result<Assignment, GaError> {
    require_two(p1.len())?;
    if p1.len() != p2.len() {
        return Err(GaError::LengthMismatch(p1.len(), p2.len()));
    }
    let cut = rng.gen_range(1..p1.len());
    let first = rng.gen_range(0..2) == 0;
    Ok(crossover_at(p1, p2, cut, first))
}

/// Exchanges genes at 0-based positions `j1` and `j2`. The flag is `false`
/// when both genes held the same location and nothing changed.
pub fn swap_at(child: &Assignment, j1: usize, j2: usize) -> (Assignment, bool) {
    let mut out = child.clone();
    out.slots_mut().swap(j1, j2);
    let changed = child.slots()[j1] != child.slots()[j2];
    (out, changed)
}

/// Pairwise exchange mutation: `j1` uniform in `0..M-1`, then `j2` uniform
/// in `j1+1..M`.
pub fn swap_mutation<R: Rng + ?Sized>(
    child: &Assignment,
    rng: &mut R,
) -> Result<(Assignment, bool), GaError> {
    let m = child.len();
    require_two(m)?;
    let j1 = rng.gen_range(0..m - 1);
    let j2 = rng.gen_range(j1 + 1..m);
    Ok(swap_at(child, j1, j2))
}

/// Capacity repair with the machine choice supplied by `pick`.
///
/// Overused locations are visited in ascending order. For each one a single
/// assigned machine is chosen by `pick(count)` (an index into the machines
/// on that location, ascending by machine number). The machine moves to the
/// underused location with the most spare capacity (lowest index on ties)
/// if that spare covers its requirement; otherwise it stays. Feasible
/// children are returned untouched and `pick` is not called.
pub fn repair_with<F>(inst: &GqapInstance, child: &Assignment, mut pick: F) -> Assignment
where
    F: FnMut(usize) -> usize,
{
    let capacity = inst.capacity();
    let requirement = inst.requirement();
    let mut loads = loads_unchecked(inst, child.slots());
    if overuse(&loads, capacity) == 0.0 {
        return child.clone();
    }
    let mut out = child.clone();
    let overused: Vec<usize> = (0..loads.len())
        .filter(|&k| loads[k] - capacity[k] > 0.0)
        .collect();
    for k in overused {
        let machines: Vec<usize> = out
            .slots()
            .iter()
            .enumerate()
            .filter_map(|(i, &loc)| (loc == k).then_some(i))
            .collect();
        if machines.is_empty() {
            continue;
        }
        let chosen = machines[pick(machines.len())];
        // Most spare capacity = most negative (load - capacity).
        let target = (0..loads.len())
            .filter(|&l| loads[l] - capacity[l] < 0.0)
            .fold(None::<usize>, |best, l| match best {
                Some(b) if loads[b] - capacity[b] <= loads[l] - capacity[l] => best,
                _ => Some(l),
            });
        if let Some(dest) = target {
            if capacity[dest] - loads[dest] >= requirement[chosen] {
                out.slots_mut()[chosen] = dest;
                loads[k] -= requirement[chosen];
                loads[dest] += requirement[chosen];
            }
        }
    }
    out
}

/// Capacity repair drawing each machine choice uniformly from `rng`.
pub fn repair_unfit<R: Rng + ?Sized>(
    inst: &GqapInstance,
    child: &Assignment,
    rng: &mut R,
) -> Assignment {
    repair_with(inst, child, |count| rng.gen_range(0..count))
}

/// Outcome of offering a child to the population.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Replacement {
    /// The child took the place of the member at this index.
    Replaced(usize),
    /// The child's genotype already exists in the population.
    Duplicate,
    /// All members are feasible and the child is not.
    Discarded,
}

impl Replacement {
    pub fn accepted(self) -> bool {
        matches!(self, Replacement::Replaced(_))
    }
}

fn first_max_by<F: Fn(&EvaluatedAssignment) -> f64>(pop: &Population, key: F) -> usize {
    pop.members()
        .iter()
        .enumerate()
        .fold(0, |best, (i, m)| {
            if key(m) > key(&pop.members()[best]) {
                i
            } else {
                best
            }
        })
}

/// Steady-state replacement.
///
/// Duplicates are rejected. While any member is infeasible the child
/// replaces the most unfit member; once all members are feasible, a feasible
/// child replaces the most expensive one and an infeasible child is dropped.
/// Ties go to the lowest index.
pub fn replace_into(pop: &mut Population, child: EvaluatedAssignment) -> Replacement {
    if pop.contains(&child.assignment) {
        return Replacement::Duplicate;
    }
    let any_infeasible = pop.members().iter().any(|m| !m.is_feasible());
    let index = if any_infeasible {
        first_max_by(pop, |m| m.unfitness)
    } else if child.is_feasible() {
        first_max_by(pop, |m| m.fitness)
    } else {
        return Replacement::Discarded;
    };
    pop.set(index, child);
    Replacement::Replaced(index)
}
