use crate::evaluation::{evaluate_unchecked, Assignment, EvaluatedAssignment};
use crate::instance::GqapInstance;
use rand::Rng;

/// Fixed-size set of evaluated solutions.
#[derive(Debug, Clone, PartialEq)]
pub struct Population {
    members: Vec<EvaluatedAssignment>,
}

impl Population {
    pub fn from_members(members: Vec<EvaluatedAssignment>) -> Self {
        Self { members }
    }

    #[inline]
    pub fn members(&self) -> &[EvaluatedAssignment] {
        &self.members
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: &Assignment) -> bool {
        self.members.iter().any(|m| &m.assignment == s)
    }

    pub fn total_fitness(&self) -> f64 {
        self.members.iter().map(|m| m.fitness).sum()
    }

    pub fn total_unfitness(&self) -> f64 {
        self.members.iter().map(|m| m.unfitness).sum()
    }

    pub(crate) fn set(&mut self, index: usize, member: EvaluatedAssignment) {
        self.members[index] = member;
    }
}

/// Draws `n_pop` solutions with every machine placed on a uniformly random
/// location. Members are drawn in order, machine by machine. Infeasible and
/// duplicate members are allowed.
pub fn init_population<R: Rng + ?Sized>(
    inst: &GqapInstance,
    n_pop: usize,
    rng: &mut R,
) -> Population {
    let m = inst.machine_count();
    let n = inst.location_count();
    let members = (0..n_pop)
        .map(|_| {
            let slots = (0..m).map(|_| rng.gen_range(0..n)).collect();
            evaluate_unchecked(inst, Assignment::new(slots))
        })
        .collect();
    Population { members }
}

/// Current best solution: the cheapest feasible member, or, when no member
/// is feasible, the least unfit member paired with `sentinel`. Ties go to
/// the lowest index.
pub fn best_of(pop: &Population, sentinel: f64) -> (Assignment, f64) {
    let (index, cost) = best_index(pop);
    (pop.members[index].assignment.clone(), cost.unwrap_or(sentinel))
}

/// Index of the best member and its cost, `None` when no member is feasible.
pub(crate) fn best_index(pop: &Population) -> (usize, Option<f64>) {
    let feasible = pop
        .members
        .iter()
        .enumerate()
        .filter(|(_, m)| m.is_feasible())
        .fold(None::<(usize, f64)>, |best, (i, m)| match best {
            Some((_, f)) if f <= m.fitness => best,
            _ => Some((i, m.fitness)),
        });
    if let Some((i, f)) = feasible {
        return (i, Some(f));
    }
    let least_unfit = pop
        .members
        .iter()
        .enumerate()
        .fold(0, |best, (i, m)| {
            if m.unfitness < pop.members[best].unfitness {
                i
            } else {
                best
            }
        });
    (least_unfit, None)
}
