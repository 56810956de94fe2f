//! Independent oracles shared by integration tests. Nothing here calls the
//! library's evaluation or search code.

#![allow(dead_code)]

pub mod lp_reader;

use gqap_core::GqapInstance;

/// Cost through the binary formulation: `sum a_ik x_ik + sum c f_ij d_kl x_ik x_jl`
/// over `i != j`, all `k, l`.
pub fn naive_cost(inst: &GqapInstance, slots: &[usize]) -> f64 {
    let m = inst.machine_count();
    let n = inst.location_count();
    let x = |i: usize, k: usize| if slots[i] == k { 1.0 } else { 0.0 };
    let mut z = 0.0;
    for i in 0..m {
        for k in 0..n {
            z += inst.assign_cost()[(i, k)] * x(i, k);
        }
    }
    for i in 0..m {
        for j in 0..m {
            if i == j {
                continue;
            }
            for k in 0..n {
                for l in 0..n {
                    z += inst.unit_cost()
                        * inst.flow()[(i, j)]
                        * inst.distance()[(k, l)]
                        * x(i, k)
                        * x(j, l);
                }
            }
        }
    }
    z
}

pub fn naive_overuse(inst: &GqapInstance, slots: &[usize]) -> f64 {
    (0..inst.location_count())
        .map(|k| {
            let load: f64 = slots
                .iter()
                .zip(inst.requirement())
                .filter(|(&s, _)| s == k)
                .map(|(_, r)| r)
                .sum();
            (load - inst.capacity()[k]).max(0.0)
        })
        .sum()
}

/// Every assignment in lexicographic order via an odometer.
pub fn all_assignments(m: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next = Some(vec![0usize; m]);
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut succ = cur.clone();
        let mut pos = m;
        while pos > 0 {
            pos -= 1;
            succ[pos] += 1;
            if succ[pos] < n {
                next = Some(succ);
                break;
            }
            succ[pos] = 0;
        }
        Some(cur)
    })
}

/// Minimum-cost feasible assignment by plain enumeration, first wins ties.
pub fn naive_optimum(inst: &GqapInstance) -> Option<(Vec<usize>, f64)> {
    let mut best: Option<(Vec<usize>, f64)> = None;
    for s in all_assignments(inst.machine_count(), inst.location_count()) {
        if naive_overuse(inst, &s) > 0.0 {
            continue;
        }
        let z = naive_cost(inst, &s);
        if best.as_ref().is_none_or(|(_, b)| z < *b) {
            best = Some((s, z));
        }
    }
    best
}
