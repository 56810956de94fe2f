//! Linearized MILP export in CPLEX LP text format.
//!
//! Each product `x_ik * x_jl` of the quadratic objective is replaced by a
//! continuous `w_i_j_k_l >= 0` with the linking row
//! `x_i_k + x_j_l - w_i_j_k_l <= 1` for every ordered pair `i != j` and
//! `k != l`. Since all objective coefficients are nonnegative, the minimizer
//! sets `w` to `max(0, x_ik + x_jl - 1)` and no upper bounds are needed.
//!
//! Indices in variable and row names are 1-based. Output order is fixed:
//! objective terms by `(i, k)` then `(i, j, k, l)`; rows `asg_1..asg_M`,
//! `cap_1..cap_N`, then `lnk_*` in lexicographic `(i, j, k, l)` order.

use crate::instance::GqapInstance;
use std::fmt::Write as _;

/// Dimensions of the linearized model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModelStats {
    pub constraints: u64,
    pub variables: u64,
    pub binaries: u64,
}

/// Row and column counts of the full linearized model for `M` machines and
/// `N` locations.
pub fn model_statistics(machines: u64, locations: u64) -> ModelStats {
    let pairs = machines * machines.saturating_sub(1) * locations * locations.saturating_sub(1);
    ModelStats {
        constraints: machines + locations + pairs,
        variables: machines * locations + pairs,
        binaries: machines * locations,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LpOptions {
    /// Keep `w` columns (and their linking rows) whose objective coefficient
    /// is zero, so the file matches [`model_statistics`] exactly.
    pub counting_mode: bool,
}

/// Accumulates `coef name` terms, wrapping long rows.
struct Terms<'a> {
    out: &'a mut String,
    count: usize,
}

impl<'a> Terms<'a> {
    const PER_LINE: usize = 8;

    fn new(out: &'a mut String, head: &str) -> Self {
        let _ = write!(out, " {head}:");
        Self { out, count: 0 }
    }

    fn push(&mut self, sign: char, coef: Option<f64>, name: &str) {
        if self.count > 0 && self.count % Self::PER_LINE == 0 {
            self.out.push_str("\n   ");
        }
        if self.count > 0 || sign == '-' {
            let _ = write!(self.out, " {sign}");
        }
        match coef {
            Some(c) => {
                let _ = write!(self.out, " {c} {name}");
            }
            None => {
                let _ = write!(self.out, " {name}");
            }
        }
        self.count += 1;
    }

    fn finish(self, tail: &str) {
        if tail.is_empty() {
            self.out.push('\n');
        } else {
            let _ = writeln!(self.out, " {tail}");
        }
    }
}

fn x(i: usize, k: usize) -> String {
    format!("x_{}_{}", i + 1, k + 1)
}

fn w(i: usize, j: usize, k: usize, l: usize) -> String {
    format!("w_{}_{}_{}_{}", i + 1, j + 1, k + 1, l + 1)
}

/// Renders the linearized model of `inst` as an LP file.
pub fn write_lp(inst: &GqapInstance, options: LpOptions) -> String {
    let m = inst.machine_count();
    let n = inst.location_count();
    let coef = |i: usize, j: usize, k: usize, l: usize| {
        inst.unit_cost() * inst.flow()[(i, j)] * inst.distance()[(k, l)]
    };

    // (i, j, k, l) of every retained w column, in lexicographic order.
    let mut links = Vec::new();
    for i in 0..m {
        for j in (0..m).filter(|&j| j != i) {
            for k in 0..n {
                for l in (0..n).filter(|&l| l != k) {
                    if options.counting_mode || coef(i, j, k, l) != 0.0 {
                        links.push((i, j, k, l));
                    }
                }
            }
        }
    }

    let mut out = String::new();
    let label = if inst.name().is_empty() {
        "gqap"
    } else {
        inst.name()
    };
    let _ = writeln!(out, "\\ linearized GQAP model: {label}");
    let _ = writeln!(out, "\\ machines={m} locations={n}");
    out.push_str("Minimize\n");
    {
        let mut obj = Terms::new(&mut out, "obj");
        for i in 0..m {
            for k in 0..n {
                let a = inst.assign_cost()[(i, k)];
                if a != 0.0 {
                    obj.push('+', Some(a), &x(i, k));
                }
            }
        }
        for &(i, j, k, l) in &links {
            let c = coef(i, j, k, l);
            if c != 0.0 {
                obj.push('+', Some(c), &w(i, j, k, l));
            }
        }
        if obj.count == 0 {
            obj.push('+', Some(0.0), &x(0, 0));
        }
        obj.finish("");
    }

    out.push_str("Subject To\n");
    for i in 0..m {
        let mut row = Terms::new(&mut out, &format!("asg_{}", i + 1));
        for k in 0..n {
            row.push('+', None, &x(i, k));
        }
        row.finish("= 1");
    }
    for k in 0..n {
        let mut row = Terms::new(&mut out, &format!("cap_{}", k + 1));
        for i in 0..m {
            row.push('+', Some(inst.requirement()[i]), &x(i, k));
        }
        row.finish(&format!("<= {}", inst.capacity()[k]));
    }
    for &(i, j, k, l) in &links {
        let _ = writeln!(
            out,
            " lnk_{}_{}_{}_{}: {} + {} - {} <= 1",
            i + 1,
            j + 1,
            k + 1,
            l + 1,
            x(i, k),
            x(j, l),
            w(i, j, k, l)
        );
    }

    out.push_str("Bounds\n");
    for &(i, j, k, l) in &links {
        let _ = writeln!(out, " {} >= 0", w(i, j, k, l));
    }
    out.push_str("Binary\n");
    for i in 0..m {
        for k in 0..n {
            let _ = writeln!(out, " {}", x(i, k));
        }
    }
    out.push_str("End\n");
    out
}
