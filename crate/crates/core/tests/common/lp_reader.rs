//! Minimal reader for the LP files produced by `write_lp`: objective,
//! linear rows, bounds and binaries. Enough to evaluate a point against the
//! emitted model.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Sense {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone)]
pub struct Row {
    pub name: String,
    pub terms: Vec<(f64, String)>,
    pub sense: Sense,
    pub rhs: f64,
}

#[derive(Debug, Clone, Default)]
pub struct LpModel {
    pub objective: Vec<(f64, String)>,
    pub rows: Vec<Row>,
    pub lower_bounds: HashMap<String, f64>,
    pub binaries: BTreeSet<String>,
}

impl LpModel {
    pub fn columns(&self) -> BTreeSet<String> {
        let mut cols: BTreeSet<String> = self.objective.iter().map(|(_, v)| v.clone()).collect();
        for r in &self.rows {
            cols.extend(r.terms.iter().map(|(_, v)| v.clone()));
        }
        cols.extend(self.lower_bounds.keys().cloned());
        cols.extend(self.binaries.iter().cloned());
        cols
    }

    pub fn objective_at(&self, point: &HashMap<String, f64>) -> f64 {
        eval_terms(&self.objective, point)
    }

    /// Names of rows or bounds violated at `point` beyond `tol`.
    pub fn violations(&self, point: &HashMap<String, f64>, tol: f64) -> Vec<String> {
        let mut bad = Vec::new();
        for r in &self.rows {
            let lhs = eval_terms(&r.terms, point);
            let ok = match r.sense {
                Sense::Le => lhs <= r.rhs + tol,
                Sense::Ge => lhs >= r.rhs - tol,
                Sense::Eq => (lhs - r.rhs).abs() <= tol,
            };
            if !ok {
                bad.push(r.name.clone());
            }
        }
        for (v, lb) in &self.lower_bounds {
            if point.get(v).copied().unwrap_or(0.0) < lb - tol {
                bad.push(format!("bound {v}"));
            }
        }
        for v in &self.binaries {
            let x = point.get(v).copied().unwrap_or(0.0);
            if x != 0.0 && x != 1.0 {
                bad.push(format!("binary {v}"));
            }
        }
        bad
    }
}

fn eval_terms(terms: &[(f64, String)], point: &HashMap<String, f64>) -> f64 {
    terms
        .iter()
        .map(|(c, v)| c * point.get(v).copied().unwrap_or(0.0))
        .sum()
}

/// Parses `[+|-] [coef] name` sequences.
fn parse_terms(text: &str) -> Vec<(f64, String)> {
    let mut terms = Vec::new();
    let mut sign = 1.0;
    let mut coef: Option<f64> = None;
    for tok in text.split_whitespace() {
        match tok {
            "+" => sign = 1.0,
            "-" => sign = -1.0,
            _ => {
                if let Ok(c) = tok.parse::<f64>() {
                    coef = Some(c);
                } else {
                    terms.push((sign * coef.unwrap_or(1.0), tok.to_string()));
                    sign = 1.0;
                    coef = None;
                }
            }
        }
    }
    terms
}

#[derive(PartialEq)]
enum Part {
    None,
    Objective,
    Rows,
    Bounds,
    Binary,
}

pub fn parse(text: &str) -> LpModel {
    let mut model = LpModel::default();
    let mut part = Part::None;
    // Rows may wrap across lines; gather statements first.
    let mut statements: Vec<(String, String)> = Vec::new();
    let mut current = String::new();
    let flush = |current: &mut String, statements: &mut Vec<(String, String)>, part: &Part| {
        if !current.trim().is_empty() {
            let tag = match part {
                Part::Objective => "obj",
                Part::Rows => "row",
                Part::Bounds => "bnd",
                Part::Binary => "bin",
                Part::None => "none",
            };
            statements.push((tag.to_string(), current.trim().to_string()));
        }
        current.clear();
    };
    for line in text.lines() {
        if line.starts_with('\\') {
            continue;
        }
        let trimmed = line.trim();
        let section = match trimmed {
            "Minimize" => Some(Part::Objective),
            "Subject To" => Some(Part::Rows),
            "Bounds" => Some(Part::Bounds),
            "Binary" => Some(Part::Binary),
            "End" => Some(Part::None),
            _ => None,
        };
        if let Some(s) = section {
            flush(&mut current, &mut statements, &part);
            part = s;
            continue;
        }
        let starts_new = trimmed.contains(':') || matches!(part, Part::Bounds | Part::Binary);
        if starts_new {
            flush(&mut current, &mut statements, &part);
        }
        current.push(' ');
        current.push_str(trimmed);
    }
    flush(&mut current, &mut statements, &part);

    for (tag, stmt) in statements {
        match tag.as_str() {
            "obj" => {
                let body = stmt.split_once(':').map_or(stmt.as_str(), |(_, b)| b);
                model.objective = parse_terms(body);
            }
            "row" => {
                let (name, body) = stmt.split_once(':').expect("row name");
                let (lhs, sense, rhs) = if let Some((l, r)) = body.split_once("<=") {
                    (l, Sense::Le, r)
                } else if let Some((l, r)) = body.split_once(">=") {
                    (l, Sense::Ge, r)
                } else {
                    let (l, r) = body.split_once('=').expect("row sense");
                    (l, Sense::Eq, r)
                };
                model.rows.push(Row {
                    name: name.trim().to_string(),
                    terms: parse_terms(lhs),
                    sense,
                    rhs: rhs.trim().parse().expect("rhs"),
                });
            }
            "bnd" => {
                let (v, lb) = stmt.split_once(">=").expect("lower bound");
                model
                    .lower_bounds
                    .insert(v.trim().to_string(), lb.trim().parse().expect("bound"));
            }
            "bin" => {
                model.binaries.insert(stmt.trim().to_string());
            }
            _ => {}
        }
    }
    model
}
