//! Plain-text instance format.
//!
//! ```text
//! # comment to end of line; blank lines are ignored
//! M N
//! A            # M rows x N columns, assignment costs
//! F            # M rows x M columns, flows
//! D            # N rows x N columns, distances
//! R            # one row of M requirements
//! C            # one row of N capacities
//! UNIT_COST    # optional, one scalar, defaults to 1
//! ```
//!
//! Each block label sits alone on its line and each matrix row is one line.
//! The instance name is not part of the file; callers loading from disk
//! usually set it from the file stem.

use super::{GqapInstance, InstanceError};
use crate::matrix::Matrix;
use std::fmt::{self, Write as _};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Section {
    Header,
    A,
    F,
    D,
    R,
    C,
    UnitCost,
}

impl Section {
    fn label(self) -> &'static str {
        match self {
            Section::Header => "header",
            Section::A => "A",
            Section::F => "F",
            Section::D => "D",
            Section::R => "R",
            Section::C => "C",
            Section::UnitCost => "UNIT_COST",
        }
    }

    fn from_label(s: &str) -> Option<Self> {
        Some(match s {
            "A" => Section::A,
            "F" => Section::F,
            "D" => Section::D,
            "R" => Section::R,
            "C" => Section::C,
            "UNIT_COST" => Section::UnitCost,
            _ => return None,
        })
    }
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseErrorKind {
    #[error("expected `M N` with two positive integers")]
    BadHeader,
    #[error("missing section")]
    MissingSection,
    #[error("expected section label `{expected}`, found `{found}`")]
    UnexpectedLine { expected: Section, found: String },
    #[error("dimension mismatch: expected {expected} {what}, found {found}")]
    Dimension {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("`{0}` is not a number")]
    NotANumber(String),
    #[error("negative entry {0}")]
    Negative(f64),
    #[error("non-finite entry `{0}`")]
    NonFinite(String),
    #[error("unexpected content after the last section: `{0}`")]
    Trailing(String),
    #[error(transparent)]
    Invalid(#[from] InstanceError),
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("line {line}, section {section}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub section: Section,
    pub kind: ParseErrorKind,
}

/// Meaningful lines with their 1-based line numbers, comments stripped.
struct Lines<'a> {
    items: Vec<(usize, &'a str)>,
    pos: usize,
    last_line: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let mut last_line = 0;
        let items = text
            .lines()
            .enumerate()
            .filter_map(|(idx, raw)| {
                last_line = idx + 1;
                let content = raw.split('#').next().unwrap_or("").trim();
                (!content.is_empty()).then_some((idx + 1, content))
            })
            .collect();
        Self {
            items,
            pos: 0,
            last_line,
        }
    }

    fn peek(&self) -> Option<(usize, &'a str)> {
        self.items.get(self.pos).copied()
    }

    fn next(&mut self) -> Option<(usize, &'a str)> {
        let item = self.peek();
        if item.is_some() {
            self.pos += 1;
        }
        item
    }

    /// Line number to report when input ends early.
    fn eof_line(&self) -> usize {
        self.last_line + 1
    }
}

fn err(line: usize, section: Section, kind: ParseErrorKind) -> ParseError {
    ParseError {
        line,
        section,
        kind,
    }
}

fn parse_value(token: &str, line: usize, section: Section) -> Result<f64, ParseError> {
    let value: f64 = token
        .parse()
        .map_err(|_| err(line, section, ParseErrorKind::NotANumber(token.to_string())))?;
    if !value.is_finite() {
        return Err(err(line, section, ParseErrorKind::NonFinite(token.to_string())));
    }
    if value < 0.0 {
        return Err(err(line, section, ParseErrorKind::Negative(value)));
    }
    // normalizes -0.0
    Ok(value + 0.0)
}

fn parse_row(
    text: &str,
    line: usize,
    section: Section,
    cols: usize,
) -> Result<Vec<f64>, ParseError> {
    let row = text
        .split_whitespace()
        .map(|t| parse_value(t, line, section))
        .collect::<Result<Vec<_>, _>>()?;
    if row.len() != cols {
        return Err(err(
            line,
            section,
            ParseErrorKind::Dimension {
                what: "columns",
                expected: cols,
                found: row.len(),
            },
        ));
    }
    Ok(row)
}

fn expect_label(lines: &mut Lines<'_>, section: Section) -> Result<(), ParseError> {
    match lines.next() {
        None => Err(err(lines.eof_line(), section, ParseErrorKind::MissingSection)),
        Some((_, text)) if text == section.label() => Ok(()),
        Some((line, text)) => Err(err(
            line,
            section,
            ParseErrorKind::UnexpectedLine {
                expected: section,
                found: text.to_string(),
            },
        )),
    }
}

fn parse_block(
    lines: &mut Lines<'_>,
    section: Section,
    rows: usize,
    cols: usize,
) -> Result<Vec<f64>, ParseError> {
    expect_label(lines, section)?;
    let mut data = Vec::with_capacity(rows * cols);
    for found in 0..rows {
        let short = |line| {
            err(
                line,
                section,
                ParseErrorKind::Dimension {
                    what: "rows",
                    expected: rows,
                    found,
                },
            )
        };
        match lines.peek() {
            None => return Err(short(lines.eof_line())),
            Some((line, text)) if Section::from_label(text).is_some() => {
                return Err(short(line))
            }
            Some((line, text)) => {
                lines.next();
                data.extend(parse_row(text, line, section, cols)?);
            }
        }
    }
    Ok(data)
}

/// Parses an instance from the text format described in the module docs.
pub fn parse_instance(text: &str) -> Result<GqapInstance, ParseError> {
    let mut lines = Lines::new(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| err(1, Section::Header, ParseErrorKind::BadHeader))?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| err(header_line, Section::Header, ParseErrorKind::BadHeader))?;
    let (m, n) = match dims[..] {
        [m, n] if m > 0 && n > 0 => (m, n),
        _ => return Err(err(header_line, Section::Header, ParseErrorKind::BadHeader)),
    };

    let a = parse_block(&mut lines, Section::A, m, n)?;
    let f = parse_block(&mut lines, Section::F, m, m)?;
    let d = parse_block(&mut lines, Section::D, n, n)?;
    let r = parse_block(&mut lines, Section::R, 1, m)?;
    let c = parse_block(&mut lines, Section::C, 1, n)?;
    let unit_cost = match lines.peek() {
        Some((_, text)) if text == Section::UnitCost.label() => {
            parse_block(&mut lines, Section::UnitCost, 1, 1)?[0]
        }
        _ => 1.0,
    };
    if let Some((line, text)) = lines.next() {
        return Err(err(
            line,
            Section::UnitCost,
            ParseErrorKind::Trailing(text.to_string()),
        ));
    }

    let matrix = |rows, cols, data| Matrix::new(rows, cols, data).expect("block sized by parser");
    GqapInstance::new(
        matrix(m, m, f),
        matrix(n, n, d),
        matrix(m, n, a),
        r,
        c,
        unit_cost,
    )
    .map_err(|e| err(header_line, Section::Header, e.into()))
}

fn write_row(out: &mut String, values: &[f64]) {
    let mut first = true;
    for v in values {
        if !first {
            out.push(' ');
        }
        first = false;
        let _ = write!(out, "{v}");
    }
    out.push('\n');
}

fn write_matrix(out: &mut String, label: &str, m: &Matrix) {
    out.push_str(label);
    out.push('\n');
    for i in 0..m.rows() {
        write_row(out, m.row(i));
    }
}

/// Writes the canonical text form. `UNIT_COST` is emitted only when it
/// differs from 1.
pub fn serialize_instance(inst: &GqapInstance) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", inst.machine_count(), inst.location_count());
    write_matrix(&mut out, "A", inst.assign_cost());
    write_matrix(&mut out, "F", inst.flow());
    write_matrix(&mut out, "D", inst.distance());
    out.push_str("R\n");
    write_row(&mut out, inst.requirement());
    out.push_str("C\n");
    write_row(&mut out, inst.capacity());
    if inst.unit_cost() != 1.0 {
        let _ = writeln!(out, "UNIT_COST\n{}", inst.unit_cost());
    }
    out
}
