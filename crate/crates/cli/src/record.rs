//! One benchmark row and its CSV form.

use gqap_core::Assignment;
use std::io::Write;

/// CSV columns, in order.
pub const CSV_HEADER: [&str; 12] = [
    "instance",
    "n_pop",
    "max_k",
    "replicate",
    "seed",
    "elapsed_seconds",
    "z_best_ga",
    "z_best_after_ls",
    "best_assignment",
    "feasible",
    "z_reference",
    "percent_dev",
];

#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub instance_name: String,
    pub n_pop: usize,
    pub max_k: u64,
    pub replicate: u32,
    pub seed: u64,
    pub elapsed_seconds: f64,
    /// GA best cost, or the sentinel when no feasible solution was found.
    pub z_best_ga: f64,
    pub z_best_after_ls: f64,
    pub best_assignment: Assignment,
    pub feasible: bool,
    pub z_reference: Option<f64>,
    /// `None` when no reference was given or the run stayed infeasible.
    pub percent_dev: Option<f64>,
    /// GA loop passes; not written to CSV.
    pub iterations_run: u64,
}

impl RunRecord {
    /// Equality on everything except wall time.
    pub fn same_outcome(&self, other: &RunRecord) -> bool {
        let mut a = self.clone();
        a.elapsed_seconds = other.elapsed_seconds;
        &a == other
    }
}

/// A data row or the per-cell summary row (`replicate` column = `best`).
#[derive(Debug, Clone, PartialEq)]
pub struct CsvRow {
    pub record: RunRecord,
    pub summary: bool,
}

impl CsvRow {
    pub fn data(record: RunRecord) -> Self {
        Self {
            record,
            summary: false,
        }
    }

    fn fields(&self) -> [String; 12] {
        let r = &self.record;
        let percent_dev = match (r.z_reference, r.percent_dev) {
            (None, _) => String::new(),
            (Some(_), Some(d)) => format!("{d:.2}"),
            (Some(_), None) => "n/a".to_string(),
        };
        [
            r.instance_name.clone(),
            r.n_pop.to_string(),
            r.max_k.to_string(),
            if self.summary {
                "best".to_string()
            } else {
                r.replicate.to_string()
            },
            r.seed.to_string(),
            format!("{:.6}", r.elapsed_seconds),
            r.z_best_ga.to_string(),
            r.z_best_after_ls.to_string(),
            r.best_assignment.to_string(),
            r.feasible.to_string(),
            r.z_reference.map(|z| z.to_string()).unwrap_or_default(),
            percent_dev,
        ]
    }
}

pub fn write_csv<W: Write>(out: W, rows: &[CsvRow]) -> csv::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(CSV_HEADER)?;
    for row in rows {
        writer.write_record(row.fields())?;
    }
    writer.flush()?;
    Ok(())
}
