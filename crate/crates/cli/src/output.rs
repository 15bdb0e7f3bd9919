//! Flattened report rows and the JSON, CSV, and text renderings.

use glaisher::{format_complex, IdentityReport, Verdict};
use serde::Serialize;

/// One report row with every field rendered to plain strings and numbers.
///
/// JSON output serializes this struct directly, one object per line, with
/// absent fields omitted. CSV and text render the same data positionally.
#[derive(Serialize)]
pub struct Record {
    pub identity: String,
    pub n: u64,
    pub m: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub lhs: String,
    pub rhs: String,
    pub verdict: String,
    pub residual: f64,
    pub elapsed_us: u64,
}

impl Record {
    pub fn new(report: &IdentityReport, elapsed_us: u64) -> Self {
        Record {
            identity: report.identity.to_string(),
            n: report.n,
            m: report.m,
            k: report.k,
            sign: report.sign.map(|s| s.to_string()),
            z: report.z.map(format_complex),
            point: report.point.clone(),
            seed: report.seed,
            lhs: report.lhs.to_string(),
            rhs: report.rhs.to_string(),
            verdict: report.verdict.to_string(),
            residual: report.residual,
            elapsed_us,
        }
    }

    pub fn is_pass(&self) -> bool {
        self.verdict == Verdict::Pass.label()
    }
}

pub fn render_json(records: &[Record]) -> String {
    let mut out = String::new();
    for record in records {
        out.push_str(&serde_json::to_string(record).expect("record serializes"));
        out.push('\n');
    }
    out
}

const CSV_HEADER: [&str; 13] = [
    "identity",
    "n",
    "m",
    "k",
    "sign",
    "z",
    "point",
    "seed",
    "lhs",
    "rhs",
    "verdict",
    "residual",
    "elapsed_us",
];

pub fn render_csv(records: &[Record]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(CSV_HEADER).expect("writes to memory");
    for r in records {
        let opt = |v: &Option<String>| v.clone().unwrap_or_default();
        writer
            .write_record([
                r.identity.clone(),
                r.n.to_string(),
                r.m.to_string(),
                r.k.map(|k| k.to_string()).unwrap_or_default(),
                opt(&r.sign),
                opt(&r.z),
                opt(&r.point),
                r.seed.map(|s| s.to_string()).unwrap_or_default(),
                r.lhs.clone(),
                r.rhs.clone(),
                r.verdict.clone(),
                r.residual.to_string(),
                r.elapsed_us.to_string(),
            ])
            .expect("writes to memory");
    }
    String::from_utf8(writer.into_inner().expect("in-memory writer")).expect("valid utf-8")
}

/// Renders an aligned table followed by a one-line summary.
pub fn render_text(records: &[Record]) -> String {
    let header = ["identity", "n", "m", "k", "sign", "lhs", "rhs", "verdict"];
    let mut rows: Vec<[String; 8]> = Vec::with_capacity(records.len());
    for r in records {
        rows.push([
            r.identity.clone(),
            r.n.to_string(),
            r.m.to_string(),
            r.k.map(|k| k.to_string()).unwrap_or_default(),
            r.sign.clone().unwrap_or_default(),
            r.lhs.clone(),
            r.rhs.clone(),
            r.verdict.clone(),
        ]);
    }
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row.iter()) {
            *w = (*w).max(cell.len());
        }
    }

    let mut out = String::new();
    let push_row = |out: &mut String, cells: &[&str]| {
        let last = cells.len() - 1;
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i == last {
                out.push_str(cell);
            } else {
                out.push_str(&format!("{cell:<w$}  "));
            }
        }
        out.push('\n');
    };
    push_row(&mut out, &header);
    for row in &rows {
        let cells: Vec<&str> = row.iter().map(String::as_str).collect();
        push_row(&mut out, &cells);
    }

    let failed = records.iter().filter(|r| !r.is_pass()).count();
    out.push('\n');
    if failed == 0 {
        out.push_str(&format!("all {} checks passed\n", records.len()));
    } else {
        out.push_str(&format!("{failed} of {} checks failed\n", records.len()));
    }
    out
}
