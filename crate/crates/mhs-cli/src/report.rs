//! Report records and the three output formats (JSON lines, CSV, text).
//!
//! Field set and ordering are fixed; with timings disabled (the default) a
//! report is byte-identical across runs with the same configuration and
//! seed, regardless of worker scheduling.

use serde::Serialize;
use std::io::Write;

#[derive(Clone, Debug, Serialize)]
pub struct ReportRecord {
    pub kind: &'static str,
    pub id: String,
    pub params: String,
    pub prime: Option<u64>,
    pub modexp: Option<u32>,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    pub skipped: bool,
    pub micros: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl Format {
    pub fn parse(s: &str) -> Option<Format> {
        match s {
            "json" => Some(Format::Json),
            "csv" => Some(Format::Csv),
            "text" => Some(Format::Text),
            _ => None,
        }
    }
}

pub const CSV_HEADER: &str = "kind,id,params,prime,modexp,lhs,rhs,pass,skipped,micros";

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn write_report(records: &[ReportRecord], format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Json => {
            for r in records {
                writeln!(out, "{}", serde_json::to_string(r).expect("serialize"))?;
            }
        }
        Format::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for r in records {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{}",
                    r.kind,
                    csv_field(&r.id),
                    csv_field(&r.params),
                    r.prime.map(|p| p.to_string()).unwrap_or_default(),
                    r.modexp.map(|n| n.to_string()).unwrap_or_default(),
                    csv_field(&r.lhs),
                    csv_field(&r.rhs),
                    r.pass,
                    r.skipped,
                    r.micros
                )?;
            }
        }
        Format::Text => {
            let mut pass = 0usize;
            let mut fail = 0usize;
            let mut skip = 0usize;
            for r in records {
                if r.skipped {
                    skip += 1;
                } else if r.pass {
                    pass += 1;
                } else {
                    fail += 1;
                    writeln!(
                        out,
                        "FAIL {} {} [{}]{} lhs={} rhs={}",
                        r.kind,
                        r.id,
                        r.params,
                        r.prime.map(|p| format!(" p={p}")).unwrap_or_default(),
                        r.lhs,
                        r.rhs
                    )?;
                }
            }
            writeln!(out, "checks: {}  pass: {pass}  fail: {fail}  skipped: {skip}", records.len())?;
        }
    }
    Ok(())
}

/// Number of failing (non-skipped) records.
pub fn failures(records: &[ReportRecord]) -> usize {
    records.iter().filter(|r| !r.skipped && !r.pass).count()
}
