use std::collections::BTreeMap;
use std::io::{self, Write};

use serde::Serialize;
use serde_json::Value;

use crate::args::Format;

/// Bumped whenever a field of [`ReportDoc`] changes meaning.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub check: String,
    pub witness: Vec<String>,
    pub detail: String,
    pub reproduce: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub status: &'static str,
    pub checks: u64,
    pub failures: Vec<Failure>,
}

/// The JSON document printed for `--format json`.
#[derive(Debug, Clone, Serialize)]
pub struct ReportDoc {
    pub schema: u32,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<BTreeMap<String, f64>>,
    pub result: Value,
    pub summary: Summary,
}

/// What a command produces, before rendering.
#[derive(Debug, Clone)]
pub struct Output {
    pub result: Value,
    pub text: String,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub checks: u64,
    pub failures: Vec<Failure>,
}

impl Output {
    pub fn new(result: impl Serialize, text: String, header: Vec<&'static str>, rows: Vec<Vec<String>>) -> Output {
        let result = serde_json::to_value(result).expect("results serialize");
        Output { result, text, header, rows, checks: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn emit(
    out: &mut impl Write,
    format: Format,
    command: String,
    n: Option<usize>,
    timing: Option<BTreeMap<String, f64>>,
    o: Output,
) -> io::Result<()> {
    match format {
        Format::Text => {
            out.write_all(o.text.as_bytes())?;
            if !o.text.ends_with('\n') {
                writeln!(out)?;
            }
            for f in &o.failures {
                writeln!(out, "FAIL {}: {}", f.check, f.detail)?;
                if !f.witness.is_empty() {
                    writeln!(out, "  witness: {}", f.witness.join(" "))?;
                }
                writeln!(out, "  reproduce: {}", f.reproduce)?;
            }
            Ok(())
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(&o.header)?;
            for row in &o.rows {
                w.write_record(row)?;
            }
            w.flush()
        }
        Format::Json => {
            let doc = ReportDoc {
                schema: SCHEMA_VERSION,
                command,
                n,
                timing_ms: timing,
                summary: Summary {
                    status: if o.failures.is_empty() { "pass" } else { "fail" },
                    checks: o.checks,
                    failures: o.failures,
                },
                result: o.result,
            };
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)
        }
    }
}
