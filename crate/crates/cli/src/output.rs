use std::io::Write;
use std::path::Path;

use crate::cli::Format;
use crate::error::CliResult;
use crate::report::{Payload, ReportEnvelope};

pub fn render(report: &ReportEnvelope, format: Format) -> CliResult<String> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report)?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => render_csv(&report.results),
    }
}

fn opt(s: &Option<String>) -> &str {
    s.as_deref().unwrap_or("")
}

fn render_csv(payload: &Payload) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    match payload {
        Payload::SeqTable(t) => {
            w.write_record(["n", "exact", "decimal", "target", "abs_error"])?;
            for r in &t.rows {
                w.write_record([&r.n.to_string(), &r.exact, &r.decimal, opt(&r.target), opt(&r.abs_error)])?;
            }
        }
        Payload::Enclosures(list) => {
            w.write_record(["target", "method", "kind", "n", "lo", "hi", "width", "lo_exact", "hi_exact", "abs_error"])?;
            for e in &list.enclosures {
                let n = e.n.map(|n| n.to_string()).unwrap_or_default();
                w.write_record([&e.target, &e.method, &e.kind, &n, &e.lo, &e.hi, &e.width, &e.lo_exact, &e.hi_exact, opt(&e.abs_error)])?;
            }
        }
        Payload::Verification(v) => {
            w.write_record(["name", "n", "grade", "verdict", "witness"])?;
            for o in &v.outcomes {
                w.write_record([&o.name, &o.n.to_string(), &o.grade, &o.verdict, &o.witness])?;
            }
        }
        Payload::Integral(i) => {
            w.write_record(["t", "method", "value", "uncertainty", "discretization_error", "tail_bound", "evaluations"])?;
            w.write_record([
                &i.t,
                &i.method,
                &i.value,
                &i.uncertainty,
                &i.discretization_error,
                &i.tail_bound,
                &i.evaluations.to_string(),
            ])?;
        }
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Writes to `out` through a temporary file in the same directory and a
/// rename, or to stdout.
pub fn emit(text: &str, out: Option<&Path>) -> CliResult<()> {
    match out {
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
        Some(path) => {
            let dir = match path.parent() {
                Some(d) if !d.as_os_str().is_empty() => d,
                _ => Path::new("."),
            };
            let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
            tmp.write_all(text.as_bytes())?;
            tmp.as_file().sync_all()?;
            tmp.persist(path).map_err(|e| e.error)?;
        }
    }
    Ok(())
}
