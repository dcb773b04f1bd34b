use std::fs;
use std::io::{self, BufRead, BufWriter, Write};
use std::path::Path;

use crate::error::Result;
use crate::objective::RunRecord;

/// 17 significant digits, enough to round-trip any `f64`.
pub fn format_number(v: f64) -> String {
    format!("{v:.16e}")
}

/// Writes `iteration,best_so_far` rows for `record`. A record without
/// iterations gets a single row for iteration 0 holding the initial best.
pub fn write_trace(record: &RunRecord, header: Option<&str>, out: &mut impl Write) -> io::Result<()> {
    if let Some(h) = header {
        writeln!(out, "# {h}")?;
    }
    writeln!(out, "iteration,best_so_far")?;
    if record.best_so_far_trace.is_empty() {
        writeln!(out, "0,{}", format_number(record.best_fitness))?;
    }
    for (t, v) in record.best_so_far_trace.iter().enumerate() {
        writeln!(out, "{},{}", t + 1, format_number(*v))?;
    }
    Ok(())
}

/// Writes the convergence trace of `record` to `path`.
pub fn write_convergence_csv(record: &RunRecord, path: &Path) -> Result<()> {
    write_convergence_csv_with_header(record, None, path)
}

pub(crate) fn write_convergence_csv_with_header(
    record: &RunRecord,
    header: Option<&str>,
    path: &Path,
) -> Result<()> {
    let mut out = BufWriter::new(fs::File::create(path)?);
    write_trace(record, header, &mut out)?;
    out.flush()?;
    Ok(())
}

/// Reads back `(iteration, best_so_far)` rows, skipping comments and the
/// header.
pub fn read_trace_csv(path: &Path) -> Result<Vec<(usize, f64)>> {
    let file = io::BufReader::new(fs::File::open(path)?);
    let mut rows = Vec::new();
    for line in file.lines() {
        let line = line?;
        if line.starts_with('#') || line.starts_with("iteration") || line.is_empty() {
            continue;
        }
        let bad = || io::Error::new(io::ErrorKind::InvalidData, format!("bad trace row `{line}`"));
        let (t, v) = line.split_once(',').ok_or_else(bad)?;
        rows.push((t.parse().map_err(|_| bad())?, v.parse().map_err(|_| bad())?));
    }
    Ok(rows)
}
