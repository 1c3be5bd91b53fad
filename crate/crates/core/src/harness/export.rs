use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use super::ExperimentResult;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExportFormat {
    #[default]
    Csv,
    Json,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(ExportFormat::Csv),
            "json" => Ok(ExportFormat::Json),
            other => Err(Error::Argument(format!(
                "unknown format `{other}` (expected csv|json)"
            ))),
        }
    }
}

pub const SUMMARY_HEADER: &str = "objective,mode,runs,population,iterations,mean,std,wall_ms";

// 17 significant digits; enough to round-trip any f64.
fn num(v: f64) -> String {
    format!("{v:.16e}")
}

fn json_num(v: f64) -> String {
    if v.is_finite() {
        num(v)
    } else {
        "null".into()
    }
}

fn json_str(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn json_array(values: &[f64]) -> String {
    let items: Vec<String> = values.iter().map(|&v| json_num(v)).collect();
    format!("[{}]", items.join(","))
}

fn wall_ms(r: &ExperimentResult) -> String {
    format!("{:.3}", r.wall_time.as_secs_f64() * 1e3)
}

/// One summary CSV data row (no trailing newline).
pub fn summary_row(r: &ExperimentResult) -> String {
    let c = &r.config;
    format!(
        "{},{},{},{},{},{},{},{}",
        c.objective,
        c.mode,
        c.runs,
        c.population,
        c.iterations,
        num(r.mean),
        num(r.std),
        wall_ms(r)
    )
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Error::io(path, e))
}

fn write_all(path: &Path, text: &str) -> Result<()> {
    let mut w = create(path)?;
    w.write_all(text.as_bytes())
        .and_then(|_| w.flush())
        .map_err(|e| Error::io(path, e))
}

fn summary_csv(r: &ExperimentResult) -> String {
    format!("{SUMMARY_HEADER}\n{}\n", summary_row(r))
}

fn trace_csv(r: &ExperimentResult) -> String {
    let mut out = String::from("run,iteration,best_fitness\n");
    for (k, run) in r.runs.iter().enumerate() {
        for (t, v) in run.trace.iter().enumerate() {
            let _ = writeln!(out, "{k},{},{}", t + 1, num(*v));
        }
    }
    out
}

fn json(r: &ExperimentResult) -> String {
    let c = &r.config;
    let mut out = String::from("{\n");
    let _ = writeln!(
        out,
        "  \"objective\": {},",
        json_str(&c.objective.to_string())
    );
    let _ = writeln!(out, "  \"mode\": {},", json_str(&c.mode.to_string()));
    let _ = writeln!(out, "  \"runs\": {},", c.runs);
    let _ = writeln!(out, "  \"population\": {},", c.population);
    let _ = writeln!(out, "  \"iterations\": {},", c.iterations);
    let _ = writeln!(out, "  \"base_seed\": {},", c.base_seed);
    let _ = writeln!(out, "  \"mean\": {},", json_num(r.mean));
    let _ = writeln!(out, "  \"std\": {},", json_num(r.std));
    let _ = writeln!(out, "  \"wall_ms\": {},", wall_ms(r));
    out.push_str("  \"run_records\": [");
    for (k, run) in r.runs.iter().enumerate() {
        out.push_str(if k == 0 { "\n" } else { ",\n" });
        let _ = write!(
            out,
            "    {{\"run\": {k}, \"seed\": {}, \"best_fitness\": {}, \"first_best_iteration\": {}, \
             \"best_position\": {}, \"trace\": {}}}",
            run.seed,
            json_num(run.best_fitness),
            run.first_best_iteration,
            json_array(&run.best_position),
            json_array(&run.trace)
        );
    }
    out.push_str("\n  ]\n}\n");
    out
}

/// CSV writes the one-row summary; JSON writes the summary plus every run's trace.
pub fn export_results(result: &ExperimentResult, format: ExportFormat, path: &Path) -> Result<()> {
    match format {
        ExportFormat::Csv => write_all(path, &summary_csv(result)),
        ExportFormat::Json => write_all(path, &json(result)),
    }
}

/// `run,iteration,best_fitness`, run 0-based and iteration 1-based.
pub fn export_trace(result: &ExperimentResult, path: &Path) -> Result<()> {
    write_all(path, &trace_csv(result))
}

/// `run,iteration,agent,dim0,...` with one row per agent per iteration.
pub fn export_search_history(result: &ExperimentResult, path: &Path) -> Result<()> {
    let histories = result
        .runs
        .iter()
        .map(|r| r.positions.as_ref())
        .collect::<Option<Vec<_>>>()
        .ok_or(Error::PositionsNotRecorded)?;
    let dim = result.runs.first().map_or(0, |r| r.best_position.len());
    let mut w = create(path)?;
    let mut header = String::from("run,iteration,agent");
    for j in 0..dim {
        let _ = write!(header, ",dim{j}");
    }
    let mut line = String::new();
    let io = |e| Error::io(path, e);
    writeln!(w, "{header}").map_err(io)?;
    for (k, history) in histories.iter().enumerate() {
        for (t, agents) in history.iter().enumerate() {
            for (a, pos) in agents.iter().enumerate() {
                line.clear();
                let _ = write!(line, "{k},{},{a}", t + 1);
                for v in pos {
                    line.push(',');
                    line.push_str(&num(*v));
                }
                writeln!(w, "{line}").map_err(io)?;
            }
        }
    }
    w.flush().map_err(io)
}
