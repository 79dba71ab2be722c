use std::io::Write;

use dpt_core::checkers::Holds;
use serde::Serialize;
use serde_json::Value;

use crate::args::OutputFormat;

pub const SCHEMA: &str = "dpt-report/1";

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: Vec<String>,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Holds>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
    /// Rows for `--output csv` when the result is naturally tabular.
    #[serde(skip)]
    pub table: Option<Vec<Value>>,
}

impl Report {
    pub fn new(result: impl Serialize) -> Self {
        Report {
            schema: SCHEMA,
            command: Vec::new(),
            result: serde_json::to_value(result).expect("reports serialize"),
            verdict: None,
            notes: Vec::new(),
            timing_ms: None,
            table: None,
        }
    }

    pub fn with_verdict(mut self, h: Holds) -> Self {
        self.verdict = Some(h);
        self
    }

    pub fn with_table(mut self, rows: impl Serialize) -> Self {
        match serde_json::to_value(rows).expect("rows serialize") {
            Value::Array(v) => self.table = Some(v),
            other => self.table = Some(vec![other]),
        }
        self
    }

    pub fn with_notes(mut self, notes: &[String]) -> Self {
        self.notes.extend(notes.iter().cloned());
        self
    }

    /// Replaces the result while keeping verdict and notes.
    pub fn with_result(mut self, r: impl Serialize) -> Self {
        self.result = serde_json::to_value(r).expect("reports serialize");
        self
    }

    pub fn note(mut self, n: impl Into<String>) -> Self {
        self.notes.push(n.into());
        self
    }

    pub fn render(&self, fmt: OutputFormat, out: &mut dyn Write) -> std::io::Result<()> {
        match fmt {
            OutputFormat::Json => {
                serde_json::to_writer_pretty(&mut *out, self)?;
                writeln!(out)
            }
            OutputFormat::Csv => self.render_csv(out),
            OutputFormat::Human => self.render_human(out),
        }
    }

    fn render_csv(&self, out: &mut dyn Write) -> std::io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        match &self.table {
            Some(rows) => write_rows(&mut w, rows)?,
            None => {
                w.write_record(["key", "value"])?;
                let mut flat = Vec::new();
                flatten("", &self.result, &mut flat);
                for (k, v) in flat {
                    w.write_record([k, v])?;
                }
            }
        }
        w.flush()
    }

    fn render_human(&self, out: &mut dyn Write) -> std::io::Result<()> {
        writeln!(out, "dpt {}", self.command.join(" "))?;
        if let Some(h) = self.verdict {
            writeln!(out, "verdict: {}", scalar(&serde_json::to_value(h).unwrap()))?;
        }
        let mut flat = Vec::new();
        flatten("", &self.result, &mut flat);
        let width = flat.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in flat {
            writeln!(out, "  {k:width$}  {v}")?;
        }
        for n in &self.notes {
            writeln!(out, "note: {n}")?;
        }
        if let Some(t) = self.timing_ms {
            writeln!(out, "time: {t} ms")?;
        }
        Ok(())
    }
}

/// Writes flat objects as CSV rows; nested values become JSON text.
pub fn write_rows<W: Write>(w: &mut csv::Writer<W>, rows: &[Value]) -> std::io::Result<()> {
    let header: Vec<String> = match rows.first() {
        Some(Value::Object(m)) => m.keys().cloned().collect(),
        Some(_) => vec!["value".into()],
        None => return Ok(()),
    };
    w.write_record(&header)?;
    for r in rows {
        let rec: Vec<String> = match r {
            Value::Object(m) => header
                .iter()
                .map(|k| m.get(k).map(scalar).unwrap_or_default())
                .collect(),
            v => vec![scalar(v)],
        };
        w.write_record(&rec)?;
    }
    Ok(())
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(m) if !m.is_empty() => {
            for (k, x) in m {
                flatten(&key(k), x, out);
            }
        }
        Value::Array(a) if !a.is_empty() => {
            for (i, x) in a.iter().enumerate() {
                flatten(&key(&i.to_string()), x, out);
            }
        }
        other => out.push((if prefix.is_empty() { "value".into() } else { prefix.into() }, scalar(other))),
    }
}
