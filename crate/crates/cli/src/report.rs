use std::io::Write;

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Table,
}

/// Rows of string cells under fixed headers.
pub struct Table {
    headers: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<const N: usize>(headers: [&'static str; N]) -> Self {
        Table {
            headers: headers.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn empty() -> Self {
        Table::new([])
    }

    pub fn row<const N: usize>(&mut self, cells: [String; N]) {
        debug_assert_eq!(N, self.headers.len());
        self.rows.push(cells.to_vec());
    }
}

/// Integers become JSON numbers; everything else stays a string.
fn json_value(s: &str) -> Value {
    s.parse::<i64>()
        .map(Value::from)
        .or_else(|_| s.parse::<u64>().map(Value::from))
        .unwrap_or_else(|_| Value::from(s))
}

/// Writes key/value pairs followed by the table. CSV carries only the table
/// when there is one, otherwise the pairs as a single row.
pub fn emit(out: &mut impl Write, format: Format, summary: &[(&str, String)], table: &Table) -> anyhow::Result<()> {
    match format {
        Format::Table => {
            for (k, v) in summary {
                writeln!(out, "{k}: {v}")?;
            }
            if !table.rows.is_empty() {
                let mut widths: Vec<usize> = table.headers.iter().map(|h| h.len()).collect();
                for r in &table.rows {
                    for (w, c) in widths.iter_mut().zip(r) {
                        *w = (*w).max(c.chars().count());
                    }
                }
                let line = |cells: Vec<&str>| {
                    let padded: Vec<String> = cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c:<w$}"))
                        .collect();
                    padded.join("  ").trim_end().to_string()
                };
                writeln!(out, "{}", line(table.headers.clone()))?;
                for r in &table.rows {
                    writeln!(out, "{}", line(r.iter().map(String::as_str).collect()))?;
                }
            }
        }
        Format::Json => {
            let mut obj = Map::new();
            for (k, v) in summary {
                obj.insert((*k).to_string(), json_value(v));
            }
            if !table.headers.is_empty() {
                let rows: Vec<Value> = table
                    .rows
                    .iter()
                    .map(|r| {
                        let m: Map<String, Value> = table
                            .headers
                            .iter()
                            .zip(r)
                            .map(|(h, c)| ((*h).to_string(), json_value(c)))
                            .collect();
                        Value::Object(m)
                    })
                    .collect();
                obj.insert("rows".to_string(), Value::Array(rows));
            }
            writeln!(out, "{}", Value::Object(obj))?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            if table.headers.is_empty() {
                w.write_record(summary.iter().map(|(k, _)| *k))?;
                w.write_record(summary.iter().map(|(_, v)| v.as_str()))?;
            } else {
                w.write_record(&table.headers)?;
                for r in &table.rows {
                    w.write_record(r)?;
                }
            }
            w.flush()?;
        }
    }
    Ok(())
}
