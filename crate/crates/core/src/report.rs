//! CSV and JSON rendering of oracle records, transformation traces and
//! crossover scans. JSON objects carry the same keys as the CSV columns.

use crate::asymptotics::DensityScan;
use crate::nested::Trace;
use crate::oracle::ExtremalRecord;
use crate::Graph;
use serde_json::{json, Value};
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format {other:?}")),
        }
    }
}

pub enum Records<'a> {
    Extremal(&'a [ExtremalRecord]),
    Trace(&'a Trace),
    Scan(&'a DensityScan),
}

pub const EXTREMAL_COLUMNS: [&str; 5] = ["n", "e", "class", "maximum", "witness_edge_list"];
pub const TRACE_COLUMNS: [&str; 5] = ["step_index", "step_kind", "star_count_k", "star_count_2", "columns"];
pub const SCAN_COLUMNS: [&str; 4] = ["e", "clique_count", "star_count", "leader"];

/// Witness edges as `u-v` separated by spaces, witnesses separated by `;`.
pub fn witness_field(witnesses: &[Graph]) -> String {
    witnesses
        .iter()
        .map(|w| w.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(";")
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

/// Header plus rows, every cell already rendered; integers are written in full.
fn table(records: &Records) -> (&'static [&'static str], Vec<Vec<String>>) {
    match records {
        Records::Extremal(rs) => (
            &EXTREMAL_COLUMNS,
            rs.iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.e.to_string(),
                        r.host_class.to_string(),
                        r.maximum.to_string(),
                        witness_field(&r.witnesses),
                    ]
                })
                .collect(),
        ),
        Records::Trace(t) => (
            &TRACE_COLUMNS,
            t.entries
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    vec![
                        i.to_string(),
                        s.kind.to_string(),
                        s.star_count_k.to_string(),
                        s.star_count_2.to_string(),
                        join(&s.columns),
                    ]
                })
                .collect(),
        ),
        Records::Scan(s) => (
            &SCAN_COLUMNS,
            s.samples
                .iter()
                .map(|x| {
                    vec![
                        x.e.to_string(),
                        x.clique_count.to_string(),
                        x.star_count.to_string(),
                        x.leader().to_string(),
                    ]
                })
                .collect(),
        ),
    }
}

fn is_integer_column(name: &str) -> bool {
    matches!(name, "n" | "e" | "maximum" | "step_index" | "star_count_k" | "star_count_2" | "clique_count" | "star_count")
}

pub fn emit_report(records: Records, format: Format) -> String {
    let (header, rows) = table(&records);
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(header).expect("in-memory write");
            for row in &rows {
                w.write_record(row).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
        }
        Format::Json => {
            let objects: Vec<Value> = rows
                .iter()
                .map(|row| {
                    let mut obj = serde_json::Map::new();
                    for (name, cell) in header.iter().zip(row) {
                        let value = if is_integer_column(name) {
                            Value::Number(serde_json::Number::from_str(cell).expect("integer cell"))
                        } else {
                            json!(cell)
                        };
                        obj.insert((*name).to_string(), value);
                    }
                    Value::Object(obj)
                })
                .collect();
            let mut out = serde_json::to_string_pretty(&Value::Array(objects)).expect("json");
            out.push('\n');
            out
        }
    }
}
