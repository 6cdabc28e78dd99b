//! Output formats shared by the command-line front end and the examples.

use std::fmt;
use std::str::FromStr;

use serde::Serializer;
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    Csv,
    Json,
    #[default]
    Pretty,
}

impl FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            "pretty" => Ok(OutputFormat::Pretty),
            _ => Err(Error::Parse(format!("unknown output format {s:?}"))),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
            OutputFormat::Pretty => "pretty",
        })
    }
}

pub fn render_matrix(m: &ExactMatrix, format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => m.to_csv(),
        OutputFormat::Json => m.to_json() + "\n",
        OutputFormat::Pretty => m.to_pretty(),
    }
}

/// A table of exact values kept as strings.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: impl IntoIterator<Item = impl Into<String>>) -> Self {
        Table { header: header.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: impl IntoIterator<Item = impl ToString>) {
        self.rows.push(row.into_iter().map(|c| c.to_string()).collect());
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => {
                let mut out = String::new();
                for line in std::iter::once(&self.header).chain(&self.rows) {
                    let cells: Vec<String> = line.iter().map(|c| csv_cell(c)).collect();
                    out.push_str(&cells.join(","));
                    out.push('\n');
                }
                out
            }
            OutputFormat::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let obj: Map<String, Value> = self
                            .header
                            .iter()
                            .zip(row)
                            .map(|(h, c)| (h.clone(), Value::String(c.clone())))
                            .collect();
                        Value::Object(obj)
                    })
                    .collect();
                serde_json::to_string(&rows).expect("strings always serialize") + "\n"
            }
            OutputFormat::Pretty => {
                let widths: Vec<usize> = (0..self.header.len())
                    .map(|j| {
                        std::iter::once(&self.header)
                            .chain(&self.rows)
                            .map(|r| r.get(j).map_or(0, |c| c.chars().count()))
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let mut out = String::new();
                for line in std::iter::once(&self.header).chain(&self.rows) {
                    let cells: Vec<String> =
                        line.iter().zip(&widths).map(|(c, &w)| format!("{c:>w$}")).collect();
                    out.push_str(cells.join("  ").trim_end());
                    out.push('\n');
                }
                out
            }
        }
    }
}

fn csv_cell(c: &str) -> String {
    if c.contains([',', '"', '\n']) {
        format!("\"{}\"", c.replace('"', "\"\""))
    } else {
        c.to_string()
    }
}

/// Serialize any `Display` value (big integers, rationals) as a JSON string.
pub fn serialize_display<T: fmt::Display, S: Serializer>(
    value: &T,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_formats() {
        let mut t = Table::new(["ord", "set", "count"]);
        t.push(["0", "{}", "1"]);
        t.push(["3", "{1,2}", "10"]);
        assert_eq!(t.render(OutputFormat::Csv), "ord,set,count\n0,{},1\n3,\"{1,2}\",10\n");
        assert_eq!(
            t.render(OutputFormat::Json),
            "[{\"ord\":\"0\",\"set\":\"{}\",\"count\":\"1\"},{\"ord\":\"3\",\"set\":\"{1,2}\",\"count\":\"10\"}]\n"
        );
        assert_eq!(t.render(OutputFormat::Pretty), "ord    set  count\n  0     {}      1\n  3  {1,2}     10\n");
        assert_eq!("JSON".parse::<OutputFormat>().unwrap(), OutputFormat::Json);
        assert!("xml".parse::<OutputFormat>().is_err());
    }
}
