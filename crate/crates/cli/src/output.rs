//! Record emission as JSON lines, CSV, or an aligned table.

use std::io::Write;

use anyhow::Result;
use clap::ValueEnum;
use serde::Serialize;
use serde_json::{Map, Value};

pub type Record = Map<String, Value>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

/// Flattens a serializable struct into a record. Non-objects land under `value`.
pub fn to_record<T: Serialize>(value: &T) -> Record {
    match serde_json::to_value(value).expect("reports serialize") {
        Value::Object(map) => map,
        other => {
            let mut map = Map::new();
            map.insert("value".into(), other);
            map
        }
    }
}

fn columns(records: &[Record]) -> Vec<String> {
    let mut cols: Vec<String> = Vec::new();
    for r in records {
        for k in r.keys() {
            if !cols.contains(k) {
                cols.push(k.clone());
            }
        }
    }
    cols
}

fn cell(v: Option<&Value>) -> String {
    match v {
        None | Some(Value::Null) => String::new(),
        Some(Value::String(s)) => s.clone(),
        Some(other) => other.to_string(),
    }
}

pub fn emit(records: &[Record], format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Json => {
            for r in records {
                writeln!(out, "{}", Value::Object(r.clone()))?;
            }
        }
        Format::Csv => {
            let cols = columns(records);
            let mut w = csv::Writer::from_writer(out);
            w.write_record(&cols)?;
            for r in records {
                w.write_record(cols.iter().map(|c| cell(r.get(c))))?;
            }
            w.flush()?;
        }
        Format::Table => {
            let cols = columns(records);
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|r| cols.iter().map(|c| cell(r.get(c))).collect())
                .collect();
            let widths: Vec<usize> = cols
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    rows.iter()
                        .map(|row| row[i].chars().count())
                        .chain([c.len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |cells: &[String]| {
                let padded: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, &w)| format!("{c:<w$}"))
                    .collect();
                padded.join("  ").trim_end().to_string()
            };
            writeln!(out, "{}", line(&cols))?;
            let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
            writeln!(out, "{}", line(&rule))?;
            for row in &rows {
                writeln!(out, "{}", line(row))?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Vec<Record> {
        let a = json!({"q": 3, "count": 28, "note": "a, b"});
        let b = json!({"q": 11, "count": 0, "extra": [1, 2]});
        vec![a, b]
            .into_iter()
            .map(|v| v.as_object().unwrap().clone())
            .collect()
    }

    fn render(format: Format) -> String {
        let mut buf = Vec::new();
        emit(&sample(), format, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn json_lines() {
        let s = render(Format::Json);
        assert_eq!(s.lines().count(), 2);
        assert!(s.starts_with(r#"{"q":3,"count":28"#));
    }

    #[test]
    fn csv_has_union_header_and_quotes() {
        let s = render(Format::Csv);
        let mut lines = s.lines();
        assert_eq!(lines.next(), Some("q,count,note,extra"));
        assert_eq!(lines.next(), Some(r#"3,28,"a, b","#));
        assert_eq!(lines.next(), Some(r#"11,0,,"[1,2]""#));
    }

    #[test]
    fn table_aligns() {
        let s = render(Format::Table);
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines[0], "q   count  note  extra");
        assert_eq!(lines[2], "3   28     a, b");
        assert_eq!(lines[3], "11  0            [1,2]");
    }
}
