//! Tabular output model with deterministic CSV and JSON writers.
//!
//! Both writers are pure functions of the table contents, so repeated runs
//! with the same configuration produce byte-identical files. CSV carries the
//! data only; free-form metadata (clamp warnings, check diagnostics) goes to
//! stderr and into the JSON `meta` array.

use serde_json::{Map, Value};

/// One table cell. `Num(None)` renders as an empty CSV cell / JSON `null`
/// and is used for quantities that do not exist at the given index.
#[derive(Clone, Debug)]
pub enum Cell {
    Num(Option<f64>),
    Text(String),
    Bool(bool),
}

impl Cell {
    /// Numeric cell; non-finite values are treated as missing.
    pub fn num(v: f64) -> Self {
        Cell::Num(if v.is_finite() { Some(v) } else { None })
    }

    /// Optional numeric cell; `None` and non-finite values are missing.
    pub fn opt(v: Option<f64>) -> Self {
        Cell::Num(v.filter(|x| x.is_finite()))
    }

    pub fn text(s: impl Into<String>) -> Self {
        Cell::Text(s.into())
    }
}

/// A rectangular result table plus metadata lines.
#[derive(Clone, Debug)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub meta: Vec<String>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self {
            columns,
            rows: Vec::new(),
            meta: Vec::new(),
        }
    }

    pub fn push_row(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len(), "row width mismatch");
        self.rows.push(row);
    }

    /// Renders the table as CSV: a header line, one line per row, final
    /// newline included. Numbers use the shortest decimal representation
    /// that round-trips to the same binary value; missing values render as
    /// empty cells.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                match cell {
                    Cell::Num(Some(v)) => out.push_str(&format!("{v}")),
                    Cell::Num(None) => {}
                    Cell::Text(s) => out.push_str(s),
                    Cell::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
                }
            }
            out.push('\n');
        }
        out
    }

    /// Renders `{"meta": [...], "rows": [...]}` with each row an object
    /// keyed by column name. Object keys are emitted in sorted order, so
    /// parsing the document and re-serializing it with this same writer
    /// reproduces the bytes exactly.
    pub fn to_json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = Map::new();
                for (name, cell) in self.columns.iter().zip(row) {
                    let value = match cell {
                        Cell::Num(Some(v)) => {
                            serde_json::Number::from_f64(*v).map_or(Value::Null, Value::Number)
                        }
                        Cell::Num(None) => Value::Null,
                        Cell::Text(s) => Value::String(s.clone()),
                        Cell::Bool(b) => Value::Bool(*b),
                    };
                    obj.insert((*name).to_string(), value);
                }
                Value::Object(obj)
            })
            .collect();
        let meta: Vec<Value> = self.meta.iter().cloned().map(Value::String).collect();
        let mut doc = Map::new();
        doc.insert("meta".to_string(), Value::Array(meta));
        doc.insert("rows".to_string(), Value::Array(rows));
        let mut text = serde_json::to_string_pretty(&Value::Object(doc)).expect("table serializes");
        text.push('\n');
        text
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::new(vec!["a", "b", "c"]);
        t.meta.push("note".to_string());
        t.push_row(vec![Cell::num(0.5), Cell::Num(None), Cell::Bool(true)]);
        t.push_row(vec![
            Cell::num(1.0 / 3.0),
            Cell::text("x"),
            Cell::Bool(false),
        ]);
        t
    }

    #[test]
    fn csv_has_header_empty_cells_and_final_newline() {
        let csv = sample().to_csv();
        assert_eq!(csv, "a,b,c\n0.5,,true\n0.3333333333333333,x,false\n");
    }

    #[test]
    fn csv_numbers_round_trip() {
        let v = 0.1_f64 + 0.2_f64;
        let mut t = Table::new(vec!["v"]);
        t.push_row(vec![Cell::num(v)]);
        let line = t.to_csv().lines().nth(1).unwrap().to_string();
        assert_eq!(line.parse::<f64>().unwrap(), v);
    }

    #[test]
    fn json_round_trips_byte_identically() {
        let json = sample().to_json();
        let parsed: Value = serde_json::from_str(&json).unwrap();
        let mut again = serde_json::to_string_pretty(&parsed).unwrap();
        again.push('\n');
        assert_eq!(json, again);
    }

    #[test]
    fn json_uses_null_for_missing_and_carries_meta() {
        let json = sample().to_json();
        let parsed: Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed["meta"][0], "note");
        assert!(parsed["rows"][0]["b"].is_null());
        assert_eq!(parsed["rows"][0]["c"], Value::Bool(true));
    }

    #[test]
    fn non_finite_numbers_render_as_missing() {
        let mut t = Table::new(vec!["v"]);
        t.push_row(vec![Cell::num(f64::INFINITY)]);
        assert_eq!(t.to_csv(), "v\n\n");
        let parsed: Value = serde_json::from_str(&t.to_json()).unwrap();
        assert!(parsed["rows"][0]["v"].is_null());
    }
}
