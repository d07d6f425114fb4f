use std::io::Write;

use serde_json::Value;

use crate::Format;

/// A command result: the JSON document, a flat table for `--csv`, and
/// whether every check it ran passed.
pub struct Output {
    pub json: Value,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub passed: bool,
}

impl Output {
    pub fn new(json: Value, header: &[&str], rows: Vec<Vec<String>>) -> Self {
        Output { json, header: header.iter().map(|s| s.to_string()).collect(), rows, passed: true }
    }

    pub fn failing_if(mut self, failed: bool) -> Self {
        self.passed = !failed;
        self
    }

    pub fn print(&self, format: Format) -> std::io::Result<()> {
        let mut out = std::io::stdout().lock();
        match format {
            Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&self.json).expect("serializable")),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.header)?;
                for r in &self.rows {
                    w.write_record(r)?;
                }
                w.flush()
            }
        }
    }
}

pub fn point(p: &shimura_towers::engine::Point) -> Value {
    match p {
        shimura_towers::algebra::ProjPoint::Finite(a) => Value::from(*a),
        shimura_towers::algebra::ProjPoint::Infinity => Value::from("inf"),
    }
}

pub fn point_str(p: &shimura_towers::engine::Point) -> String {
    match point(p) {
        Value::String(s) => s,
        v => v.to_string(),
    }
}
