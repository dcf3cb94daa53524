use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

/// A flat table of results plus the checks that failed.
#[derive(Debug, Default)]
pub struct Report {
    pub suite: &'static str,
    pub meta: Vec<(&'static str, Value)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
    pub failures: Vec<Value>,
}

impl Report {
    pub fn new(suite: &'static str, columns: &[&'static str]) -> Self {
        Report {
            suite,
            columns: columns.to_vec(),
            ..Report::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn meta(&mut self, key: &'static str, value: impl Into<Value>) {
        self.meta.push((key, value.into()));
    }

    pub fn failure_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("suite".into(), self.suite.into());
        m.insert("failures".into(), Value::Array(self.failures.clone()));
        Value::Object(m)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.json(),
            Format::Csv => self.csv(),
            Format::Table => self.table(),
        }
    }

    fn json(&self) -> String {
        let mut m = Map::new();
        m.insert("suite".into(), self.suite.into());
        m.insert("passed".into(), self.passed().into());
        for (k, v) in &self.meta {
            m.insert((*k).into(), v.clone());
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, v)| ((*c).to_string(), v.clone()))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        m.insert("rows".into(), Value::Array(rows));
        m.insert("failures".into(), Value::Array(self.failures.clone()));
        let mut out = serde_json::to_string_pretty(&Value::Object(m)).expect("json");
        out.push('\n');
        out
    }

    fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(cell)).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }

    fn table(&self) -> String {
        let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(cell).collect()).collect();
        let widths: Vec<usize> = self
            .columns
            .iter()
            .enumerate()
            .map(|(i, c)| cells.iter().map(|r| r[i].chars().count()).chain([c.len()]).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for (k, v) in &self.meta {
            writeln!(out, "# {k}: {}", cell(v)).expect("string write");
        }
        let line = |out: &mut String, items: &[String]| {
            let padded: Vec<String> = items.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect();
            writeln!(out, "{}", padded.join("  ").trim_end()).expect("string write");
        };
        let header: Vec<String> = self.columns.iter().map(|c| c.to_string()).collect();
        line(&mut out, &header);
        let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
        line(&mut out, &rule);
        for row in &cells {
            line(&mut out, row);
        }
        writeln!(
            out,
            "{}: {} rows, {} failures",
            if self.passed() { "PASS" } else { "FAIL" },
            self.rows.len(),
            self.failures.len()
        )
        .expect("string write");
        out
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}
