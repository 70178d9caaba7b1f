use std::fs::{File, OpenOptions};
use std::io::{self, Write};
use std::path::Path;

use clap::ValueEnum;
use serde_json::Value;

use crate::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// One command result in all three renderings.
pub struct Output {
    pub json: Value,
    pub text: String,
    /// Header first.
    pub csv: Vec<Vec<String>>,
}

impl Output {
    /// A flat record; the CSV form is one `key,value` row per field.
    pub fn record(json: Value, text: String) -> Self {
        let mut csv = vec![vec!["key".to_string(), "value".to_string()]];
        if let Value::Object(map) = &json {
            for (k, v) in map {
                let v = match v {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                csv.push(vec![k.clone(), v]);
            }
        }
        Output { json, text, csv }
    }

    pub fn render(&self, format: Format) -> Result<String, Failure> {
        Ok(match format {
            Format::Json => format!("{}\n", serde_json::to_string_pretty(&self.json).expect("values serialize")),
            Format::Text => format!("{}\n", self.text.trim_end()),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                for row in &self.csv {
                    w.write_record(row).map_err(|e| Failure::input(e.to_string()))?;
                }
                String::from_utf8(w.into_inner().map_err(|e| Failure::input(e.to_string()))?)
                    .expect("csv output is utf-8")
            }
        })
    }
}

/// Destination of command output: stdout or a file.
pub fn sink(out: Option<&Path>, append: bool) -> Result<Box<dyn Write + Send>, Failure> {
    match out {
        None => Ok(Box::new(io::stdout())),
        Some(p) => {
            let file = if append {
                OpenOptions::new().create(true).append(true).open(p)
            } else {
                File::create(p)
            };
            file.map(|f| Box::new(f) as Box<dyn Write + Send>)
                .map_err(|e| Failure::input(format!("cannot write {}: {e}", p.display())))
        }
    }
}
