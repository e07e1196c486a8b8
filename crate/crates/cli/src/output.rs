use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

/// One json-lines object.
#[derive(Debug, Clone, Serialize)]
pub struct Record {
    pub kind: String,
    pub params: Vec<String>,
    pub values: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub status: Option<&'static str>,
}

impl Record {
    pub fn new(kind: impl Into<String>, params: Vec<String>, values: Vec<String>) -> Self {
        Record {
            kind: kind.into(),
            params,
            values,
            status: None,
        }
    }

    pub fn with_status(mut self, pass: bool) -> Self {
        self.status = Some(if pass { "pass" } else { "fail" });
        self
    }
}

/// Collects a command's standard output in the requested format. Nothing is
/// written until [`Emitter::finish`], so a command that fails halfway leaves
/// standard output empty.
pub struct Emitter {
    format: Format,
    lines: Vec<String>,
    csv: csv::Writer<Vec<u8>>,
}

impl Emitter {
    pub fn new(format: Format) -> Self {
        let csv = csv::WriterBuilder::new()
            .flexible(true)
            .has_headers(false)
            .from_writer(Vec::new());
        Emitter {
            format,
            lines: Vec::new(),
            csv,
        }
    }

    /// `plain` is the human line, `csv_fields` the csv row; json uses `rec`.
    pub fn emit(&mut self, rec: Record, plain: String, csv_fields: Vec<String>) {
        match self.format {
            Format::Plain => self.lines.push(plain),
            Format::Csv => self
                .csv
                .write_record(&csv_fields)
                .expect("writing csv to memory"),
            Format::Json => self
                .lines
                .push(serde_json::to_string(&rec).expect("records always serialize")),
        }
    }

    /// Extra human-readable line shown in plain mode only.
    pub fn note(&mut self, plain: String) {
        if self.format == Format::Plain {
            self.lines.push(plain);
        }
    }

    pub fn finish(self) -> io::Result<()> {
        let mut stdout = io::stdout().lock();
        match self.format {
            Format::Csv => {
                let bytes = self.csv.into_inner().map_err(|e| e.into_error())?;
                stdout.write_all(&bytes)?;
            }
            _ => {
                for line in self.lines {
                    writeln!(stdout, "{line}")?;
                }
            }
        }
        stdout.flush()
    }
}
