//! Output formatting for the command-line interface: one record type that
//! renders as aligned plain text, headerless CSV, or a JSON array.

use serde::{Deserialize, Serialize};

/// Output format selector, also used by the CLI `--format` flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

/// One row of CLI output. `indices` carries whatever coordinates the record
/// has (a single n, or an (n, k) pair); `value` is already rendered exactly.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub struct OutputRecord {
    pub kind: RecordKind,
    pub indices: Vec<i64>,
    pub value: String,
    pub status: Status,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum RecordKind {
    Stirling,
    Coeff,
    Bernoulli2,
    VerifyReport,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Mismatch,
    Error,
}

impl OutputRecord {
    pub fn ok(kind: RecordKind, indices: Vec<i64>, value: impl Into<String>) -> Self {
        OutputRecord { kind, indices, value: value.into(), status: Status::Ok }
    }

    /// CSV line: indices then value, comma-separated, no header.
    pub fn csv_line(&self) -> String {
        let mut fields: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
        fields.push(self.value.clone());
        fields.join(",")
    }
}

/// Render a list of records in the requested format. Plain output groups
/// nothing; callers wanting table-shaped plain text render it themselves.
pub fn render_records(records: &[OutputRecord], format: Format) -> String {
    match format {
        Format::Plain => {
            let mut out = String::new();
            for r in records {
                let idx: Vec<String> = r.indices.iter().map(|i| i.to_string()).collect();
                out.push_str(&format!("{} {}\n", idx.join(" "), r.value));
            }
            out
        }
        Format::Csv => {
            let mut out = String::new();
            for r in records {
                out.push_str(&r.csv_line());
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let mut out = serde_json::to_string_pretty(records).expect("records serialize");
            out.push('\n');
            out
        }
    }
}

/// Plain-text triangle row, e.g. `n=5: 24 100 210 240 120`.
pub fn plain_row(n: usize, values: &[String]) -> String {
    format!("n={}: {}", n, values.join(" "))
}
