//! Parsers for the reference fixtures shipped under `fixtures/`, plus the
//! comparison logic behind the CLI `oeis-check` subcommand.
//!
//! Two file shapes are understood:
//! - triangle CSV: `n,k,value` per line, `#` comments and blank lines skipped
//! - b-file: `index value` per line, same comment rules

use crate::arith::{format_rat, Int, Rat};
use crate::bernoulli::bernoulli2_from_stirling;
use crate::error::Error;
use crate::stirling::StirlingTriangle;
use std::path::Path;
use std::str::FromStr;

/// What a fixture file claims to contain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum FixtureKind {
    /// Triangle CSV of signed Stirling numbers of the first kind.
    Stirling,
    /// b-file of Bernoulli-second-kind numerators.
    Bernoulli2Num,
    /// b-file of Bernoulli-second-kind denominators.
    Bernoulli2Den,
}

/// One `n,k,value` triple from a triangle CSV.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleEntry {
    pub n: usize,
    pub k: usize,
    pub value: Int,
}

/// One `index value` pair from a b-file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfileEntry {
    pub index: usize,
    pub value: Int,
}

fn fixture_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Fixture { line, msg: msg.into() }
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_stirling_csv(text: &str) -> Result<Vec<TriangleEntry>, Error> {
    let mut out = Vec::new();
    for (line, content) in data_lines(text) {
        let mut fields = content.split(',');
        let n = fields
            .next()
            .ok_or_else(|| fixture_err(line, "missing n field"))?
            .trim();
        let k = fields
            .next()
            .ok_or_else(|| fixture_err(line, "missing k field"))?
            .trim();
        let value = fields
            .next()
            .ok_or_else(|| fixture_err(line, "missing value field"))?
            .trim();
        if fields.next().is_some() {
            return Err(fixture_err(line, "expected exactly three fields"));
        }
        let n: usize = n
            .parse()
            .map_err(|_| fixture_err(line, format!("bad n '{n}'")))?;
        let k: usize = k
            .parse()
            .map_err(|_| fixture_err(line, format!("bad k '{k}'")))?;
        let value =
            Int::from_str(value).map_err(|_| fixture_err(line, format!("bad value '{value}'")))?;
        if k > n {
            return Err(fixture_err(line, format!("k={k} exceeds n={n}")));
        }
        out.push(TriangleEntry { n, k, value });
    }
    if out.is_empty() {
        return Err(fixture_err(0, "no data lines"));
    }
    Ok(out)
}

pub fn parse_bfile(text: &str) -> Result<Vec<BfileEntry>, Error> {
    let mut out = Vec::new();
    for (line, content) in data_lines(text) {
        let mut fields = content.split_whitespace();
        let index = fields
            .next()
            .ok_or_else(|| fixture_err(line, "missing index field"))?;
        let value = fields
            .next()
            .ok_or_else(|| fixture_err(line, "missing value field"))?;
        if fields.next().is_some() {
            return Err(fixture_err(line, "expected exactly two fields"));
        }
        let index: usize = index
            .parse()
            .map_err(|_| fixture_err(line, format!("bad index '{index}'")))?;
        let value =
            Int::from_str(value).map_err(|_| fixture_err(line, format!("bad value '{value}'")))?;
        out.push(BfileEntry { index, value });
    }
    if out.is_empty() {
        return Err(fixture_err(0, "no data lines"));
    }
    Ok(out)
}

/// Result of checking a fixture against freshly computed values.
#[derive(Debug, Clone)]
pub struct FixtureReport {
    pub kind: FixtureKind,
    pub entries: usize,
    /// `(description, fixture value, computed value)` per disagreement.
    pub mismatches: Vec<(String, String, String)>,
}

impl FixtureReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Parse `path` as `kind` and compare every entry against this library.
pub fn check_fixture(path: &Path, kind: FixtureKind) -> Result<FixtureReport, Error> {
    let text = std::fs::read_to_string(path)?;
    match kind {
        FixtureKind::Stirling => {
            let entries = parse_stirling_csv(&text)?;
            let n_max = entries.iter().map(|e| e.n).max().unwrap_or(0);
            let st = StirlingTriangle::new(n_max);
            let mut mismatches = Vec::new();
            for e in &entries {
                let computed = st.get(e.n, e.k);
                if computed != e.value {
                    mismatches.push((
                        format!("s({}, {})", e.n, e.k),
                        e.value.to_string(),
                        computed.to_string(),
                    ));
                }
            }
            Ok(FixtureReport { kind, entries: entries.len(), mismatches })
        }
        FixtureKind::Bernoulli2Num | FixtureKind::Bernoulli2Den => {
            let entries = parse_bfile(&text)?;
            let mut mismatches = Vec::new();
            for e in &entries {
                let b: Rat = bernoulli2_from_stirling(e.index);
                let computed = match kind {
                    FixtureKind::Bernoulli2Num => b.numer().clone(),
                    _ => b.denom().clone(),
                };
                if computed != e.value {
                    let part = if kind == FixtureKind::Bernoulli2Num { "numer" } else { "denom" };
                    mismatches.push((
                        format!("{part}(b_{}) (b_{} = {})", e.index, e.index, format_rat(&b)),
                        e.value.to_string(),
                        computed.to_string(),
                    ));
                }
            }
            Ok(FixtureReport { kind, entries: entries.len(), mismatches })
        }
    }
}
