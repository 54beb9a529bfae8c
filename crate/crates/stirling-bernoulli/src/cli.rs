//! Command-line interface. Exit codes: 0 on success, 1 when a verification
//! or fixture comparison fails, 2 on usage or input errors.

use crate::arith::format_rat;
use crate::bernoulli::{bernoulli2_from_coeffs, bernoulli2_from_stirling};
use crate::coeffs::CoeffTable;
use crate::error::Error;
use crate::fixture::{check_fixture, FixtureKind};
use crate::output::{plain_row, render_records, Format, OutputRecord, RecordKind, Status};
use crate::series::bernoulli2_from_series;
use crate::stirling::StirlingTriangle;
use crate::verify;
use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "stirling-bernoulli",
    version,
    about = "Exact Stirling / Bernoulli-second-kind tables with cross-checked verification"
)]
struct Cli {
    /// Output format (also read from STIRLING_BERNOULLI_FORMAT).
    #[arg(long, global = true, value_enum, env = "STIRLING_BERNOULLI_FORMAT", default_value = "plain")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a number triangle row by row.
    Table {
        /// Which triangle to print.
        #[arg(value_enum)]
        which: Triangle,
        /// Largest row index n (must be at least 1).
        #[arg(long, default_value_t = 10)]
        n_max: usize,
    },
    /// Compute a Bernoulli number of the second kind.
    Bernoulli2 {
        /// Index n of the number to compute.
        #[arg(long)]
        n: usize,
        /// Computation route, or `all` to cross-check every route.
        #[arg(long, value_enum, default_value = "all")]
        method: Method,
    },
    /// Run cross-validation suites and report one line per check.
    Verify {
        /// Which suite to run.
        #[arg(value_enum, default_value = "all")]
        suite: Suite,
        /// Override the default sweep range of the suite.
        #[arg(long)]
        n_max: Option<usize>,
        /// Override the default float tolerance of the suite.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Compare computed values against a reference fixture file.
    OeisCheck {
        /// Path to the fixture file.
        #[arg(long)]
        fixture: PathBuf,
        /// How to interpret the fixture.
        #[arg(long, value_enum)]
        kind: FixtureKind,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Triangle {
    /// Signed Stirling numbers of the first kind s(n, k).
    Stirling,
    /// Derivative coefficients a(n, i) of the reciprocal logarithm.
    Coeffs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Coeff,
    Stirling,
    Series,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Core,
    Derivatives,
    GammaIntegral,
    StieltjesIntegral,
    Conjecture,
    All,
}

/// Parse `std::env::args` and run. Returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Table { which, n_max } => table(which, n_max, cli.format),
        Command::Bernoulli2 { n, method } => bernoulli2(n, method, cli.format),
        Command::Verify { suite, n_max, tol } => run_verify(suite, n_max, tol, cli.format),
        Command::OeisCheck { fixture, kind } => oeis_check(&fixture, kind, cli.format),
    }
}

fn table(which: Triangle, n_max: usize, format: Format) -> Result<i32, Error> {
    if n_max == 0 {
        return Err(Error::Config("--n-max must be at least 1".into()));
    }
    let mut records = Vec::new();
    let mut plain = String::new();
    match which {
        Triangle::Stirling => {
            let st = StirlingTriangle::new(n_max);
            for n in 0..=n_max {
                let row: Vec<String> = st.row(n).iter().map(|v| v.to_string()).collect();
                plain.push_str(&plain_row(n, &row));
                plain.push('\n');
                for (k, value) in row.into_iter().enumerate() {
                    records.push(OutputRecord::ok(RecordKind::Stirling, vec![n as i64, k as i64], value));
                }
            }
        }
        Triangle::Coeffs => {
            let table = CoeffTable::new(n_max);
            for n in 1..=n_max {
                let row: Vec<String> = table.row(n).iter().map(|v| v.to_string()).collect();
                plain.push_str(&plain_row(n, &row));
                plain.push('\n');
                for (offset, value) in row.into_iter().enumerate() {
                    let i = offset + 2;
                    records.push(OutputRecord::ok(RecordKind::Coeff, vec![n as i64, i as i64], value));
                }
            }
        }
    }
    match format {
        Format::Plain => print!("{plain}"),
        other => print!("{}", render_records(&records, other)),
    }
    Ok(0)
}

fn bernoulli2(n: usize, method: Method, format: Format) -> Result<i32, Error> {
    let routes: Vec<(&str, String)> = match method {
        Method::Coeff => vec![("coeff", format_rat(&bernoulli2_from_coeffs(n)))],
        Method::Stirling => vec![("stirling", format_rat(&bernoulli2_from_stirling(n)))],
        Method::Series => {
            let all = bernoulli2_from_series(n);
            vec![("series", format_rat(&all[n]))]
        }
        Method::All => {
            let series = bernoulli2_from_series(n);
            vec![
                ("coeff", format_rat(&bernoulli2_from_coeffs(n))),
                ("stirling", format_rat(&bernoulli2_from_stirling(n))),
                ("series", format_rat(&series[n])),
            ]
        }
    };
    let agree = routes.iter().all(|(_, v)| v == &routes[0].1);
    let status = if agree { Status::Ok } else { Status::Mismatch };

    match format {
        Format::Plain => {
            if routes.len() == 1 {
                println!("{}", routes[0].1);
            } else {
                for (name, value) in &routes {
                    println!("{name} {value}");
                }
                println!("status {}", if agree { "ok" } else { "mismatch" });
            }
        }
        other => {
            let records: Vec<OutputRecord> = routes
                .iter()
                .map(|(_, value)| OutputRecord {
                    kind: RecordKind::Bernoulli2,
                    indices: vec![n as i64],
                    value: value.clone(),
                    status,
                })
                .collect();
            print!("{}", render_records(&records, other));
        }
    }
    Ok(if agree { 0 } else { 1 })
}

fn run_verify(suite: Suite, n_max: Option<usize>, tol: Option<f64>, format: Format) -> Result<i32, Error> {
    let checks = match suite {
        Suite::Core => verify::core_suite(n_max.unwrap_or(25)),
        Suite::Derivatives => verify::derivatives_suite(n_max.unwrap_or(10), tol),
        Suite::GammaIntegral => verify::gamma_integral_suite(n_max.unwrap_or(12), tol),
        Suite::StieltjesIntegral => verify::stieltjes_suite(n_max.unwrap_or(5), tol),
        Suite::Conjecture => verify::conjecture_suite(n_max.unwrap_or(40)),
        Suite::All => verify::all_suites(n_max, tol),
    };
    let failed = checks.iter().filter(|c| !c.passed).count();

    match format {
        Format::Plain => {
            for check in &checks {
                println!("{}", check.render());
            }
            if failed == 0 {
                println!("all {} checks passed", checks.len());
            } else {
                println!("{failed} of {} checks failed", checks.len());
            }
        }
        other => {
            let records: Vec<OutputRecord> = checks
                .iter()
                .map(|c| OutputRecord {
                    kind: RecordKind::VerifyReport,
                    indices: Vec::new(),
                    value: c.render(),
                    status: if c.passed { Status::Ok } else { Status::Mismatch },
                })
                .collect();
            print!("{}", render_records(&records, other));
        }
    }
    Ok(if failed == 0 { 0 } else { 1 })
}

fn oeis_check(path: &std::path::Path, kind: FixtureKind, format: Format) -> Result<i32, Error> {
    let report = check_fixture(path, kind)?;
    let summary = if report.passed() {
        format!("checked {} entries: all match", report.entries)
    } else {
        format!("{} of {} entries mismatch", report.mismatches.len(), report.entries)
    };

    match format {
        Format::Plain => {
            for (what, fixture, computed) in &report.mismatches {
                println!("mismatch {what}: fixture {fixture}, computed {computed}");
            }
            println!("{summary}");
        }
        other => {
            let mut records: Vec<OutputRecord> = report
                .mismatches
                .iter()
                .map(|(what, fixture, computed)| OutputRecord {
                    kind: RecordKind::VerifyReport,
                    indices: Vec::new(),
                    value: format!("{what}: fixture {fixture}, computed {computed}"),
                    status: Status::Mismatch,
                })
                .collect();
            records.push(OutputRecord {
                kind: RecordKind::VerifyReport,
                indices: Vec::new(),
                value: summary,
                status: if report.passed() { Status::Ok } else { Status::Mismatch },
            });
            print!("{}", render_records(&records, other));
        }
    }
    Ok(if report.passed() { 0 } else { 1 })
}
