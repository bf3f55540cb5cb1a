//! `ncinv` — exact computations for the dihedral invariants of a rank-two
//! free associative algebra: Hilbert series, free-generator extraction,
//! verification suites, and regeneration of the four summary tables.
//!
//! Output is deterministic: identical invocations produce byte-identical
//! bytes. `verify` exits nonzero iff any selected check fails.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ncinv_core::gens::free_generators;
use ncinv_core::hilbert::{generator_series, hilbert_series};
use serde::Serialize;

mod render;
mod tables;
mod verify;

use render::{csv_field, rat_string, word_list};
use tables::{build_tables, leading_csv, series_csv, series_row, LeadingRowJson, SeriesRowJson};
use verify::Which;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Parser)]
#[command(
    name = "ncinv",
    version,
    about = "Exact invariant theory of the dihedral group acting on a rank-two free algebra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert series of the invariants of the dihedral group of order 2n
    Hilbert {
        /// Rotation order n (the group has order 2n)
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..=64))]
        n: u32,
        /// Number of series coefficients to print (0 = function only)
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(0..=200))]
        terms: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Print the canonical normalization instead of the published sign convention
        #[arg(long)]
        canonical: bool,
    },
    /// Generating function of the free generators, optionally with their leading terms
    Gens {
        /// Rotation order n (the group has order 2n)
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..=64))]
        n: u32,
        /// Number of series coefficients to print (0 = function only)
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(0..=200))]
        terms: u32,
        /// Degree cap for extraction (default 8; env NCINV_MAX_DEGREE overrides)
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=12))]
        max_degree: Option<u32>,
        /// Extract the free generators and print their leading terms per degree
        #[arg(long)]
        leading_terms: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Print the canonical normalization instead of the published sign convention
        #[arg(long)]
        canonical: bool,
    },
    /// Re-run the verification suites; exits nonzero if any check fails
    Verify {
        /// Restrict suites to one order n (also caps the minimal-polynomial loops)
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=64))]
        n: Option<u32>,
        /// Degree cap override (env NCINV_MAX_DEGREE also applies)
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=12))]
        max_degree: Option<u32>,
        #[arg(long, value_enum, default_value_t = Which::All)]
        which: Which,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Regenerate the four summary tables (text, CSV files, or one JSON document)
    Tables {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Directory that receives the CSV files
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        /// Emit canonical normalizations instead of the published sign convention
        #[arg(long)]
        canonical: bool,
    },
}

/// Effective degree cap: explicit flag, else `NCINV_MAX_DEGREE`, else none.
fn degree_cap(flag: Option<u32>) -> Result<Option<usize>, String> {
    if let Some(v) = flag {
        return Ok(Some(v as usize));
    }
    match std::env::var("NCINV_MAX_DEGREE") {
        Ok(s) if s.is_empty() => Ok(None),
        Ok(s) => match s.parse::<u32>() {
            Ok(v) if (1..=12).contains(&v) => Ok(Some(v as usize)),
            _ => Err(format!("NCINV_MAX_DEGREE must be an integer in 1..=12, got {s:?}")),
        },
        Err(_) => Ok(None),
    }
}

#[derive(Serialize)]
struct SeriesReport {
    command: &'static str,
    n: usize,
    order: usize,
    display: String,
    series: tables::SeriesJson,
    coefficients: Vec<String>,
    recurrence: tables::RecurrenceJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    degrees: Option<Vec<LeadingRowJson>>,
}

impl SeriesReport {
    fn new(
        command: &'static str,
        row: SeriesRowJson,
        coefficients: Vec<String>,
        degrees: Option<Vec<LeadingRowJson>>,
    ) -> Self {
        SeriesReport {
            command,
            n: row.n,
            order: row.order,
            display: row.display,
            series: row.series,
            coefficients,
            recurrence: row.recurrence,
            degrees,
        }
    }

    fn text(&self, letter: char) -> String {
        let mut out = format!("{letter}_{}(t) = {}\n", self.order, self.display);
        if !self.coefficients.is_empty() {
            out.push_str(&format!("coefficients: {}\n", self.coefficients.join(", ")));
        }
        out.push_str(&format!(
            "recurrence: {}  [valid for indices >= {}]\n",
            self.recurrence.display, self.recurrence.threshold
        ));
        if let Some(rows) = &self.degrees {
            for row in rows {
                let plural = if row.count == 1 { "generator" } else { "generators" };
                if row.count == 0 {
                    out.push_str(&format!("degree {}: 0 generators\n", row.degree));
                } else {
                    out.push_str(&format!(
                        "degree {}: {} {plural}: {}\n",
                        row.degree,
                        row.count,
                        word_list(&row.leading_terms)
                    ));
                }
            }
        }
        out
    }

    fn kv_csv(&self) -> String {
        let mut out = "key,value\n".to_string();
        for (k, v) in [
            ("n", self.n.to_string()),
            ("order", self.order.to_string()),
            ("series", self.display.clone()),
            ("coefficients", self.coefficients.join(", ")),
            ("recurrence", self.recurrence.display.clone()),
            ("threshold", self.recurrence.threshold.to_string()),
        ] {
            out.push_str(&format!("{k},{}\n", csv_field(&v)));
        }
        out
    }
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn hilbert_cmd(n: usize, terms: usize, format: Format, canonical: bool) -> String {
    let h = hilbert_series(n);
    let coefficients = if terms == 0 {
        Vec::new()
    } else {
        h.series_coefficients(terms - 1).iter().map(rat_string).collect()
    };
    let report = SeriesReport::new("hilbert", series_row(n, &h, canonical), coefficients, None);
    match format {
        Format::Text => report.text('H'),
        Format::Csv => report.kv_csv(),
        Format::Json => json_line(&report),
    }
}

fn gens_cmd(
    n: usize,
    terms: usize,
    cap: usize,
    leading: bool,
    format: Format,
    canonical: bool,
) -> String {
    let g = generator_series(n);
    let coefficients = if terms == 0 {
        Vec::new()
    } else {
        g.series_coefficients(terms - 1).iter().map(rat_string).collect()
    };
    let degrees = leading.then(|| {
        let table = free_generators(n, cap);
        table
            .rows()
            .iter()
            .map(|row| LeadingRowJson {
                degree: row.degree,
                count: row.count,
                leading_terms: row.leading_terms.iter().map(|w| w.to_string()).collect(),
            })
            .collect::<Vec<_>>()
    });
    let report = SeriesReport::new("gens", series_row(n, &g, canonical), coefficients, degrees);
    match format {
        Format::Text => report.text('G'),
        Format::Csv => match &report.degrees {
            Some(rows) => leading_csv(rows),
            None => report.kv_csv(),
        },
        Format::Json => json_line(&report),
    }
}

#[derive(Serialize)]
struct VerifyReport {
    command: &'static str,
    checks: Vec<verify::Check>,
    total: usize,
    failed: usize,
}

fn verify_cmd(
    n: Option<usize>,
    cap: Option<usize>,
    which: Which,
    format: Format,
) -> Result<(String, ExitCode), String> {
    let checks = verify::run(which, n, cap)?;
    let failed = checks.iter().filter(|c| !c.pass).count();
    let total = checks.len();
    let out = match format {
        Format::Text => {
            let mut out = String::new();
            for c in &checks {
                out.push_str(&format!(
                    "{}  {}: {}\n",
                    if c.pass { "PASS" } else { "FAIL" },
                    c.suite,
                    c.name
                ));
            }
            out.push_str(&format!(
                "{total} checks, {} passed, {failed} failed\n",
                total - failed
            ));
            out
        }
        Format::Csv => {
            let mut out = "suite,check,result\n".to_string();
            for c in &checks {
                out.push_str(&format!(
                    "{},{},{}\n",
                    c.suite,
                    csv_field(&c.name),
                    if c.pass { "PASS" } else { "FAIL" }
                ));
            }
            out
        }
        Format::Json => json_line(&VerifyReport { command: "verify", checks, total, failed }),
    };
    let code = if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE };
    Ok((out, code))
}

fn tables_cmd(format: Format, out_dir: &PathBuf, canonical: bool) -> Result<String, String> {
    let t = build_tables(canonical);
    match format {
        Format::Text => Ok(tables::tables_text(&t)),
        Format::Json => Ok(json_line(&t)),
        Format::Csv => {
            let files = [
                ("table1.csv", series_csv(&t.table1, "hilbert_series")),
                ("table2.csv", series_csv(&t.table2, "generator_series")),
                ("table3.csv", leading_csv(&t.table3)),
                ("table4.csv", leading_csv(&t.table4)),
            ];
            std::fs::create_dir_all(out_dir)
                .map_err(|e| format!("cannot create {}: {e}", out_dir.display()))?;
            let mut out = String::new();
            for (name, contents) in files {
                let path = out_dir.join(name);
                std::fs::write(&path, contents)
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
                out.push_str(&format!("wrote {}\n", path.display()));
            }
            Ok(out)
        }
    }
}

fn run(cli: Cli) -> Result<(String, ExitCode), String> {
    match cli.command {
        Command::Hilbert { n, terms, format, canonical } => Ok((
            hilbert_cmd(n as usize, terms as usize, format, canonical),
            ExitCode::SUCCESS,
        )),
        Command::Gens { n, terms, max_degree, leading_terms, format, canonical } => {
            let cap = degree_cap(max_degree)?.unwrap_or(8);
            Ok((
                gens_cmd(n as usize, terms as usize, cap, leading_terms, format, canonical),
                ExitCode::SUCCESS,
            ))
        }
        Command::Verify { n, max_degree, which, format } => {
            let cap = degree_cap(max_degree)?;
            verify_cmd(n.map(|v| v as usize), cap, which, format)
        }
        Command::Tables { format, out_dir, canonical } => {
            tables_cmd(format, &out_dir, canonical).map(|out| (out, ExitCode::SUCCESS))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((out, code)) => {
            print!("{out}");
            code
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
