//! The `semirank` command line.
//!
//! Exit codes: 0 on success (including an inconclusive conjecture search or a
//! rank report with budget-flagged bounds), 1 on usage, input or validation
//! errors, 2 when the upper-rank conjecture is refuted.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::brandt::build_brandt;
use crate::endo::{
    enumerate_endomorphisms_oracle, enumerate_endomorphisms_structural, Endomorphism,
};
use crate::error::{Error, Result};
use crate::par::{Budget, Execution, SearchConfig};
use crate::ranks::{rank_report, verify_conjecture, RankSelection, Verdict};
use crate::semigroup::{parse_table, write_table, SemigroupTable};
use crate::verify::{run_checks, Status};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_REFUTED: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "semirank",
    version,
    about = "Brandt semigroups, their endomorphism monoids and the ranks r1..r5 of finite semigroups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the Cayley table of the Brandt semigroup B_n
    Brandt {
        #[arg(long)]
        n: u32,
        /// Write the table here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate End(B_n); with --out also writes PATH.json describing each element
    Endo {
        #[arg(long)]
        n: u32,
        /// Use the backtracking enumeration instead of the structural one (n <= 3)
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Compute r1..r5 of End(B_n) (--n) or of any semigroup table (--table)
    Ranks {
        #[arg(long, conflicts_with = "table", required_unless_present = "table")]
        n: Option<u32>,
        /// Cayley-table text file: N, then N rows of 0-based products, then optional labels
        #[arg(long)]
        table: Option<PathBuf>,
        /// Comma-separated subset of r1,r2,r3,r4,r5
        #[arg(long, default_value = "r1,r2,r3,r4,r5")]
        which: String,
        #[command(flatten)]
        common: Common,
    },
    /// Recompute every stated fact about End(B_n), one PASS/FAIL/SKIPPED line each
    Verify {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Search for an independent subset of End(B_n) with more than n + 2 elements
    Conjecture {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    /// Wall-clock budget in seconds, shared by all searches of the command
    #[arg(long, default_value_t = 60.0, value_parser = positive_seconds)]
    pub budget: f64,
    /// Emit JSON instead of text
    #[arg(long)]
    pub json: bool,
    /// Write the output here instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Run searches on the calling thread only
    #[arg(long)]
    pub sequential: bool,
}

impl Common {
    fn config(&self) -> SearchConfig {
        let execution = if self.sequential {
            Execution::Sequential
        } else {
            Execution::Parallel
        };
        SearchConfig::new(Budget::seconds(self.budget), execution)
    }
}

fn positive_seconds(s: &str) -> std::result::Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("{s:?} is not a number"))?;
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err("budget must be a positive number of seconds".into())
    }
}

/// Parses `args` (including the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn json_text<T: serde::Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Brandt { n, out: path } => {
            let table = build_brandt(n)?;
            emit(out, path.as_deref(), &write_table(&table))?;
            let line = format!("|B_{n}| = {}", table.size());
            if path.is_some() {
                writeln!(out, "{line}")?;
            } else {
                writeln!(err, "{line}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Endo {
            n,
            oracle,
            out: path,
            json,
        } => {
            let m = enumerate_endomorphisms_structural(n)?;
            if oracle {
                let found = enumerate_endomorphisms_oracle(n)?;
                let same =
                    found.len() == m.len() && found.iter().zip(m.elements()).all(|(a, b)| a == b);
                if !same {
                    return Err(Error::Certificate(format!(
                        "oracle found {} endomorphisms, structural enumeration {}",
                        found.len(),
                        m.len()
                    )));
                }
                writeln!(
                    err,
                    "oracle enumeration agrees: {} endomorphisms",
                    found.len()
                )?;
            }
            let sidecar = m.sidecar();
            if let Some(p) = &path {
                fs::write(p, write_table(m.table()))?;
                let mut side = p.clone().into_os_string();
                side.push(".json");
                fs::write(PathBuf::from(side), json_text(&sidecar)?)?;
            }
            if json {
                out.write_all(json_text(&sidecar)?.as_bytes())?;
            } else {
                let count =
                    |f: fn(&Endomorphism) -> bool| m.elements().iter().filter(|e| f(e)).count();
                writeln!(out, "|End(B_{n})| = {}", m.len())?;
                writeln!(
                    out,
                    "automorphisms: {}",
                    count(|e| e.tag().is_automorphism())
                )?;
                writeln!(
                    out,
                    "nonzero constants: {}",
                    count(|e| e.tag().is_nonzero_constant())
                )?;
                writeln!(out, "zero constant: {}", count(|e| e.tag().is_zero()))?;
                if path.is_none() {
                    writeln!(
                        out,
                        "elements: {}",
                        m.table().labels_of(&m.table().full_set()).join(" ")
                    )?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Ranks {
            n,
            table,
            which,
            common,
        } => {
            let selection: RankSelection = which.parse()?;
            let config = common.config();
            let (table, n): (SemigroupTable, Option<u32>) = match (n, table) {
                (Some(n), None) => (
                    enumerate_endomorphisms_structural(n)?.table().clone(),
                    Some(n),
                ),
                (None, Some(path)) => (parse_table(&fs::read_to_string(&path)?)?, None),
                _ => {
                    return Err(Error::InvalidInput(
                        "give exactly one of --n and --table".into(),
                    ))
                }
            };
            let report = rank_report(&table, n, &config, selection)?;
            let text = if common.json {
                json_text(&report.to_json())?
            } else {
                report.render_text()
            };
            emit(out, common.out.as_deref(), &text)?;
            if report.budget_exhausted() {
                writeln!(
                    err,
                    "budget exhausted: some ranks are bounds, not exact values"
                )?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify { n, common } => {
            let checks = run_checks(n, &common.config())?;
            let text = if common.json {
                json_text(&checks)?
            } else {
                checks.iter().map(|c| format!("{c}\n")).collect()
            };
            emit(out, common.out.as_deref(), &text)?;
            let failed = checks.iter().filter(|c| c.status == Status::Fail).count();
            if failed > 0 {
                writeln!(err, "{failed} check(s) failed")?;
                Ok(EXIT_ERROR)
            } else {
                Ok(EXIT_OK)
            }
        }
        Command::Conjecture { n, common } => {
            let report = verify_conjecture(n, &common.config())?;
            let text = if common.json {
                json_text(&report)?
            } else {
                let mut s = format!(
                    "n = {n}, predicted r4 = {}\nverdict: {}\n",
                    report.predicted,
                    serde_json::to_value(report.verdict)?
                        .as_str()
                        .unwrap_or_default()
                );
                let kind = if report.exact {
                    "r4"
                } else {
                    "best lower bound"
                };
                s += &format!(
                    "{kind} = {} ({} search nodes, {:.2}s)\n",
                    report.upper_rank, report.nodes, report.seconds
                );
                s += &format!(
                    "largest independent set: {{{}}}\n",
                    report.witness.join(", ")
                );
                s
            };
            emit(out, common.out.as_deref(), &text)?;
            Ok(if report.verdict == Verdict::RefutedWithWitness {
                EXIT_REFUTED
            } else {
                EXIT_OK
            })
        }
    }
}
