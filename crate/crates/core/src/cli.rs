//! Command-line front end. [`dispatch`] parses arguments, runs one verb and
//! returns the process exit status: 0 on success, 1 when a verification
//! fails, 2 on a usage error.

use std::ffi::OsString;
use std::io::Write;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Number, Value};

use crate::bijection::{backward, forward, BijectionId};
use crate::error::Error;
use crate::family::{build_family, build_over_family, FamilyId};
use crate::report::CheckReport;
use crate::sequence::{seq_range, write_bfile, SequenceId};
use crate::series::{closed_form_series, compare_series_to_sequence};
use crate::verify::{Oracle, Verifier, DEFAULT_ORACLE_BOUND};

#[derive(Parser, Debug)]
#[command(name = "selfsim", version, about = "Partition families counted by self-similar recurrences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print sequence values.
    Seq {
        id: String,
        #[arg(long)]
        from: Option<u64>,
        #[arg(long)]
        to: u64,
        #[arg(long, value_enum, default_value_t = Format::Bfile)]
        format: Format,
    },
    /// List the members of a family.
    Set {
        family: String,
        n: u64,
        /// Filter all partitions by the non-recursive description instead.
        #[arg(long)]
        predicate: bool,
        #[arg(long)]
        json: bool,
    },
    /// Apply a bijection to a partition written like "5+4" or "4*+1".
    Map {
        bijection: String,
        input: String,
        #[arg(long)]
        backward: bool,
    },
    /// Expand a closed-form generating function.
    Gf {
        id: String,
        #[arg(long)]
        order: usize,
        /// Compare with the recurrence instead of printing coefficients.
        #[arg(long)]
        compare: bool,
    },
    /// Run one registered check, or `all` suites.
    Verify {
        check: String,
        #[arg(long = "max-n")]
        max_n: u64,
        #[arg(long = "oracle-bound", default_value_t = DEFAULT_ORACLE_BOUND)]
        oracle_bound: u64,
        #[arg(long)]
        json: bool,
    },
    /// Compare a family with its brute-force filter for every weight up to the bound.
    Oracle {
        family: String,
        #[arg(long = "max-n")]
        max_n: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Bfile,
    Csv,
    Json,
}

enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

type Outcome = Result<bool, Failure>;

/// Runs the command line `args` (including the program name), writing
/// results to `out` and diagnostics to `err`.
pub fn dispatch<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match run(cli.command, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn parse<T: FromStr<Err = Error>>(s: &str) -> Result<T, Failure> {
    Ok(s.parse()?)
}

fn big(v: impl ToString) -> Result<Value, Failure> {
    let n = Number::from_str(&v.to_string()).map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(Value::Number(n))
}

fn run(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Seq { id, from, to, format } => {
            let id: SequenceId = parse(&id)?;
            let from = from.unwrap_or(id.min_index());
            match format {
                Format::Bfile => write_bfile(id, from, to, out).map_err(|e| match e.into_inner() {
                    Some(inner) => Failure::Usage(inner.to_string()),
                    None => Failure::Usage("write failed".into()),
                })?,
                Format::Csv => {
                    let values: Vec<String> = seq_range(id, from, to)?.iter().map(|v| v.to_string()).collect();
                    writeln!(out, "{}", values.join(","))?;
                }
                Format::Json => {
                    let mut rows = Vec::new();
                    for (n, v) in (from..).zip(seq_range(id, from, to)?) {
                        rows.push(json!({ "id": id.tag(), "n": n, "value": big(v)? }));
                    }
                    writeln!(out, "{}", serde_json::to_string(&rows)?)?;
                }
            }
            Ok(true)
        }
        Command::Set { family, n, predicate, json } => {
            let fid: FamilyId = parse(&family)?;
            let members = members(fid, n, predicate)?;
            if json {
                let doc = json!({ "family": fid.tag(), "n": n, "members": members });
                writeln!(out, "{}", serde_json::to_string(&doc)?)?;
            } else {
                for m in members {
                    writeln!(out, "{m}")?;
                }
            }
            Ok(true)
        }
        Command::Map { bijection, input, backward: back } => {
            let bij: BijectionId = parse(&bijection)?;
            let domain = if back { bij.target() } else { bij.source() };
            let x = domain.parse(&input)?;
            let y = if back { backward(bij, &x)? } else { forward(bij, &x)? };
            writeln!(out, "{y}")?;
            Ok(true)
        }
        Command::Gf { id, order, compare } => {
            let id: SequenceId = parse(&id)?;
            if compare {
                let report = compare_series_to_sequence(id, order)?;
                writeln!(out, "{report}")?;
                return Ok(report.passed());
            }
            let series = closed_form_series(id, order)?;
            for (n, c) in series.coeffs().iter().enumerate() {
                writeln!(out, "{n} {c}")?;
            }
            Ok(true)
        }
        Command::Verify { check, max_n, oracle_bound, json } => {
            let verifier = Verifier::new();
            let reports = if check == "all" {
                verifier.run_all(max_n, oracle_bound)
            } else {
                vec![verifier.run_check(&check, max_n)?]
            };
            print_reports(&reports, json, out)
        }
        Command::Oracle { family, max_n } => {
            let fid: FamilyId = parse(&family)?;
            let report = Oracle::new(max_n).check(fid, max_n)?;
            print_reports(&[report], false, out)
        }
    }
}

fn members(fid: FamilyId, n: u64, predicate: bool) -> Result<Vec<String>, Failure> {
    let oracle = Oracle::default();
    Ok(match (fid.is_overpartition(), predicate) {
        (true, true) => oracle.over_family(fid, n)?.to_strings(),
        (true, false) => build_over_family(fid, n)?.to_strings(),
        (false, true) => oracle.family(fid, n)?.to_strings(),
        (false, false) => build_family(fid, n)?.to_strings(),
    })
}

fn print_reports(reports: &[CheckReport], json: bool, out: &mut dyn Write) -> Outcome {
    if json {
        writeln!(out, "{}", serde_json::to_string(reports)?)?;
    } else {
        for r in reports {
            writeln!(out, "{r}")?;
        }
    }
    Ok(reports.iter().all(CheckReport::passed))
}
