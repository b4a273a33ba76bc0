//! Command-line front end. `run` is the whole program minus process I/O.
//!
//! Exit codes: 0 success, 1 a check came out false (or a reproduction
//! differs from its expectation), 2 the input could not be processed.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::array::{
    irredundant_violation, max_strength, min_distance,
    min_distance_by_weights, strength_violation, OrthogonalArray, OrthogonalPartition,
    DEFAULT_PAIR_BUDGET,
};
use crate::codes::{classify, linear_code_of};
use crate::construct::{
    expansive_replace, fold_mod2, ic_saturated_columns, kronecker_product, linear_oa,
    macneish_moment_curve, repetition_oa, vandermonde_columns,
};
use crate::error::{Error, Result};
use crate::format::{parse_document, parse_oa, parse_partition, write_oa, Document};
use crate::quantum::{build_nqmds, certify_qecc};
use crate::reproduce;
use crate::SCHEMA;

#[derive(Parser, Debug)]
#[command(name = "oa-codes", version, about = "Orthogonal arrays, classical codes and quantum codes")]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Maximum number of row pairs the pairwise distance scan may examine.
    #[arg(long, global = true, default_value_t = DEFAULT_PAIR_BUDGET)]
    pub pair_budget: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build an array and write it in `oa v1` format.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
        /// Output file (default: stdout).
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Check a property of an array.
    Verify {
        #[command(subcommand)]
        check: VerifyCheck,
    },
    /// Classify the linear code spanned by an array's rows or given by a generator file.
    Classify { input: PathBuf },
    /// Certify the quantum code of an array and an orthogonal partition.
    Certify {
        input: PathBuf,
        /// Partition file; defaults to a single block at the array's maximum strength.
        #[arg(long)]
        partition: Option<PathBuf>,
    },
    /// Regenerate a worked example or table and diff it against the bundled expectation.
    Reproduce {
        /// example1, example2, example3 or table2:k1 … table2:k5.
        target: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum ConstructKind {
    /// Linear array from a `gen v1` generator file.
    Linear { generator: PathBuf },
    /// Linear array from the saturated columns over GF(s)^m.
    Ic {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        m: usize,
    },
    /// Linear array from moment-curve columns.
    Vandermonde {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// OA(s^k, n, s, k) for any s via prime-power factors.
    Macneish {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// OA(s, n, s, 1) with equal columns.
    Repetition {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        n: usize,
    },
    /// Folded array behind the ((2k+1, 1, k+1)) code.
    Nqmds {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        k: usize,
    },
    Kronecker {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Replace column `col` of `a` by the columns of `b`.
    Replace {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        col: usize,
        #[arg(long)]
        b: PathBuf,
    },
    /// Reduce column `col` modulo 2.
    Fold {
        input: PathBuf,
        #[arg(long)]
        col: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyCheck {
    /// Every t columns contain each level combination equally often.
    Strength {
        input: PathBuf,
        #[arg(long)]
        t: usize,
    },
    MaxStrength { input: PathBuf },
    /// Minimum Hamming distance between rows.
    Md { input: PathBuf },
    /// Rows stay pairwise distinct after deleting any k columns.
    Irredundant {
        input: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Every block of the partition is an OA of the claimed strength.
    Partition {
        input: PathBuf,
        #[arg(long)]
        partition: PathBuf,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Exit code for an error: 1 when an object lacks a property, 2 when the request is unusable.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Unconstructible(_)
        | Error::PartitionInvalid(_)
        | Error::NotIrredundant(_)
        | Error::InsufficientStrength(_)
        | Error::NotLinear(_)
        | Error::RankDeficient { .. }
        | Error::OracleDisagreement(_) => 1,
        Error::DistanceUnavailable(inner) => exit_code(inner),
        _ => 2,
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cli.threads {
        pool = pool.num_threads(t);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => return failure(2, format!("cannot start worker threads: {e}")),
    };
    match pool.install(|| execute(&cli)) {
        Ok(Response { holds, report, raw }) => {
            let stdout = match raw {
                Some(text) => text,
                None => render(&report, cli.format),
            };
            Outcome { code: if holds { 0 } else { 1 }, stdout, stderr: String::new() }
        }
        Err(e) => failure(exit_code(&e), format!("error: {e}\n")),
    }
}

fn failure(code: i32, stderr: String) -> Outcome {
    Outcome { code, stdout: String::new(), stderr }
}

struct Response {
    holds: bool,
    report: Value,
    /// Printed verbatim instead of the report.
    raw: Option<String>,
}

fn report(kind: &str, body: Value) -> Value {
    let mut m = Map::new();
    m.insert("schema".into(), SCHEMA.into());
    m.insert("kind".into(), kind.into());
    if let Value::Object(b) = body {
        m.extend(b);
    }
    Value::Object(m)
}

fn render(v: &Value, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(v).expect("report serializes");
            s.push('\n');
            s
        }
        OutputFormat::Text => {
            let mut out = String::new();
            flatten("", v, &mut out);
            out
        }
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(m) => {
            for (k, v) in m {
                flatten(&key(k), v, out);
            }
        }
        Value::Array(a) if a.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, v) in a.iter().enumerate() {
                flatten(&key(&i.to_string()), v, out);
            }
        }
        Value::Array(a) => {
            let items: Vec<String> = a.iter().map(scalar).collect();
            let _ = writeln!(out, "{prefix}: {}", items.join(" "));
        }
        _ => {
            let _ = writeln!(out, "{prefix}: {}", scalar(v));
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| {
        Error::InvalidInput(format!("cannot read {}: {e}", path.display()))
    })
}

fn load_oa(path: &Path) -> Result<OrthogonalArray> {
    parse_oa(&read(path)?).map_err(|e| in_file(path, e))
}

fn in_file(path: &Path, e: Error) -> Error {
    match e {
        Error::Parse { line, msg } => Error::Parse {
            line,
            msg: format!("{}: {msg}", path.display()),
        },
        other => other,
    }
}

fn execute(cli: &Cli) -> Result<Response> {
    let budget = cli.pair_budget;
    match &cli.command {
        Command::Construct { kind, output } => {
            let a = construct(kind)?;
            let text = write_oa(&a);
            match output {
                None => Ok(Response { holds: true, report: Value::Null, raw: Some(text) }),
                Some(path) => {
                    fs::write(path, text)?;
                    Ok(Response {
                        holds: true,
                        report: report(
                            "construction",
                            json!({
                                "output": path.display().to_string(),
                                "runs": a.runs(),
                                "columns": a.cols(),
                                "levels": a.level_profile(),
                                "provenance": a.provenance(),
                            }),
                        ),
                        raw: None,
                    })
                }
            }
        }
        Command::Verify { check } => verify(check, budget),
        Command::Classify { input } => {
            let g = match parse_document(&read(input)?).map_err(|e| in_file(input, e))? {
                Document::Generator(g) => g,
                Document::Array(a) => linear_code_of(&a)?,
            };
            let r = classify(&g)?;
            Ok(Response {
                holds: true,
                report: report("classification", serde_json::to_value(r).expect("serializes")),
                raw: None,
            })
        }
        Command::Certify { input, partition } => {
            let a = load_oa(input)?;
            let p = match partition {
                Some(path) => parse_partition(&read(path)?).map_err(|e| in_file(path, e))?,
                None => OrthogonalPartition::trivial(a.runs(), max_strength(&a)),
            };
            let c = certify_qecc(&a, &p, budget)?;
            Ok(Response {
                holds: true,
                report: report("certificate", serde_json::to_value(c).expect("serializes")),
                raw: None,
            })
        }
        Command::Reproduce { target } => {
            let (actual, diffs) = reproduce::check(target)?;
            let mut v = actual;
            v["matches_expectation"] = diffs.is_empty().into();
            v["differences"] = diffs.clone().into();
            Ok(Response { holds: diffs.is_empty(), report: v, raw: None })
        }
    }
}

fn construct(kind: &ConstructKind) -> Result<OrthogonalArray> {
    match kind {
        ConstructKind::Linear { generator } => {
            match parse_document(&read(generator)?).map_err(|e| in_file(generator, e))? {
                Document::Generator(g) => linear_oa(&g),
                Document::Array(_) => Err(Error::InvalidInput(format!(
                    "{} is an array file; expected a `gen v1` generator",
                    generator.display()
                ))),
            }
        }
        ConstructKind::Ic { s, m } => linear_oa(&ic_saturated_columns(*s, *m)?),
        ConstructKind::Vandermonde { s, k, n } => linear_oa(&vandermonde_columns(*s, *k, *n)?),
        ConstructKind::Macneish { s, k, n } => macneish_moment_curve(*s, *k, *n),
        ConstructKind::Repetition { s, n } => repetition_oa(*s, *n),
        ConstructKind::Nqmds { s, k } => build_nqmds(*s, *k).map(|(a, _)| a),
        ConstructKind::Kronecker { a, b } => kronecker_product(&load_oa(a)?, &load_oa(b)?),
        ConstructKind::Replace { a, col, b } => expansive_replace(&load_oa(a)?, *col, &load_oa(b)?),
        ConstructKind::Fold { input, col } => fold_mod2(&load_oa(input)?, *col),
    }
}

fn verify(check: &VerifyCheck, budget: u64) -> Result<Response> {
    let (holds, body) = match check {
        VerifyCheck::Strength { input, t } => {
            let a = load_oa(input)?;
            let violation = strength_violation(&a, *t);
            (
                violation.is_none(),
                json!({ "check": "strength", "t": t, "holds": violation.is_none(), "violating_columns": violation }),
            )
        }
        VerifyCheck::MaxStrength { input } => {
            let a = load_oa(input)?;
            (true, json!({ "check": "max-strength", "max_strength": max_strength(&a) }))
        }
        VerifyCheck::Md { input } => {
            let a = load_oa(input)?;
            let method = if min_distance_by_weights(&a).is_some() { "weights" } else { "pairwise" };
            let md = min_distance(&a, budget)?;
            (
                true,
                json!({ "check": "md", "min_distance": md, "method": method, "duplicate_rows": md == 0 }),
            )
        }
        VerifyCheck::Irredundant { input, k } => {
            let a = load_oa(input)?;
            let violation = irredundant_violation(&a, *k);
            (
                violation.is_none(),
                json!({ "check": "irredundant", "k": k, "holds": violation.is_none(), "colliding_projection": violation }),
            )
        }
        VerifyCheck::Partition { input, partition } => {
            let a = load_oa(input)?;
            let p = parse_partition(&read(partition)?).map_err(|e| in_file(partition, e))?;
            let result = p.check(&a);
            (
                result.is_ok(),
                json!({
                    "check": "partition",
                    "blocks": p.block_count(),
                    "strength": p.strength,
                    "holds": result.is_ok(),
                    "failure": result.err(),
                }),
            )
        }
    };
    Ok(Response { holds, report: report("verification", body), raw: None })
}
