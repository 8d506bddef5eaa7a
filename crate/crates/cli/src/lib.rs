//! Subcommand implementations for the `jhankel` binary.
//!
//! Each command renders into a `String` and returns an exit status, so the
//! binary only has to print and exit.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use jhankel::automaton::kernel_dfao;
use jhankel::closed_form::Column;
use jhankel::hankel::{HankelSpec, ORACLE_CAP_ENV};
use jhankel::parse::{parse_index, parse_index_list, parse_size};
use jhankel::verify::{self, Bounds, Report, Suite};
use jhankel::{DetKey, EisensteinInt, Error, Evaluator, Family, Oracle, SequenceKind, UnitOrZero};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_MISMATCH: u8 = 3;
pub const EXIT_AUTOMATON: u8 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "jhankel",
    version,
    about = "Exact Hankel determinants of the coefficients of prod (1 + J x^(3^k)) over Z[J]"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Fast,
    Brute,
    Both,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Print a header line in CSV output.
    #[arg(long)]
    pub header: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the first terms of c or s.
    Seq {
        #[arg(value_parser = parse_kind)]
        kind: SequenceKind,
        #[arg(value_parser = parse_usize)]
        count: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Evaluate |H_n^p| or |Sigma_n^p|.
    Det {
        #[arg(value_parser = parse_family)]
        family: Family,
        #[arg(long, value_parser = parse_big)]
        p: BigUint,
        #[arg(long, value_parser = parse_big)]
        n: BigUint,
        #[arg(long, value_enum, default_value = "fast")]
        method: Method,
        #[command(flatten)]
        output: Output,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value = "12", value_parser = parse_usize)]
        n_max: usize,
        #[arg(long, default_value = "12", value_parser = parse_usize)]
        p_max: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Build the 3-kernel automaton of a column (h0, h1, s0, s1).
    Automaton {
        #[arg(value_parser = parse_column)]
        selector: Column,
        #[arg(value_parser = parse_usize)]
        prefix_len: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Time the fast evaluator against the oracle.
    Bench {
        #[arg(value_parser = parse_list)]
        n_list: IndexList,
        #[arg(long, default_value = "0", value_parser = parse_big)]
        p: BigUint,
        #[arg(long, default_value = "H", value_parser = parse_family)]
        family: Family,
        #[command(flatten)]
        output: Output,
    },
}

fn parse_kind(s: &str) -> Result<SequenceKind, Error> {
    s.parse()
}

fn parse_family(s: &str) -> Result<Family, Error> {
    s.parse()
}

fn parse_suite(s: &str) -> Result<Suite, Error> {
    s.parse()
}

fn parse_column(s: &str) -> Result<Column, Error> {
    s.parse()
}

fn parse_big(s: &str) -> Result<BigUint, Error> {
    parse_index(s)
}

fn parse_usize(s: &str) -> Result<usize, Error> {
    parse_size(s)
}

/// Comma-separated indices as a single argument.
#[derive(Clone, Debug)]
pub struct IndexList(pub Vec<BigUint>);

fn parse_list(s: &str) -> Result<IndexList, Error> {
    parse_index_list(s).map(IndexList)
}

/// Rendered output plus exit status.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn fail(code: u8, stderr: String) -> Self {
        Outcome {
            stdout: String::new(),
            stderr,
            code,
        }
    }
}

pub fn run(cli: Cli) -> Outcome {
    let oracle = match Oracle::from_env() {
        Ok(o) => o,
        Err(e) => return Outcome::fail(EXIT_USAGE, format!("error: {e}\n")),
    };
    match cli.command {
        Command::Seq {
            kind,
            count,
            output,
        } => cmd_seq(kind, count, &output),
        Command::Det {
            family,
            p,
            n,
            method,
            output,
        } => cmd_det(&oracle, family, &p, &n, method, &output),
        Command::Verify {
            suite,
            n_max,
            p_max,
            output,
        } => cmd_verify(oracle, suite, n_max, p_max as u64, &output),
        Command::Automaton {
            selector,
            prefix_len,
            output,
        } => cmd_automaton(selector, prefix_len, &output),
        Command::Bench {
            n_list,
            p,
            family,
            output,
        } => cmd_bench(&oracle, family, &n_list.0, &p, &output),
    }
}

fn json_line(v: Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}

pub fn cmd_seq(kind: SequenceKind, count: usize, output: &Output) -> Outcome {
    let terms = kind.block(count);
    let mut out = String::new();
    match output.format.unwrap_or(Format::Csv) {
        Format::Plain => {
            for (n, v) in terms.iter().enumerate() {
                writeln!(out, "{n} {v}").unwrap();
            }
        }
        Format::Csv => {
            if output.header {
                out.push_str("n,value\n");
            }
            for (n, v) in terms.iter().enumerate() {
                writeln!(out, "{n},{v}").unwrap();
            }
        }
        Format::Json => {
            let values: Vec<Value> = terms
                .iter()
                .enumerate()
                .map(|(n, v)| json!({"n": n, "value": v.as_str()}))
                .collect();
            out = json_line(json!({"sequence": kind.to_string(), "values": values}));
        }
    }
    Outcome::ok(out)
}

fn brute(
    oracle: &Oracle,
    family: Family,
    p: &BigUint,
    n: &BigUint,
) -> Result<EisensteinInt, Error> {
    let order = usize::try_from(n).map_err(|_| Error::CapExceeded {
        requested: usize::MAX,
        cap: oracle.cap,
    })?;
    oracle.determinant(&HankelSpec {
        family,
        p: p.clone(),
        n: order,
    })
}

pub fn cmd_det(
    oracle: &Oracle,
    family: Family,
    p: &BigUint,
    n: &BigUint,
    method: Method,
    output: &Output,
) -> Outcome {
    let fast = matches!(method, Method::Fast | Method::Both)
        .then(|| Evaluator::new().eval(&DetKey::new(family, n.clone(), p.clone())));
    let brute_value = if matches!(method, Method::Brute | Method::Both) {
        match brute(oracle, family, p, n) {
            Ok(v) => Some(v),
            Err(e @ Error::CapExceeded { .. }) => {
                return Outcome::fail(
                    EXIT_USAGE,
                    format!("error: {e}; raise {} to allow it\n", ORACLE_CAP_ENV),
                )
            }
            Err(e) => return Outcome::fail(EXIT_MISMATCH, format!("error: {e}\n")),
        }
    } else {
        None
    };
    let agree = match (&fast, &brute_value) {
        (Some(f), Some(b)) => Some(&f.to_eisenstein() == b),
        _ => None,
    };
    let show_brute = |b: &EisensteinInt| match b.classify() {
        Ok(u) => u.to_string(),
        Err(_) => b.to_string(),
    };
    let status = match agree {
        Some(true) => "ok",
        Some(false) => "mismatch",
        None => "",
    };
    let mut out = String::new();
    match output.format.unwrap_or(Format::Plain) {
        Format::Plain => {
            let mut fields: Vec<String> = Vec::new();
            fields.extend(fast.map(|f| f.to_string()));
            fields.extend(brute_value.as_ref().map(show_brute));
            if !status.is_empty() {
                fields.push(status.to_owned());
            }
            writeln!(out, "{}", fields.join(" ")).unwrap();
        }
        Format::Csv => {
            if output.header {
                out.push_str("family,p,n,fast,brute,status\n");
            }
            writeln!(
                out,
                "{family},{p},{n},{},{},{status}",
                fast.map(|f| f.to_string()).unwrap_or_default(),
                brute_value.as_ref().map(show_brute).unwrap_or_default()
            )
            .unwrap();
        }
        Format::Json => {
            let mut values = Vec::new();
            if let Some(f) = fast {
                values.push(json!({"method": "fast", "value": f.as_str()}));
            }
            if let Some(b) = &brute_value {
                values.push(json!({"method": "brute", "value": show_brute(b)}));
            }
            out = json_line(json!({
                "family": family.symbol(),
                "p": p.to_string(),
                "n": n.to_string(),
                "values": values,
                "agree": agree,
            }));
        }
    }
    let code = if agree == Some(false) {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    };
    Outcome {
        stdout: out,
        stderr: String::new(),
        code,
    }
}

fn suite_name(suite: Suite) -> &'static str {
    match suite {
        Suite::Lemma => "lemma",
        Suite::Corollary => "corollary",
        Suite::TheoremTables => "theorem-tables",
        Suite::Blocks => "blocks",
        Suite::Generators => "generators",
        Suite::Grid => "grid",
        Suite::All => "all",
    }
}

fn render_report(suite: Suite, report: &Report, output: &Output) -> String {
    let mut out = String::new();
    match output.format.unwrap_or(Format::Plain) {
        Format::Plain => out.push_str(&report.to_string()),
        Format::Csv => {
            if output.header {
                out.push_str("identity,passed,total\n");
            }
            for c in &report.checks {
                writeln!(out, "{},{},{}", c.identity, c.passed, c.total).unwrap();
            }
        }
        Format::Json => {
            let values: Vec<Value> = report
                .checks
                .iter()
                .map(|c| json!({"identity": c.identity, "passed": c.passed, "total": c.total}))
                .collect();
            let failure = report.failure.as_ref().map(
                |f| json!({"identity": f.identity, "n": f.n, "p": f.p, "lhs": f.lhs, "rhs": f.rhs}),
            );
            out = json_line(json!({
                "suite": suite_name(suite),
                "ok": report.ok(),
                "values": values,
                "failure": failure,
            }));
        }
    }
    out
}

pub fn cmd_verify(
    oracle: Oracle,
    suite: Suite,
    n_max: usize,
    p_max: u64,
    output: &Output,
) -> Outcome {
    let report = verify::run(suite, Bounds { n_max, p_max }, oracle);
    let stdout = render_report(suite, &report, output);
    match &report.failure {
        None if report.ok() => Outcome::ok(stdout),
        failure => Outcome {
            stdout,
            stderr: failure
                .as_ref()
                .map(|f| format!("verification failed: {f}\n"))
                .unwrap_or_else(|| "verification failed\n".into()),
            code: EXIT_VERIFY_FAILED,
        },
    }
}

pub fn cmd_automaton(column: Column, prefix_len: usize, output: &Output) -> Outcome {
    let dfao = match kernel_dfao(column, prefix_len) {
        Ok(d) => d,
        Err(e @ Error::InvalidSize(_)) => {
            return Outcome::fail(EXIT_USAGE, format!("error: {e}\n"))
        }
        Err(e) => return Outcome::fail(EXIT_AUTOMATON, format!("error: {e}\n")),
    };
    let mut out = String::new();
    match output.format.unwrap_or(Format::Json) {
        Format::Json => {
            out = dfao.to_json();
            out.push('\n');
        }
        Format::Csv => {
            if output.header {
                out.push_str("state,output,next0,next1,next2\n");
            }
            for (i, (s, t)) in dfao.states.iter().zip(&dfao.transitions).enumerate() {
                writeln!(out, "{i},{},{},{},{}", s.output, t[0], t[1], t[2]).unwrap();
            }
        }
        Format::Plain => {
            writeln!(
                out,
                "{} states, initial {}, digits {}",
                dfao.states.len(),
                dfao.initial,
                dfao.digit_order
            )
            .unwrap();
            for (i, (s, t)) in dfao.states.iter().zip(&dfao.transitions).enumerate() {
                writeln!(
                    out,
                    "{i}: output {} -> {} {} {}",
                    s.output, t[0], t[1], t[2]
                )
                .unwrap();
            }
        }
    }
    Outcome::ok(out)
}

/// One row of `bench` output.
#[derive(Clone, Debug)]
pub struct BenchRow {
    pub n: BigUint,
    pub fast: UnitOrZero,
    pub fast_time: Duration,
    /// `None` when the order is over the oracle cap.
    pub brute: Option<(Result<UnitOrZero, Error>, Duration)>,
}

impl BenchRow {
    pub fn speedup(&self) -> Option<f64> {
        self.brute
            .as_ref()
            .map(|(_, t)| t.as_secs_f64() / self.fast_time.as_secs_f64().max(1e-9))
    }

    pub fn agree(&self) -> Option<bool> {
        self.brute
            .as_ref()
            .map(|(v, _)| v.as_ref().ok() == Some(&self.fast))
    }
}

/// Best of a few runs, each with a fresh memo.
pub fn time_fast(key: &DetKey) -> (UnitOrZero, Duration) {
    let mut best = Duration::MAX;
    let mut value = UnitOrZero::Zero;
    for _ in 0..5 {
        let ev = Evaluator::new();
        let start = Instant::now();
        value = ev.eval(key);
        best = best.min(start.elapsed());
    }
    (value, best)
}

pub fn bench_rows(
    oracle: &Oracle,
    family: Family,
    n_list: &[BigUint],
    p: &BigUint,
) -> Vec<BenchRow> {
    n_list
        .iter()
        .map(|n| {
            let (fast, fast_time) = time_fast(&DetKey::new(family, n.clone(), p.clone()));
            let within_cap = usize::try_from(n).map(|k| k <= oracle.cap).unwrap_or(false);
            let brute = within_cap.then(|| {
                let start = Instant::now();
                let v = brute(oracle, family, p, n).and_then(|d| d.classify());
                (v, start.elapsed())
            });
            BenchRow {
                n: n.clone(),
                fast,
                fast_time,
                brute,
            }
        })
        .collect()
}

pub fn cmd_bench(
    oracle: &Oracle,
    family: Family,
    n_list: &[BigUint],
    p: &BigUint,
    output: &Output,
) -> Outcome {
    let rows = bench_rows(oracle, family, n_list, p);
    let micros = |d: Duration| format!("{:.1}", d.as_secs_f64() * 1e6);
    let brute_value = |r: &BenchRow| match &r.brute {
        None => "skipped".to_owned(),
        Some((Ok(v), _)) => v.to_string(),
        Some((Err(e), _)) => format!("error({e})"),
    };
    let brute_time = |r: &BenchRow| {
        r.brute
            .as_ref()
            .map(|(_, t)| micros(*t))
            .unwrap_or_else(|| "skipped".into())
    };
    let speedup = |r: &BenchRow| {
        r.speedup()
            .map(|s| format!("{s:.1}"))
            .unwrap_or_else(|| "-".into())
    };
    let mut out = String::new();
    match output.format.unwrap_or(Format::Plain) {
        Format::Plain => {
            writeln!(
                out,
                "{:>24} {:>6} {:>12} {:>8} {:>14} {:>10}",
                "n", "fast", "fast_us", "brute", "brute_us", "speedup"
            )
            .unwrap();
            for r in &rows {
                writeln!(
                    out,
                    "{:>24} {:>6} {:>12} {:>8} {:>14} {:>10}",
                    r.n.to_string(),
                    r.fast.to_string(),
                    micros(r.fast_time),
                    brute_value(r),
                    brute_time(r),
                    speedup(r)
                )
                .unwrap();
            }
        }
        Format::Csv => {
            if output.header {
                out.push_str("n,fast,fast_us,brute,brute_us,speedup\n");
            }
            for r in &rows {
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    r.n,
                    r.fast,
                    micros(r.fast_time),
                    brute_value(r),
                    brute_time(r),
                    speedup(r)
                )
                .unwrap();
            }
        }
        Format::Json => {
            let values: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n.to_string(),
                        "fast": r.fast.as_str(),
                        "fast_us": r.fast_time.as_secs_f64() * 1e6,
                        "brute": brute_value(r),
                        "brute_us": r.brute.as_ref().map(|(_, t)| t.as_secs_f64() * 1e6),
                        "speedup": r.speedup(),
                    })
                })
                .collect();
            out =
                json_line(json!({"family": family.symbol(), "p": p.to_string(), "values": values}));
        }
    }
    let code = if rows.iter().any(|r| r.agree() == Some(false)) {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    };
    Outcome {
        stdout: out,
        stderr: String::new(),
        code,
    }
}
