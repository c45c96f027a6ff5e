//! The `k3pairs` command line. Exit codes: 0 pass, 1 identity failure,
//! 2 usage or configuration error.

use crate::error::Error;
use crate::k3::{check_rank, euler_g, g_closed, syst_hodge};
use crate::modularity::{fit_v_coefficient, v_expansion, FitReport};
use crate::series::QSeries;
use crate::verify::{first_failure, run_suite, Suite, SuiteConfig};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "k3pairs", version, about = "Exact stable pair invariants of K3 surfaces and the identities they satisfy")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Euler characteristics (or Hodge polynomials) of Syst^n(r, D_g, k + r).
    Table(TableArgs),
    /// Run an identity suite.
    Verify(VerifyArgs),
    /// Fit v-coefficients of v^2 g^r_n(q, e^{iv}) into the Eisenstein algebra.
    Fit(FitArgs),
    /// Coefficients of the generating function G^r_n (or its u = 1 value, or its v-expansion).
    Series(SeriesArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Csv,
    Json,
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Write here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Rank {
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    n: i64,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    r: i64,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[command(flatten)]
    rank: Rank,
    #[arg(long, default_value_t = 3)]
    gmax: i64,
    #[arg(long, default_value_t = -3, allow_negative_numbers = true)]
    kmin: i64,
    #[arg(long, default_value_t = 3, allow_negative_numbers = true)]
    kmax: i64,
    /// Euler characteristics (the default).
    #[arg(long, conflicts_with = "hodge")]
    euler: bool,
    /// Hodge polynomials in t, tb.
    #[arg(long)]
    hodge: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value = "all", value_parser = Suite::NAMES)]
    suite: String,
    /// Largest rank checked.
    #[arg(long, default_value_t = 3, allow_negative_numbers = true)]
    n: i64,
    /// Matrix index range for the ucomb suite.
    #[arg(long, default_value_t = 41, allow_negative_numbers = true)]
    cutoff: i64,
    #[arg(long, default_value_t = 10, allow_negative_numbers = true)]
    qorder: i64,
    #[arg(long, default_value_t = 8, allow_negative_numbers = true)]
    ywin: i64,
    #[arg(long, default_value_t = 8, allow_negative_numbers = true)]
    vorder: i64,
    /// Weight ceiling for the fits.
    #[arg(long, default_value_t = 12, allow_negative_numbers = true)]
    weight: i64,
}

#[derive(Args, Debug)]
struct FitArgs {
    #[command(flatten)]
    rank: Rank,
    /// Fit v^0 .. v^vmax.
    #[arg(long, default_value_t = 6)]
    vmax: i64,
    /// Weight ceiling; the search starts at s + 2.
    #[arg(long, default_value_t = 12, allow_negative_numbers = true)]
    weight: i64,
    /// q-coefficients used to solve.
    #[arg(long, default_value_t = 20)]
    fit_qorder: i64,
    /// q-coefficients the residual must vanish on.
    #[arg(long, default_value_t = 30)]
    test_qorder: i64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    #[command(flatten)]
    rank: Rank,
    #[arg(long, default_value_t = 10, allow_negative_numbers = true)]
    qorder: i64,
    #[arg(long, default_value_t = 8, allow_negative_numbers = true)]
    ywin: i64,
    /// g^r_n = G^r_n at u = 1.
    #[arg(long, conflicts_with_all = ["hodge", "vexp"])]
    euler: bool,
    /// G^r_n with u-polynomial coefficients (the default).
    #[arg(long)]
    hodge: bool,
    /// v^2 g^r_n(q, e^{iv}) expanded in v.
    #[arg(long, conflicts_with = "hodge")]
    vexp: bool,
    #[arg(long, default_value_t = 8, allow_negative_numbers = true)]
    vorder: i64,
    #[command(flatten)]
    output: Output,
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: if e.is_identity_failure() { 1 } else { 2 }, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn io_failure(e: impl std::fmt::Display) -> Failure {
    Failure { code: 2, message: format!("cannot write output: {e}") }
}

fn emit(out: &Option<PathBuf>, bytes: &[u8]) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, bytes).map_err(io_failure),
        None => std::io::stdout().write_all(bytes).map_err(io_failure),
    }
}

#[derive(Serialize)]
struct Cell {
    n: i64,
    r: i64,
    g: i64,
    k: i64,
    value: String,
}

fn write_cells<T: Serialize>(rows: &[T], header: &[&str], format: Format) -> Result<Vec<u8>, Failure> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_vec_pretty(rows).map_err(io_failure)?;
            s.push(b'\n');
            Ok(s)
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
            w.write_record(header).map_err(io_failure)?;
            for row in rows {
                w.serialize(row).map_err(io_failure)?;
            }
            w.into_inner().map_err(io_failure)
        }
    }
}

fn check_order(name: &str, v: i64) -> Result<(), Failure> {
    if v < 0 {
        return Err(usage(format!("--{name} must be nonnegative, got {v}")));
    }
    Ok(())
}

fn cmd_table(a: TableArgs) -> Result<(), Failure> {
    let (n, r) = (a.rank.n, a.rank.r);
    check_rank(n, r).map_err(|e| usage(format!("need 0 <= r <= n and n >= 1: {e}")))?;
    check_order("gmax", a.gmax)?;
    if a.kmin > a.kmax {
        return Err(usage(format!("need kmin <= kmax, got {} > {}", a.kmin, a.kmax)));
    }
    let mut rows = Vec::new();
    for g in 0..=a.gmax {
        for k in a.kmin..=a.kmax {
            let p = syst_hodge(n, r, g, k)?;
            let value = if a.hodge { p.to_string() } else { p.eval_one_int().to_string() };
            rows.push(Cell { n, r, g, k, value });
        }
    }
    emit(&a.output.out, &write_cells(&rows, &["n", "r", "g", "k", "value"], a.output.format)?)
}

fn cmd_verify(a: VerifyArgs) -> Result<(), Failure> {
    let suite: Suite = a.suite.parse()?;
    let config = SuiteConfig { n: a.n, cutoff: a.cutoff, qorder: a.qorder, ywin: a.ywin, vorder: a.vorder, weight_ceiling: a.weight };
    // a closed pipe (e.g. `| head`) must not abort the run
    let mut out = std::io::stdout().lock();
    let outcomes = run_suite(suite, config, |o| {
        let _ = match &o.result {
            Ok(()) => writeln!(out, "pass  [{}] {}", o.suite, o.name),
            Err(e) => writeln!(out, "FAIL  [{}] {}: {e}", o.suite, o.name),
        };
    })?;
    let passed = outcomes.iter().filter(|o| o.result.is_ok()).count();
    let _ = writeln!(out, "{passed}/{} identities hold", outcomes.len());
    match first_failure(&outcomes) {
        None => Ok(()),
        Some(o) => {
            let e = o.result.as_ref().unwrap_err();
            Err(Failure { code: if e.is_identity_failure() { 1 } else { 2 }, message: format!("first failure: [{}] {}: {e}", o.suite, o.name) })
        }
    }
}

fn cmd_fit(a: FitArgs) -> Result<(), Failure> {
    let (n, r) = (a.rank.n, a.rank.r);
    check_rank(n, r).map_err(|e| usage(format!("need 0 <= r <= n and n >= 1: {e}")))?;
    check_order("vmax", a.vmax)?;
    if !(0 < a.fit_qorder && a.fit_qorder < a.test_qorder) {
        return Err(usage(format!("need 0 < fit-qorder < test-qorder, got {} and {}", a.fit_qorder, a.test_qorder)));
    }
    let mut reports: Vec<FitReport> = Vec::new();
    let mut failure = None;
    for s in 0..=a.vmax {
        match fit_v_coefficient(n, r, s, a.weight, a.fit_qorder, a.test_qorder) {
            Ok(rep) => reports.push(rep),
            Err(e) => {
                failure = Some(Failure::from(e));
                break;
            }
        }
    }
    let mut bytes = serde_json::to_vec_pretty(&reports).map_err(io_failure)?;
    bytes.push(b'\n');
    emit(&a.out, &bytes)?;
    failure.map_or(Ok(()), Err)
}

#[derive(Serialize)]
struct SeriesCell {
    n: i64,
    r: i64,
    q: i64,
    y: i64,
    value: String,
}

#[derive(Serialize)]
struct VCell {
    n: i64,
    r: i64,
    v: i64,
    q: i64,
    value: String,
}

fn cmd_series(a: SeriesArgs) -> Result<(), Failure> {
    let (n, r) = (a.rank.n, a.rank.r);
    check_rank(n, r).map_err(|e| usage(format!("need 0 <= r <= n and n >= 1: {e}")))?;
    check_order("qorder", a.qorder)?;
    check_order("ywin", a.ywin)?;
    check_order("vorder", a.vorder)?;
    let bytes = if a.vexp {
        let f = v_expansion(n, r, a.qorder.max(1), a.vorder)?;
        let mut rows = Vec::new();
        for s in f.lower()..f.order() {
            let c: QSeries<_> = f.coeff(s);
            for (q, x) in c.terms() {
                rows.push(VCell { n, r, v: s, q, value: x.to_string() });
            }
        }
        write_cells(&rows, &["n", "r", "v", "q", "value"], a.output.format)?
    } else {
        let mut rows = Vec::new();
        if a.euler {
            for (q, p) in euler_g(n, r, a.qorder, a.ywin)?.terms() {
                rows.extend(p.terms().map(|(y, c)| SeriesCell { n, r, q, y, value: c.to_string() }));
            }
        } else {
            for (q, p) in g_closed(n, r, a.qorder, a.ywin)?.terms() {
                rows.extend(p.terms().map(|(y, c)| SeriesCell { n, r, q, y, value: c.to_string() }));
            }
        }
        write_cells(&rows, &["n", "r", "q", "y", "value"], a.output.format)?
    };
    emit(&a.output.out, &bytes)
}

/// Parses `args` (including the program name) and runs the command;
/// returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let result = match cli.command {
        Command::Table(a) => cmd_table(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Fit(a) => cmd_fit(a),
        Command::Series(a) => cmd_series(a),
    };
    match result {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("k3pairs: {}", f.message);
            f.code
        }
    }
}
