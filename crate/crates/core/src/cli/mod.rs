//! Command-line front end: `tables`, `verify`, `eval`, `zeros`, `plotdata`.

mod suite;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

pub use suite::{
    golden_table1, golden_table2, run_suite, CheckRecord, Fault, Status, SuiteConfig, SuiteResult, DEFAULT_SEED,
};

use crate::airy_numeric::{airy_derivative, product_derivative, Target, X_MAX};
use crate::airy_pq::{family_table, pq_recurrence, reduce};
use crate::airy_rst::rst_recurrence;
use crate::error::Error;
use crate::family::Family;
use crate::hyper::{big_f, f0_and_tau};
use crate::ratcore::sturm_count;

/// Largest accepted `--n-max`.
pub const N_MAX_LIMIT: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Curve {
    Tau,
    #[value(name = "F", alias = "f")]
    F,
}

#[derive(Parser, Debug)]
#[command(name = "airy-deriv", version, about = "Polynomials for higher derivatives of Airy functions")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest index computed (at most 200).
    #[arg(long, global = true)]
    pub n_max: Option<usize>,
    /// Seed for random test points.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Replace every floating-point tolerance.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub tol: Option<f64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print P_n, Q_n and R_n, S_n, T_n.
    Tables,
    /// Run the full verification suite.
    Verify {
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<Fault>,
    },
    /// Evaluate an n-th derivative at x.
    Eval {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        /// Ai, Bi, AiAi, AiBi or BiBi.
        #[arg(long, default_value = "Ai")]
        target: Target,
    },
    /// Sturm counts for the reduced polynomials of every family.
    Zeros,
    /// Samples of tau(a) or F(a) for plotting.
    Plotdata {
        #[arg(long, value_enum, default_value_t = Curve::F)]
        curve: Curve,
        #[arg(long, default_value_t = -1.5, allow_negative_numbers = true)]
        a_min: f64,
        #[arg(long, default_value_t = 2.5, allow_negative_numbers = true)]
        a_max: f64,
        #[arg(long, default_value_t = 401)]
        steps: usize,
    },
}

/// Failure that maps to an exit code.
enum Exit {
    Usage(String),
    Verification,
    Io(std::io::Error),
}

impl From<std::io::Error> for Exit {
    fn from(e: std::io::Error) -> Self {
        Exit::Io(e)
    }
}

impl From<csv::Error> for Exit {
    fn from(e: csv::Error) -> Self {
        Exit::Io(e.into())
    }
}

impl From<serde_json::Error> for Exit {
    fn from(e: serde_json::Error) -> Self {
        Exit::Io(e.into())
    }
}

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        Exit::Usage(e.to_string())
    }
}

type Out<'a> = &'a mut dyn Write;

/// Parses `args` and runs the command, returning the process exit code.
pub fn run<I, T>(args: I, out: Out, err: Out) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return e.exit_code();
        }
    };
    match dispatch(&cli, out, err) {
        Ok(()) => 0,
        Err(Exit::Verification) => 1,
        Err(Exit::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Exit::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(Exit::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(cli: &Cli, out: Out, err: Out) -> Result<(), Exit> {
    if let Some(n) = cli.n_max {
        if n > N_MAX_LIMIT {
            return Err(Exit::Usage(format!("--n-max {n} exceeds {N_MAX_LIMIT}")));
        }
    }
    if let Some(t) = cli.tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Exit::Usage(format!("--tol must be positive, got {t}")));
        }
    }
    match &cli.command {
        Command::Tables => tables(cli, out),
        Command::Verify { inject_fault } => verify(cli, *inject_fault, out, err),
        Command::Eval { n, x, target } => eval(cli, *n, *x, *target, out),
        Command::Zeros => zeros(cli, out),
        Command::Plotdata { curve, a_min, a_max, steps } => plotdata(cli, *curve, *a_min, *a_max, *steps, out),
    }
}

fn json<T: Serialize>(out: Out, v: &T) -> Result<(), Exit> {
    serde_json::to_writer_pretty(&mut *out, v)?;
    writeln!(out)?;
    Ok(())
}

fn csv_rows<T: Serialize>(out: Out, rows: &[T]) -> Result<(), Exit> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct TableRow {
    table: u8,
    n: usize,
    #[serde(rename = "P")]
    p: Option<String>,
    #[serde(rename = "Q")]
    q: Option<String>,
    #[serde(rename = "R")]
    r: Option<String>,
    #[serde(rename = "S")]
    s: Option<String>,
    #[serde(rename = "T")]
    t: Option<String>,
}

fn tables(cli: &Cli, out: Out) -> Result<(), Exit> {
    let (n1, n2) = cli.n_max.map_or((15, 12), |n| (n, n));
    let pq = pq_recurrence(n1);
    let rst = rst_recurrence(n2);
    let mut rows = Vec::new();
    for e in &pq {
        rows.push(TableRow {
            table: 1,
            n: e.n,
            p: Some(e.p.to_string()),
            q: Some(e.q.to_string()),
            r: None,
            s: None,
            t: None,
        });
    }
    for e in &rst {
        let (r, s, t) = (e.r.to_string(), e.s.to_string(), e.t.to_string());
        rows.push(TableRow { table: 2, n: e.n, p: None, q: None, r: Some(r), s: Some(s), t: Some(t) });
    }
    match cli.format {
        Format::Json => json(out, &rows),
        Format::Csv => csv_rows(out, &rows),
        Format::Text => {
            writeln!(out, "{:>3}  {:<28}Q_n(x)", "n", "P_n(x)")?;
            for e in &pq {
                writeln!(out, "{:>3}  {:<28}{}", e.n, e.p.to_string(), e.q)?;
            }
            writeln!(out)?;
            writeln!(out, "{:>3}  {:<28}{:<28}T_n(x)", "n", "R_n(x)", "S_n(x)")?;
            for e in &rst {
                writeln!(out, "{:>3}  {:<28}{:<28}{}", e.n, e.r.to_string(), e.s.to_string(), e.t)?;
            }
            Ok(())
        }
    }
}

fn verify(cli: &Cli, fault: Option<Fault>, out: Out, err: Out) -> Result<(), Exit> {
    let cfg = SuiteConfig { n_max: cli.n_max.unwrap_or(40), seed: cli.seed, tol: cli.tol, fault };
    let result = run_suite(&cfg);
    match cli.format {
        Format::Json => json(out, &result.records)?,
        Format::Csv => csv_rows(out, &result.records)?,
        Format::Text => {
            for r in &result.records {
                let tag = if r.status == Status::Pass { "PASS" } else { "FAIL" };
                let fam = r.family.as_deref().unwrap_or("-");
                let n = r.n.map_or("-".to_string(), |v| v.to_string());
                write!(out, "{tag} {} {fam} {n}", r.check)?;
                if let Some(e) = r.rel_err {
                    write!(out, " rel_err={e:.3e}")?;
                }
                writeln!(out)?;
            }
            let failed = result.failures().count();
            writeln!(out, "{} checks, {} failed", result.records.len(), failed)?;
        }
    }
    for f in result.failures() {
        writeln!(
            err,
            "failed: {} family={} n={} lhs={} rhs={}",
            f.check,
            f.family.as_deref().unwrap_or("-"),
            f.n.map_or("-".into(), |v| v.to_string()),
            f.lhs.as_deref().unwrap_or("-"),
            f.rhs.as_deref().unwrap_or("-"),
        )?;
    }
    if result.passed {
        Ok(())
    } else {
        Err(Exit::Verification)
    }
}

#[derive(Serialize)]
struct EvalRecord {
    target: String,
    n: usize,
    x: f64,
    value: f64,
    polynomials: Vec<(String, String)>,
}

fn eval(cli: &Cli, n: usize, x: f64, target: Target, out: Out) -> Result<(), Exit> {
    if n > N_MAX_LIMIT {
        return Err(Exit::Usage(format!("n={n} exceeds {N_MAX_LIMIT}")));
    }
    if !(x.abs() <= X_MAX) {
        return Err(Exit::Usage(format!("|x| must be at most {X_MAX}, got {x}")));
    }
    let (value, polynomials) = match target {
        Target::Single(which) => {
            let pq = pq_recurrence(n).pop().expect("nonempty table");
            let v = airy_derivative(which, n, x, &pq)?;
            (v, vec![("P".into(), pq.p.to_string()), ("Q".into(), pq.q.to_string())])
        }
        Target::Pair(which) => {
            let rst = rst_recurrence(n).pop().expect("nonempty table");
            let v = product_derivative(which, n, x, &rst)?;
            let polys =
                vec![("R".into(), rst.r.to_string()), ("S".into(), rst.s.to_string()), ("T".into(), rst.t.to_string())];
            (v, polys)
        }
    };
    let rec = EvalRecord { target: target.to_string(), n, x, value, polynomials };
    match cli.format {
        Format::Json => json(out, &rec),
        Format::Csv => {
            writeln!(out, "target,n,x,value")?;
            writeln!(out, "{},{},{},{:.16e}", rec.target, n, x, value)?;
            Ok(())
        }
        Format::Text => {
            writeln!(out, "d^{n}/dx^{n} {} at x={x}: {value:.16e}", rec.target)?;
            for (name, p) in &rec.polynomials {
                writeln!(out, "  {name}_{n}(x) = {p}")?;
            }
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct ZeroRow {
    family: Family,
    n: usize,
    degree: usize,
    real_roots: usize,
    negative_roots: usize,
    simple: bool,
}

fn zeros(cli: &Cli, out: Out) -> Result<(), Exit> {
    let mut rows = Vec::new();
    for fam in Family::ALL {
        let n_max = cli.n_max.unwrap_or(match fam {
            Family::P | Family::Q | Family::Z => 60,
            _ => 40,
        });
        for (n, p) in family_table(fam, n_max).iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let r = reduce(fam, n, p)?;
            let degree = r.degree().expect("nonzero");
            if degree == 0 {
                continue;
            }
            let c = sturm_count(&r)?;
            rows.push(ZeroRow {
                family: fam,
                n,
                degree,
                real_roots: c.real,
                negative_roots: c.negative,
                simple: c.all_simple,
            });
        }
    }
    match cli.format {
        Format::Json => json(out, &rows),
        Format::Csv => csv_rows(out, &rows),
        Format::Text => {
            writeln!(out, "family    n  degree  real  negative  simple")?;
            for r in &rows {
                writeln!(
                    out,
                    "{:<6} {:>4}  {:>6}  {:>4}  {:>8}  {}",
                    r.family.to_string(),
                    r.n,
                    r.degree,
                    r.real_roots,
                    r.negative_roots,
                    r.simple
                )?;
            }
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct Sample {
    a: f64,
    value: Option<f64>,
}

/// Evenly spaced samples; poles and other failures give `None`.
pub fn curve_samples(curve: Curve, a_min: f64, a_max: f64, steps: usize) -> Vec<(f64, Option<f64>)> {
    (0..steps)
        .map(|i| {
            let a = a_min + (a_max - a_min) * i as f64 / (steps - 1) as f64;
            let v = match curve {
                Curve::Tau => f0_and_tau(a).map(|(_, t)| t),
                Curve::F => big_f(a),
            };
            (a, v.ok().filter(|v| v.is_finite()))
        })
        .collect()
}

fn plotdata(cli: &Cli, curve: Curve, a_min: f64, a_max: f64, steps: usize, out: Out) -> Result<(), Exit> {
    if steps < 2 || !(a_min < a_max) {
        return Err(Exit::Usage("need steps >= 2 and a-min < a-max".into()));
    }
    let samples: Vec<Sample> =
        curve_samples(curve, a_min, a_max, steps).into_iter().map(|(a, value)| Sample { a, value }).collect();
    match cli.format {
        Format::Json => json(out, &samples),
        Format::Csv | Format::Text => csv_rows(out, &samples),
    }
}
