//! Command-line front end. Every command writes one deterministic document
//! to stdout; exit codes are 0 on success, 1 when a check fails and 2 on
//! invalid input.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::closed_forms::{solve_gamma, turan_value, GammaSolution};
use crate::cutoff::{make_cutoff, RationalCutoff};
use crate::error::Error;
use crate::extremal::{build_extremal, extremal_gamma0, verify_membership};
use crate::json::to_json_string;
use crate::kernels::fejer;
use crate::lp::{
    delta_grid_lp, delta_periodic_lp, lipschitz_certify, taylor_certify, turan_relaxed_lp,
};
use crate::properties::{
    assess_vdc, check_dilation, check_divisibility_bound, check_monotonicity,
    check_supermultiplicative, pairing_check, vdc_lower_bound, CheckReport, VdcVerdict,
};
use crate::support::SupportSet;

pub const DEFAULT_GRID: usize = 2048;

#[derive(Debug, Parser)]
#[command(
    name = "turan-vdc",
    version,
    about = "Turán constants and van der Corput extremal values"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form A(p/q) and, for p = 2, 3, the Gamma coefficients.
    Turan {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Grid LP lower bound for delta(K).
    Delta(DeltaArgs),
    /// Build the extremal polynomial and verify its membership.
    Extremal {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        /// Write the polynomial as JSON to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_GRID)]
        grid: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// One row per admissible q for fixed p.
    Table {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        qmin: usize,
        #[arg(long)]
        qmax: usize,
        /// Add the grid LP value on {p..q-p} and its gap to A(p/q).
        #[arg(long)]
        with_lp: bool,
        #[arg(long, default_value_t = DEFAULT_GRID)]
        grid: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Relaxed LP estimate of A(p/q).
    Estimate {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 512)]
        grid: usize,
        #[arg(long, default_value_t = 1e-3)]
        eps: f64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Check a structural property of delta(K).
    Check(CheckArgs),
}

#[derive(Debug, Args)]
pub struct DeltaArgs {
    /// Comma-separated finite set, e.g. "2,3".
    #[arg(long, conflicts_with = "pq")]
    pub set: Option<String>,
    /// Use K_{p,q} truncated after --periods periods, given as "p,q".
    #[arg(long)]
    pub pq: Option<String>,
    #[arg(long, default_value_t = 1)]
    pub periods: usize,
    #[arg(long, default_value_t = DEFAULT_GRID)]
    pub grid: usize,
    /// Attach a lower-bound certificate for the LP polynomial's minimum.
    #[arg(long)]
    pub certify: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Property {
    Mono,
    Dilate,
    Divis,
    Super,
    Pairing,
    Vdc,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long, value_enum)]
    pub property: Property,
    #[arg(long)]
    pub k1: Option<String>,
    #[arg(long)]
    pub k2: Option<String>,
    #[arg(long)]
    pub set: Option<String>,
    /// K_{p,q} as "p,q" (vdc only).
    #[arg(long)]
    pub pq: Option<String>,
    /// Dilation factor or modulus.
    #[arg(long)]
    pub factor: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_GRID)]
    pub grid: usize,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String, pass: bool) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: if pass { 0 } else { 1 },
        }
    }
}

enum Failure {
    Input(String),
    Numeric(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SingularSystem { .. } | Error::NonPositiveGamma { .. } | Error::Solver(_) => {
                Failure::Numeric(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Numeric(e.to_string())
    }
}

type CmdResult = std::result::Result<(String, bool), Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                Outcome {
                    stdout: rendered,
                    stderr: String::new(),
                    code,
                }
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: rendered,
                    code,
                }
            }
        }
    }
}

pub fn run(cli: Cli) -> Outcome {
    let result = match cli.command {
        Command::Turan { p, q, format } => cmd_turan(p, q, format),
        Command::Delta(args) => cmd_delta(&args),
        Command::Extremal {
            p,
            q,
            out,
            grid,
            format,
        } => cmd_extremal(p, q, out, grid, format),
        Command::Table {
            p,
            qmin,
            qmax,
            with_lp,
            grid,
            format,
        } => cmd_table(p, qmin, qmax, with_lp.then_some(grid), format),
        Command::Estimate {
            p,
            q,
            degree,
            grid,
            eps,
            format,
        } => cmd_estimate(p, q, degree, grid, eps, format),
        Command::Check(args) => cmd_check(&args),
    };
    match result {
        Ok((stdout, pass)) => Outcome::ok(stdout, pass),
        Err(Failure::Input(msg)) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: 2,
        },
        Err(Failure::Numeric(msg)) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: 1,
        },
    }
}

fn parse_list(s: &str) -> std::result::Result<Vec<usize>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Failure::Input(format!("not a positive integer: {t:?}")))
        })
        .collect()
}

fn parse_set(s: &str) -> std::result::Result<SupportSet, Failure> {
    Ok(SupportSet::finite(parse_list(s)?)?)
}

fn parse_pq(s: &str) -> std::result::Result<RationalCutoff, Failure> {
    match parse_list(s)?.as_slice() {
        &[p, q] => Ok(make_cutoff(p, q)?),
        _ => Err(Failure::Input(format!("expected \"p,q\", got {s:?}"))),
    }
}

fn require<T: Copy>(v: Option<T>, flag: &str) -> std::result::Result<T, Failure> {
    v.ok_or_else(|| Failure::Input(format!("--{flag} is required")))
}

fn require_str<'a>(v: &'a Option<String>, flag: &str) -> std::result::Result<&'a str, Failure> {
    v.as_deref()
        .ok_or_else(|| Failure::Input(format!("--{flag} is required")))
}

/// Shortest round-trip decimal, always with '.' as separator.
fn num(v: f64) -> String {
    if !v.is_finite() {
        String::new()
    } else if v != 0.0 && !(1e-4..1e16).contains(&v.abs()) {
        format!("{v:e}")
    } else {
        format!("{v}")
    }
}

fn join_nums(v: &[f64]) -> String {
    v.iter().map(|&x| num(x)).collect::<Vec<_>>().join(";")
}

/// Flat key/value rendering of a JSON object for text and CSV output.
fn flat_pairs(value: &Value) -> Vec<(String, String)> {
    let render = |v: &Value| match v {
        Value::Number(n) => n.as_f64().map_or_else(
            || n.to_string(),
            |f| {
                if n.is_f64() {
                    num(f)
                } else {
                    n.to_string()
                }
            },
        ),
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        Value::Array(items) => items
            .iter()
            .map(|i| match i {
                Value::Number(n) if n.is_f64() => num(n.as_f64().unwrap()),
                other => other.to_string(),
            })
            .collect::<Vec<_>>()
            .join(";"),
        other => other.to_string(),
    };
    let mut out = Vec::new();
    if let Value::Object(map) = value {
        for (k, v) in map {
            match v {
                Value::Object(inner) => {
                    for (ik, iv) in inner {
                        out.push((format!("{k}.{ik}"), render(iv)));
                    }
                }
                _ => out.push((k.clone(), render(v))),
            }
        }
    }
    out
}

fn render<T: Serialize>(doc: &T, format: Format) -> std::result::Result<String, Failure> {
    Ok(match format {
        Format::Json => to_json_string(doc)? + "\n",
        Format::Text => {
            let pairs = flat_pairs(&serde_json::to_value(doc)?);
            pairs.iter().fold(String::new(), |mut s, (k, v)| {
                let _ = writeln!(s, "{k}: {v}");
                s
            })
        }
        Format::Csv => {
            let pairs = flat_pairs(&serde_json::to_value(doc)?);
            let header: Vec<&str> = pairs.iter().map(|(k, _)| k.as_str()).collect();
            let row: Vec<&str> = pairs.iter().map(|(_, v)| v.as_str()).collect();
            format!("{}\n{}\n", header.join(","), row.join(","))
        }
    })
}

#[derive(Serialize)]
struct TuranDoc {
    p: usize,
    q: usize,
    #[serde(rename = "A")]
    a: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma: Option<GammaSolution>,
}

fn cmd_turan(p: usize, q: usize, format: Format) -> CmdResult {
    let h = make_cutoff(p, q)?;
    let a = turan_value(h)?;
    let gamma = if matches!(p, 2 | 3) {
        Some(solve_gamma(h)?)
    } else {
        None
    };
    Ok((render(&TuranDoc { p, q, a, gamma }, format)?, true))
}

fn cmd_delta(args: &DeltaArgs) -> CmdResult {
    let result = match (&args.set, &args.pq) {
        (Some(set), None) => delta_grid_lp(&parse_set(set)?, args.grid)?,
        (None, Some(pq)) => delta_periodic_lp(parse_pq(pq)?, args.periods, args.grid)?,
        _ => {
            return Err(Failure::Input(
                "exactly one of --set or --pq is required".into(),
            ))
        }
    };
    let mut doc = serde_json::to_value(&result)?;
    doc["support"] = json!(result.support);
    if args.certify {
        let first = lipschitz_certify(&result.poly, args.grid);
        let third = taylor_certify(&result.poly, args.grid);
        doc["certificate"] = json!({
            "certified_min": first.certified_min.max(third.certified_min),
            "grid_min": first.grid_min,
            "lipschitz_bound": first.bound,
            "fourth_derivative_bound": third.bound,
        });
    }
    let pass = result.status == crate::lp::LpStatus::Optimal;
    Ok((render(&doc, args.format)?, pass))
}

fn cmd_extremal(
    p: usize,
    q: usize,
    out: Option<PathBuf>,
    grid: usize,
    format: Format,
) -> CmdResult {
    let h = make_cutoff(p, q)?;
    let poly = build_extremal(h)?;
    if let Some(path) = out {
        let body = to_json_string(&poly)? + "\n";
        std::fs::write(&path, body)
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))?;
    }
    let report = verify_membership(&poly, &SupportSet::block(h), grid);
    Ok((render(&report, format)?, report.passes()))
}

#[derive(Serialize)]
struct TableRow {
    q: usize,
    #[serde(rename = "A")]
    a: f64,
    gamma0: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lp_lower: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gap: Option<f64>,
}

fn cmd_table(
    p: usize,
    qmin: usize,
    qmax: usize,
    lp_grid: Option<usize>,
    format: Format,
) -> CmdResult {
    if qmin > qmax {
        return Err(Failure::Input(format!("empty range {qmin}..={qmax}")));
    }
    let mut rows = Vec::new();
    for q in qmin..=qmax {
        let Ok(h) = make_cutoff(p, q) else { continue };
        let Ok(a) = turan_value(h) else { continue };
        let gamma0 = extremal_gamma0(h).ok();
        let lp_lower = match lp_grid {
            Some(grid) => Some(delta_grid_lp(&SupportSet::block(h), grid.max(2 * q))?.value),
            None => None,
        };
        rows.push(TableRow {
            q,
            a,
            gamma0,
            lp_lower,
            gap: lp_lower.map(|v| a - v),
        });
    }
    let text = match format {
        Format::Json => to_json_string(&rows)? + "\n",
        Format::Csv | Format::Text => {
            let sep = if format == Format::Csv { "," } else { "\t" };
            let mut header = vec!["q", "A", "gamma0"];
            if lp_grid.is_some() {
                header.extend(["lp_lower", "gap"]);
            }
            let mut s = header.join(sep) + "\n";
            for r in &rows {
                let mut cells = vec![
                    r.q.to_string(),
                    num(r.a),
                    r.gamma0.map(num).unwrap_or_default(),
                ];
                if lp_grid.is_some() {
                    cells.push(r.lp_lower.map(num).unwrap_or_default());
                    cells.push(r.gap.map(num).unwrap_or_default());
                }
                s += &(cells.join(sep) + "\n");
            }
            s
        }
    };
    Ok((text, true))
}

fn cmd_estimate(
    p: usize,
    q: usize,
    degree: usize,
    grid: usize,
    eps: f64,
    format: Format,
) -> CmdResult {
    let h = make_cutoff(p, q)?;
    let est = turan_relaxed_lp(h, degree, grid, eps)?;
    let mut doc = serde_json::to_value(&est)?;
    if let Ok(a) = turan_value(h) {
        doc["closed_form"] = json!(a);
    }
    Ok((render(&doc, format)?, true))
}

#[derive(Serialize)]
struct VdcDoc {
    check: &'static str,
    inputs: Value,
    values: Vec<f64>,
    pass: bool,
    verdict: String,
}

fn cmd_check(args: &CheckArgs) -> CmdResult {
    let grid = args.grid;
    let report: CheckReport = match args.property {
        Property::Mono => check_monotonicity(
            &parse_set(require_str(&args.k1, "k1")?)?,
            &parse_set(require_str(&args.k2, "k2")?)?,
            grid,
        )?,
        Property::Dilate => check_dilation(
            &parse_set(require_str(&args.set, "set")?)?,
            require(args.factor, "factor")?,
            grid,
        )?,
        Property::Divis => check_divisibility_bound(
            &parse_set(require_str(&args.set, "set")?)?,
            require(args.factor, "factor")?,
            grid,
        )?,
        Property::Super => check_supermultiplicative(
            &parse_set(require_str(&args.k1, "k1")?)?,
            &parse_set(require_str(&args.k2, "k2")?)?,
            grid,
        )?,
        Property::Pairing => {
            let h = make_cutoff(require(args.p, "p")?, require(args.q, "q")?)?;
            let pairing = pairing_check(&build_extremal(h)?, &fejer(h.q()), h)?;
            CheckReport {
                check: "pairing".into(),
                inputs: json!({ "p": h.p(), "q": h.q(), "f": "fejer" }),
                values: vec![pairing.lhs, pairing.rhs, pairing.a0],
                pass: pairing.holds(),
            }
        }
        Property::Vdc => {
            let (set, inputs) = match (&args.set, &args.pq) {
                (Some(s), None) => {
                    let set = parse_set(s)?;
                    let inputs = json!({ "set": set.elements(), "grid": grid });
                    (set, inputs)
                }
                (None, Some(pq)) => {
                    let h = parse_pq(pq)?;
                    (
                        SupportSet::periodic_block(h),
                        json!({ "p": h.p(), "q": h.q(), "periodic": true }),
                    )
                }
                _ => {
                    return Err(Failure::Input(
                        "exactly one of --set or --pq is required".into(),
                    ))
                }
            };
            let bound = vdc_lower_bound(&set, grid)?;
            let verdict = assess_vdc(&set, grid)?;
            let pass = matches!(verdict, VdcVerdict::NotVanDerCorput { .. });
            let doc = VdcDoc {
                check: "vdc",
                inputs,
                values: bound.map(|(b, _)| vec![b]).unwrap_or_default(),
                pass,
                verdict: verdict.to_string(),
            };
            return Ok((render(&doc, args.format)?, pass));
        }
    };
    let pass = report.pass;
    let text = match args.format {
        Format::Csv => format!(
            "check,values,pass\n{},{},{}\n",
            report.check,
            join_nums(&report.values),
            report.pass
        ),
        f => render(&report, f)?,
    };
    Ok((text, pass))
}
