//! Command-line front end. Data goes to `out`, diagnostics to `err`.
//!
//! Exit codes: `0` success, `1` identity failure or other runtime error,
//! `2` bad flags or parameters, `3` forbidden initial condition or singular orbit.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::analysis;
use crate::closed_form::{self, ProductRegime};
use crate::dynamics::{self, OrbitStatus, Plane, Series};
use crate::equation::{Branch, EquationSpec};
use crate::error::Error;
use crate::exact::{format_f64, format_rational, parse_rational, Rational};
use crate::horadam::{check_identity, HoradamSpec, Identity, IdentityKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SINGULAR: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "ratdiff", version, about = "Rational difference equations x' = q/(±p + x^nu)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BranchArg {
    Plus,
    Minus,
}

impl From<BranchArg> for Branch {
    fn from(b: BranchArg) -> Self {
        match b {
            BranchArg::Plus => Branch::Plus,
            BranchArg::Minus => Branch::Minus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlaneArg {
    Exact,
    Float,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Args)]
pub struct EquationArgs {
    #[arg(long, value_enum, default_value = "plus")]
    pub branch: BranchArg,
    #[arg(long, value_parser = rational_arg, default_value = "1")]
    pub p: Rational,
    #[arg(long, value_parser = rational_arg, default_value = "1")]
    pub q: Rational,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Terms W_from ..= W_to of W(a, b; p, q).
    Horadam {
        #[arg(long, value_parser = rational_arg, default_value = "1")]
        p: Rational,
        #[arg(long, value_parser = rational_arg, default_value = "1")]
        q: Rational,
        #[arg(long, value_parser = rational_arg, default_value = "0")]
        a: Rational,
        #[arg(long, value_parser = rational_arg, default_value = "1")]
        b: Rational,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        from: i64,
        #[arg(long, default_value_t = 20, allow_negative_numbers = true)]
        to: i64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Iterate the map.
    Simulate {
        #[command(flatten)]
        eq: EquationArgs,
        #[arg(long, default_value_t = 1)]
        nu: u32,
        #[arg(long, value_parser = rational_arg, default_value = "1", allow_negative_numbers = true)]
        x0: Rational,
        #[arg(long, default_value_t = 20)]
        steps: usize,
        #[arg(long, value_enum, default_value = "float")]
        plane: PlaneArg,
        /// Report the smallest period up to this bound.
        #[arg(long)]
        detect_period: Option<usize>,
        #[arg(long, default_value_t = dynamics::DEFAULT_BURN_IN)]
        burn_in: usize,
        #[arg(long, default_value_t = dynamics::DEFAULT_PERIOD_TOL)]
        period_tol: f64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Exact closed-form solution x_0 ..= x_n (nu = 1).
    ClosedForm {
        #[command(flatten)]
        eq: EquationArgs,
        #[arg(long, value_parser = rational_arg, default_value = "1", allow_negative_numbers = true)]
        x0: Rational,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Forbidden initial values up to a depth (nu = 1).
    Forbidden {
        #[command(flatten)]
        eq: EquationArgs,
        #[arg(long, default_value_t = 10)]
        depth: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Partial products of the orbit and their predicted limit (nu = 1).
    Products {
        #[command(flatten)]
        eq: EquationArgs,
        #[arg(long, value_parser = rational_arg, default_value = "1", allow_negative_numbers = true)]
        x0: Rational,
        #[arg(long, default_value_t = 20)]
        steps: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Equilibria with multipliers and stability.
    Analyze {
        #[command(flatten)]
        eq: EquationArgs,
        #[arg(long, default_value_t = 1)]
        nu: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Prime period-two cycle.
    Period2 {
        #[command(flatten)]
        eq: EquationArgs,
        #[arg(long, default_value_t = 1)]
        nu: u32,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Check every identity for W(0, 1; p, q) on indices up to nmax.
    Identities {
        #[arg(long, value_parser = rational_arg, default_value = "1")]
        p: Rational,
        #[arg(long, value_parser = rational_arg, default_value = "1")]
        q: Rational,
        #[arg(long, default_value_t = 20)]
        nmax: i64,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ForbiddenInitialCondition { .. }
        | Error::InitialAtMinusPhiPlus
        | Error::Singularity { .. }
        | Error::NearSingularity { .. }
        | Error::ZeroDenominator { .. } => EXIT_SINGULAR,
        Error::InvalidParameter(_)
        | Error::DegenerateRecurrence
        | Error::NonRealRoots { .. }
        | Error::RequiresLinearExponent { .. }
        | Error::IndexConstraintViolated { .. }
        | Error::SpecNotCanonical => EXIT_USAGE,
        _ => EXIT_FAILURE,
    }
}

/// Parse `argv` (program name first) and run; returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{e}");
                EXIT_OK
            };
            return code;
        }
    };
    match execute(&cli.command, out, err) {
        Ok(code) => code,
        // reader went away, e.g. `| head`
        Err(Error::OutputClosed) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

type Outcome = crate::error::Result<i32>;

fn io(e: std::io::Error) -> Error {
    if e.kind() == std::io::ErrorKind::BrokenPipe {
        Error::OutputClosed
    } else {
        Error::Output(e.to_string())
    }
}

fn equation(args: &EquationArgs, nu: u32) -> crate::error::Result<EquationSpec> {
    EquationSpec::new(args.branch.into(), args.p.clone(), args.q.clone(), nu)
}

fn write_series(out: &mut dyn Write, format: Format, rows: &[(i64, String)], extra: Value) -> Outcome {
    match format {
        Format::Csv => {
            writeln!(out, "n,value").map_err(io)?;
            for (n, v) in rows {
                writeln!(out, "{n},{v}").map_err(io)?;
            }
        }
        Format::Json => {
            let mut doc = extra;
            doc["series"] = rows
                .iter()
                .map(|(n, v)| json!({"n": n, "value": v}))
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap()).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn execute(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Horadam { p, q, a, b, from, to, format } => {
            let spec = HoradamSpec::new(a.clone(), b.clone(), p.clone(), q.clone())?;
            if from > to {
                return Err(Error::InvalidParameter("--from must not exceed --to".into()));
            }
            let rows: Vec<(i64, String)> = (*from..=*to)
                .zip(spec.terms(*from, *to))
                .map(|(n, w)| (n, format_rational(&w)))
                .collect();
            let extra = json!({
                "a": format_rational(a), "b": format_rational(b),
                "p": format_rational(p), "q": format_rational(q),
            });
            write_series(out, *format, &rows, extra)
        }
        Command::Simulate { eq, nu, x0, steps, plane, detect_period, burn_in, period_tol, format } => {
            let eq = equation(eq, *nu)?;
            let plane = match plane {
                PlaneArg::Exact => Plane::Exact,
                PlaneArg::Float => Plane::Float,
            };
            let orbit = dynamics::iterate(&eq, x0, *steps, plane);
            let rows: Vec<(i64, String)> = match &orbit.series {
                Series::Exact(v) => v.iter().map(format_rational).enumerate().map(|(n, s)| (n as i64, s)).collect(),
                Series::Float(v) => v.iter().map(|x| format_f64(*x)).enumerate().map(|(n, s)| (n as i64, s)).collect(),
            };
            let mut extra = json!({
                "equation": eq.to_string(),
                "plane": match plane { Plane::Exact => "exact", Plane::Float => "float" },
                "status": orbit.status,
            });
            if let Some(max_period) = detect_period {
                let found = dynamics::detect_period_with_burn_in(&orbit, *max_period, *period_tol, *burn_in)?;
                match format {
                    Format::Csv => match found {
                        Some(d) => writeln!(out, "# period {} phase {}", d.period, d.phase).map_err(io)?,
                        None => writeln!(out, "# period none").map_err(io)?,
                    },
                    Format::Json => {
                        extra["period"] = match found {
                            Some(d) => json!({"period": d.period, "phase": d.phase}),
                            None => Value::Null,
                        };
                    }
                }
            }
            write_series(out, *format, &rows, extra)?;
            match orbit.status {
                OrbitStatus::Completed => Ok(EXIT_OK),
                OrbitStatus::HitSingularity(step) => {
                    writeln!(err, "error: zero denominator at step {step}").map_err(io)?;
                    Ok(EXIT_SINGULAR)
                }
                OrbitStatus::NearSingular(step) => {
                    writeln!(err, "error: denominator below guard at step {step}").map_err(io)?;
                    Ok(EXIT_SINGULAR)
                }
            }
        }
        Command::ClosedForm { eq, x0, n, format } => {
            let eq = equation(eq, 1)?;
            let series = closed_form::closed_form_series(&eq, x0, *n)?;
            let rows: Vec<(i64, String)> = series
                .iter()
                .enumerate()
                .map(|(i, x)| (i as i64, format_rational(x)))
                .collect();
            write_series(out, *format, &rows, json!({"equation": eq.to_string(), "status": "completed"}))
        }
        Command::Forbidden { eq, depth, format } => {
            let eq = equation(eq, 1)?;
            let points = closed_form::forbidden_points(&eq, *depth)?;
            match format {
                Format::Csv => {
                    writeln!(out, "m,value").map_err(io)?;
                    for pt in &points {
                        writeln!(out, "{},{}", pt.m, format_rational(&pt.value)).map_err(io)?;
                    }
                }
                Format::Json => {
                    let doc = json!({
                        "equation": eq.to_string(),
                        "points": points.iter()
                            .map(|pt| json!({"m": pt.m, "value": format_rational(&pt.value)}))
                            .collect::<Vec<_>>(),
                    });
                    writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap()).map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Products { eq, x0, steps, format } => {
            let eq = equation(eq, 1)?;
            let a = closed_form::product_analysis(&eq, x0, *steps)?;
            let regime = match a.regime {
                ProductRegime::PGreaterQm1 => "p>q-1",
                ProductRegime::PEqualQm1 => "p=q-1",
                ProductRegime::PLessQm1 => "p<q-1",
            };
            let limit = a.predicted_limit.map(format_f64);
            let parity = a.alternating.then(|| a.parity_limits()).flatten();
            let rows: Vec<(i64, String)> = a
                .partials
                .iter()
                .enumerate()
                .map(|(n, x)| (n as i64, format_rational(x)))
                .collect();
            match format {
                Format::Csv => {
                    writeln!(out, "# regime {regime}").map_err(io)?;
                    match (&limit, parity) {
                        (_, Some((even, odd))) => writeln!(
                            out,
                            "# predicted_limit even {} odd {}",
                            format_f64(even),
                            format_f64(odd)
                        ),
                        (Some(l), None) => writeln!(out, "# predicted_limit {l}"),
                        (None, None) => writeln!(out, "# predicted_limit none"),
                    }
                    .map_err(io)?;
                    write_series(out, Format::Csv, &rows, Value::Null)
                }
                Format::Json => {
                    let extra = json!({
                        "equation": eq.to_string(),
                        "regime": regime,
                        "predicted_limit": limit,
                        "parity_limits": parity.map(|(e, o)| json!({"even": format_f64(e), "odd": format_f64(o)})),
                        "status": "completed",
                    });
                    write_series(out, Format::Json, &rows, extra)
                }
            }
        }
        Command::Analyze { eq, nu, format } => {
            let eq = equation(eq, *nu)?;
            let reports = analysis::equilibria(&eq)?;
            match format {
                Format::Csv => {
                    writeln!(out, "value,multiplier,classification,bracket").map_err(io)?;
                    for r in &reports {
                        writeln!(
                            out,
                            "{},{},{:?},{:?}",
                            format_f64(r.value),
                            format_f64(r.multiplier),
                            r.classification,
                            r.bracket
                        )
                        .map_err(io)?;
                    }
                }
                Format::Json => {
                    let doc = json!({"equation": eq.to_string(), "equilibria": reports});
                    writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap()).map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Period2 { eq, nu, tol, format } => {
            if !(*tol > 0.0) {
                return Err(Error::InvalidParameter("--tol must be positive".into()));
            }
            let eq = equation(eq, *nu)?;
            let cycle = analysis::solve_period_two(&eq, *tol);
            match format {
                Format::Csv => {
                    writeln!(out, "phi,psi,residual,approx_phi,approx_psi").map_err(io)?;
                    if let Some(c) = &cycle {
                        writeln!(
                            out,
                            "{},{},{},{},{}",
                            format_f64(c.phi),
                            format_f64(c.psi),
                            format_f64(c.residual),
                            format_f64(c.approx_form.0),
                            format_f64(c.approx_form.1)
                        )
                        .map_err(io)?;
                    }
                }
                Format::Json => {
                    let doc = json!({"equation": eq.to_string(), "cycle": cycle});
                    writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap()).map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Identities { p, q, nmax } => {
            let spec = HoradamSpec::canonical(p.clone(), q.clone())?;
            if *nmax < 3 {
                return Err(Error::InvalidParameter("--nmax must be at least 3".into()));
            }
            writeln!(out, "identity,checked,failed").map_err(io)?;
            let mut total_failed = 0;
            for kind in IdentityKind::ALL {
                let cases = identity_cases(kind, *nmax);
                let failed = cases
                    .iter()
                    .filter(|c| !check_identity(c, &spec).map(|r| r.is_zero()).unwrap_or(false))
                    .count();
                total_failed += failed;
                writeln!(out, "{},{},{}", kind.name(), cases.len(), failed).map_err(io)?;
            }
            if total_failed > 0 {
                writeln!(err, "error: {total_failed} identity checks failed").map_err(io)?;
                Ok(EXIT_FAILURE)
            } else {
                Ok(EXIT_OK)
            }
        }
    }
}

/// Admissible index tuples up to `nmax`. Johnson tuples use indices in
/// `-3..=min(nmax, 10)` with `k >= l`, `m >= n` and `r` in `{-1, 1, 2}`.
fn identity_cases(kind: IdentityKind, nmax: i64) -> Vec<Identity> {
    match kind {
        IdentityKind::Cassini => (1..=nmax).map(|n| Identity::Cassini { n }).collect(),
        IdentityKind::PhiPower => (1..=nmax).map(|n| Identity::PhiPower { n }).collect(),
        IdentityKind::Convolution => (2..=nmax)
            .flat_map(|n| (0..n - 1).map(move |k| Identity::Convolution { n, k }))
            .collect(),
        IdentityKind::DOcagne => (1..nmax)
            .flat_map(|n| (1..nmax - n).map(move |r| Identity::DOcagne { n, r }))
            .collect(),
        IdentityKind::Johnson => {
            let top = nmax.min(10);
            let mut cases = Vec::new();
            for k in -3..=top {
                for l in -3..=k {
                    for m in -3..=top {
                        let n = k + l - m;
                        if n < -3 || n > m {
                            continue;
                        }
                        for r in [-1, 1, 2] {
                            cases.push(Identity::Johnson { k, l, m, n, r });
                        }
                    }
                }
            }
            cases
        }
    }
}
