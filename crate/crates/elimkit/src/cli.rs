//! Command-line front end. `run` does all the work so tests can drive it
//! without spawning a process.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{ElimError, Result};
use crate::exactalg::UniPoly;
use crate::harness::{run_trials_jobs, Mode, SpecializationSpec, TrialSummary, DEFAULT_COEFF_BOUND};
use crate::identities::{quartic_showcase, IdentityId};
use crate::macaulay::{disc_pair, disc_ternary, res_xs};
use crate::multipoly::{mp_delta_pow, parse_poly, MultiPoly, PARAM_T, PARAM_X};
use crate::sylvester::{disc_in, res_in, sres1_in};

pub const SEED_ENV: &str = "ELIMKIT_SEED";
const DEFAULT_SEED: u64 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "elimkit", version, about = "Exact resultants, discriminants and elimination identities")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Sylvester resultant of two polynomials in --var.
    Res(Univariate2),
    /// Principal subresultant SRes1 of two polynomials in --var.
    Sres1(Univariate2),
    /// Discriminant of one polynomial in --var.
    Disc(Univariate1),
    /// Macaulay resultant of n forms in X1..Xn (y = X2, z = X3, zp = X4).
    Mres(Forms),
    /// Discriminant of a ternary form in X1, X2, X3.
    Disc3(Forms),
    /// Discriminant of a pair of ternary forms.
    Disc2(Forms),
    /// Divided difference delta^k from --from to --to.
    Delta(DeltaArgs),
    /// Verify one identity on seeded random specializations.
    Verify(VerifyArgs),
    /// Verify every identity at its suite degrees.
    VerifyAll(SuiteArgs),
    /// Iterated discriminant of the quartic surface and its factorization.
    ExampleQuartic,
}

#[derive(Args, Debug)]
struct Univariate2 {
    #[arg(long)]
    var: String,
    /// Declared degree, once per input.
    #[arg(long = "deg", required = true, num_args = 1)]
    degs: Vec<u32>,
    /// Polynomials, inline or @file.
    #[arg(num_args = 2, required = true, allow_hyphen_values = true)]
    polys: Vec<String>,
}

#[derive(Args, Debug)]
struct Univariate1 {
    #[arg(long)]
    var: String,
    #[arg(long = "deg", required = true, num_args = 1)]
    degs: Vec<u32>,
    #[arg(num_args = 1, required = true, allow_hyphen_values = true)]
    polys: Vec<String>,
}

#[derive(Args, Debug)]
struct Forms {
    #[arg(long = "deg", required = true, num_args = 1)]
    degs: Vec<u32>,
    #[arg(num_args = 1.., required = true, allow_hyphen_values = true)]
    polys: Vec<String>,
}

#[derive(Args, Debug)]
struct DeltaArgs {
    #[arg(long, default_value_t = 1)]
    k: u32,
    #[arg(long, default_value = "z")]
    from: String,
    #[arg(long, default_value = "zp")]
    to: String,
    #[arg(allow_hyphen_values = true)]
    poly: String,
}

#[derive(Args, Debug, Clone)]
struct TrialArgs {
    #[arg(long, default_value_t = 20)]
    trials: usize,
    /// Base seed; defaults to $ELIMKIT_SEED, then 1.
    #[arg(long)]
    seed: Option<u64>,
    /// integer, x, t (all components) or t-probe:<k>.
    #[arg(long, default_value = "integer")]
    mode: String,
    #[arg(long, default_value_t = DEFAULT_COEFF_BOUND)]
    coeff_bound: i64,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Include wall-clock timings (makes output non-reproducible).
    #[arg(long)]
    timings: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    id: String,
    /// Comma-separated degrees, e.g. 1,1,1,1.
    #[arg(long)]
    degrees: String,
    #[command(flatten)]
    trials: TrialArgs,
}

#[derive(Args, Debug)]
struct SuiteArgs {
    #[command(flatten)]
    trials: TrialArgs,
}

fn usage(msg: impl Into<String>) -> ElimError {
    ElimError::InvalidArgument(msg.into())
}

fn exit_code(e: &ElimError) -> i32 {
    match e {
        ElimError::InvalidArgument(_)
        | ElimError::Parse { .. }
        | ElimError::DegreeExceeded { .. }
        | ElimError::NonHomogeneous(_) => EXIT_USAGE,
        _ => EXIT_FAILURE,
    }
}

fn read_poly(src: &str) -> Result<MultiPoly<BigInt>> {
    match src.strip_prefix('@') {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))?;
            parse_poly(text.trim())
        }
        None => parse_poly(src),
    }
}

fn var_slot(name: &str) -> Result<usize> {
    let p = parse_poly(name).map_err(|_| usage(format!("unknown variable '{name}'")))?;
    let mut it = p.iter();
    match (it.next(), it.next()) {
        (Some((m, c)), None) if *c == BigInt::from(1) && m.degree() == 1 => {
            Ok((0..6).find(|&v| m.exp(v) == 1).expect("degree-one monomial"))
        }
        _ => Err(usage(format!("'{name}' is not a variable"))),
    }
}

fn check_count(degs: &[u32], polys: &[String]) -> Result<()> {
    if degs.len() != polys.len() {
        return Err(usage(format!(
            "{} polynomial(s) need {} --deg flag(s), got {}",
            polys.len(),
            polys.len(),
            degs.len()
        )));
    }
    Ok(())
}

/// Forms for the Macaulay commands, with x moved into the coefficients.
fn forms(f: &Forms, n: Option<usize>) -> Result<Vec<MultiPoly<UniPoly>>> {
    check_count(&f.degs, &f.polys)?;
    if let Some(n) = n {
        if f.polys.len() != n {
            return Err(usage(format!("expected {n} form(s), got {}", f.polys.len())));
        }
    }
    f.polys
        .iter()
        .map(|s| {
            let p = read_poly(s)?;
            if p.involves(PARAM_T) {
                return Err(usage("only x may appear as a coefficient parameter here"));
            }
            Ok(p.extract_param(PARAM_X))
        })
        .collect()
}

#[derive(Serialize)]
struct ValueOut {
    result: String,
}

fn emit_value(out: &mut dyn Write, json: bool, v: impl std::fmt::Display) -> std::io::Result<()> {
    if json {
        writeln!(out, "{}", serde_json::to_string(&ValueOut { result: v.to_string() }).unwrap())
    } else {
        writeln!(out, "{v}")
    }
}

fn parse_degrees(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| usage(format!("bad degree list '{s}'"))))
        .collect()
}

fn seed_from_env(env_seed: Option<String>) -> Result<u64> {
    match env_seed {
        None => Ok(DEFAULT_SEED),
        Some(s) => s
            .trim()
            .parse()
            .map_err(|_| usage(format!("{SEED_ENV}='{s}' is not a 64-bit unsigned integer"))),
    }
}

/// Runs the trials, probing every component when mode is plain `t`.
fn run_identity(id: IdentityId, degs: &[u32], a: &TrialArgs, seed: u64) -> Result<TrialSummary> {
    let modes: Vec<Mode> = if a.mode == "t" || a.mode == "t-probe" {
        id.validate(degs)?;
        (0..id.poly_degrees(degs).len())
            .map(|component| Mode::TScalingProbe { component })
            .collect()
    } else {
        vec![a.mode.parse()?]
    };
    let mut summary: Option<TrialSummary> = None;
    for mode in modes {
        let spec = SpecializationSpec {
            mode,
            seed,
            coeff_bound: a.coeff_bound,
        };
        if spec.coeff_bound < 2 {
            return Err(usage("--coeff-bound must be at least 2"));
        }
        let s = run_trials_jobs(id, degs, a.trials, &spec, a.jobs)?;
        match &mut summary {
            None => summary = Some(s),
            Some(acc) => acc.merge(s),
        }
    }
    let mut s = summary.expect("at least one mode");
    if !a.timings {
        s.timings_ms = None;
    }
    Ok(s)
}

fn emit_summary(out: &mut dyn Write, json: bool, s: &TrialSummary) -> std::io::Result<()> {
    if json {
        return writeln!(out, "{}", serde_json::to_string(s).unwrap());
    }
    let degs: Vec<String> = s.degrees.iter().map(u32::to_string).collect();
    writeln!(
        out,
        "{} {} degrees={} mode={} seed={} trials={} rerolls={} failures={} {}",
        s.identity,
        s.identity.label(),
        degs.join(","),
        s.mode,
        s.seed,
        s.trials,
        s.rerolls,
        s.failures.len(),
        if s.ok() { "OK" } else { "FAIL" }
    )?;
    for f in &s.failures {
        writeln!(out, "  seed {}: {}", f.seed, f.detail)?;
    }
    if let Some(t) = &s.timings_ms {
        writeln!(out, "  time {:.1} ms", t.total)?;
    }
    Ok(())
}

fn dispatch(cli: Cli, env_seed: Option<String>, out: &mut dyn Write) -> Result<i32> {
    let json = cli.json;
    let io = |r: std::io::Result<()>| r.map_err(|e| ElimError::InvalidArgument(format!("output error: {e}")));
    match cli.cmd {
        Cmd::Res(a) => {
            check_count(&a.degs, &a.polys)?;
            let v = var_slot(&a.var)?;
            let r = res_in(&read_poly(&a.polys[0])?, &read_poly(&a.polys[1])?, v, a.degs[0], a.degs[1])?;
            io(emit_value(out, json, r))?;
        }
        Cmd::Sres1(a) => {
            check_count(&a.degs, &a.polys)?;
            let v = var_slot(&a.var)?;
            let r = sres1_in(&read_poly(&a.polys[0])?, &read_poly(&a.polys[1])?, v, a.degs[0], a.degs[1])?;
            io(emit_value(out, json, r))?;
        }
        Cmd::Disc(a) => {
            check_count(&a.degs, &a.polys)?;
            let v = var_slot(&a.var)?;
            let r = disc_in(&read_poly(&a.polys[0])?, v, a.degs[0])?;
            io(emit_value(out, json, r))?;
        }
        Cmd::Mres(f) => {
            if f.polys.len() > 4 {
                return Err(usage("mres takes at most 4 forms"));
            }
            let ps = forms(&f, None)?;
            io(emit_value(out, json, res_xs(&ps, &f.degs)?))?;
        }
        Cmd::Disc3(f) => {
            let ps = forms(&f, Some(1))?;
            io(emit_value(out, json, disc_ternary(&ps[0], f.degs[0])?))?;
        }
        Cmd::Disc2(f) => {
            let ps = forms(&f, Some(2))?;
            io(emit_value(out, json, disc_pair(&ps[0], &ps[1], f.degs[0], f.degs[1])?))?;
        }
        Cmd::Delta(a) => {
            let (i, j) = (var_slot(&a.from)?, var_slot(&a.to)?);
            if i > 3 || j > 3 {
                return Err(usage("delta acts on X1..X4"));
            }
            let r = mp_delta_pow(&read_poly(&a.poly)?, i, j, a.k)?;
            io(emit_value(out, json, r))?;
        }
        Cmd::Verify(a) => {
            let id: IdentityId = a.id.parse()?;
            let degs = parse_degrees(&a.degrees)?;
            let seed = match a.trials.seed {
                Some(s) => s,
                None => seed_from_env(env_seed)?,
            };
            let s = run_identity(id, &degs, &a.trials, seed)?;
            io(emit_summary(out, json, &s))?;
            return Ok(if s.ok() { EXIT_OK } else { EXIT_FAILURE });
        }
        Cmd::VerifyAll(a) => {
            let seed = match a.trials.seed {
                Some(s) => s,
                None => seed_from_env(env_seed)?,
            };
            let mut all = Vec::new();
            for id in IdentityId::ALL {
                for degs in id.suite_degrees() {
                    all.push(run_identity(id, &degs, &a.trials, seed)?);
                }
            }
            if json {
                io(writeln!(out, "{}", serde_json::to_string(&all).unwrap()))?;
            } else {
                for s in &all {
                    io(emit_summary(out, false, s))?;
                }
            }
            return Ok(if all.iter().all(TrialSummary::ok) {
                EXIT_OK
            } else {
                EXIT_FAILURE
            });
        }
        Cmd::ExampleQuartic => {
            let rep = quartic_showcase()?;
            if json {
                io(writeln!(out, "{}", serde_json::to_string(&rep).unwrap()))?;
            } else {
                io(writeln!(out, "{rep}"))?;
            }
            return Ok(if rep.ok() { EXIT_OK } else { EXIT_FAILURE });
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs the command.
/// `env_seed` is the value of ELIMKIT_SEED, if set.
pub fn run<I, T>(args: I, env_seed: Option<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match dispatch(cli, env_seed, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
