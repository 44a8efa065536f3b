//! `stfib`: generalized Fibonacci polynomials, simplicial polytopic numbers,
//! and machine verification of the identities built on them.
//!
//! Exit codes: 0 all checks as expected, 1 a check landed somewhere
//! unexpected, 2 usage or evaluation error.

mod mode;
mod oeis;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use stfib::fib::FibCache;
use stfib::numerics::{
    alt_tri_report, even_reciprocal_report, odd_reciprocal_report, standard_battery,
    tri_reciprocal_report, zeta_report, NumericReport,
};
use stfib::params::{standard_families, Params};
use stfib::polytopic::{default_limits, find_claim, run_catalog, run_claim, simplicial, SweepLimits, CLAIM_CATALOG};
use stfib::ring::{Rat, Ring, VARS_Q, VARS_ST};
use stfib::series::run_gf_checks;

use mode::{parse_range, parse_rat, ModeArgs};

#[derive(Parser)]
#[command(
    name = "stfib",
    version,
    about = "Generalized Fibonacci polynomials {n}, simplicial d-polytopic numbers, and machine checks of the identities and reciprocal sums built on them"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print {n} (or the companion <n>) over an index range
    Seq(SeqArgs),
    /// Print simplicial d-polytopic values over an index range
    Poly(PolyArgs),
    /// Print one generalized binomial {n | k}
    Binom(BinomArgs),
    /// Sweep identity claims and report verdicts
    Verify(VerifyArgs),
    /// Expand generating functions and compare coefficients exactly
    Gf(GfArgs),
    /// Certified reciprocal power sum sum 1/{n}^z
    Zeta(ZetaArgs),
    /// Certified reciprocal-sum claims against their closed forms
    Sums(SumsArgs),
    /// Compare derived integer sequences against b-file fixtures
    OeisCheck(OeisArgs),
    /// Run everything and print the full report with errata
    Report(ReportArgs),
}

#[derive(Args)]
struct SeqArgs {
    #[command(flatten)]
    mode: ModeArgs,
    /// Inclusive index range a..b, or a single index
    #[arg(long, default_value = "0..10")]
    n: String,
    /// Print the companion sequence <n> instead of {n}
    #[arg(long)]
    lucas: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct PolyArgs {
    #[command(flatten)]
    mode: ModeArgs,
    /// Simplicial dimension d >= 1
    #[arg(long, default_value_t = 2)]
    d: u32,
    /// Inclusive index range a..b, or a single index
    #[arg(long, default_value = "0..10")]
    n: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BinomArgs {
    #[command(flatten)]
    mode: ModeArgs,
    #[arg(long)]
    n: i64,
    #[arg(long)]
    k: i64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    mode: ModeArgs,
    /// Only this claim (see --list for names)
    #[arg(long)]
    claim: Option<String>,
    /// List catalog claims and exit
    #[arg(long)]
    list: bool,
    /// Override the sweep's maximum n
    #[arg(long)]
    max_n: Option<u32>,
    /// Override the sweep's maximum d
    #[arg(long)]
    max_d: Option<u32>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct GfArgs {
    #[command(flatten)]
    mode: ModeArgs,
    /// Expansion order (coefficients 0..=order are compared)
    #[arg(long, default_value_t = 25)]
    order: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ZetaArgs {
    #[command(flatten)]
    mode: ModeArgs,
    /// Exponent z (rational)
    #[arg(long, default_value = "1")]
    z: String,
    /// Reporting precision in bits
    #[arg(long, default_value_t = 256)]
    prec: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SumsArgs {
    /// Which claim battery: all, zeta, even, odd, tri, alt
    #[arg(long, default_value = "all")]
    which: String,
    #[command(flatten)]
    mode: ModeArgs,
    /// Reporting precision in bits
    #[arg(long, default_value_t = 256)]
    prec: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct OeisArgs {
    /// Directory of b-files (default: the bundled fixtures)
    #[arg(long)]
    fixtures: Option<PathBuf>,
    /// Download fresh b-files from oeis.org into --fixtures first
    #[arg(long, requires = "fixtures")]
    fetch: bool,
    /// Compare at most this many terms per sequence
    #[arg(long, default_value_t = 40)]
    max_terms: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ReportArgs {
    /// Reporting precision in bits for the numeric battery
    #[arg(long, default_value_t = 256)]
    prec: usize,
    /// Generating-function expansion order
    #[arg(long, default_value_t = 25)]
    order: usize,
    /// Directory of b-files (default: the bundled fixtures)
    #[arg(long)]
    fixtures: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.cmd {
        Cmd::Seq(a) => cmd_seq(a),
        Cmd::Poly(a) => cmd_poly(a),
        Cmd::Binom(a) => cmd_binom(a),
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::Gf(a) => cmd_gf(a),
        Cmd::Zeta(a) => cmd_zeta(a),
        Cmd::Sums(a) => cmd_sums(a),
        Cmd::OeisCheck(a) => cmd_oeis(a),
        Cmd::Report(a) => cmd_report(a),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit_json<T: Serialize>(value: &T) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    println!("{text}");
    Ok(())
}

#[derive(Serialize)]
struct ValueRow {
    n: i64,
    value: String,
}

#[derive(Serialize)]
struct ValuesDoc {
    schema: u32,
    command: String,
    params: String,
    values: Vec<ValueRow>,
}

/// Render one sequence value in whichever ring the parameters select.
fn sequence_values(
    params: &Params,
    lo: i64,
    hi: i64,
    f: impl Fn(&FibCache<stfib::poly::Poly2>, i64) -> Result<String, String>,
    g: impl Fn(&FibCache<Rat>, i64) -> Result<String, String>,
) -> Result<Vec<ValueRow>, String> {
    let mut rows = Vec::new();
    match params {
        Params::Rational { .. } => {
            let fc = FibCache::new(params.st_context_rat().expect("rational"));
            for n in lo..=hi {
                rows.push(ValueRow { n, value: g(&fc, n)? });
            }
        }
        Params::Symbolic => {
            let fc = FibCache::new(Params::st_context_sym());
            for n in lo..=hi {
                rows.push(ValueRow { n, value: f(&fc, n)? });
            }
        }
        Params::QSymbolic => {
            let fc = FibCache::new(Params::st_context_q());
            for n in lo..=hi {
                rows.push(ValueRow { n, value: f(&fc, n)? });
            }
        }
    }
    Ok(rows)
}

fn print_rows(params: &Params, rows: &[ValueRow]) {
    match params {
        Params::Rational { .. } => {
            let line: Vec<&str> = rows.iter().map(|r| r.value.as_str()).collect();
            println!("{}", line.join(" "));
        }
        _ => {
            for r in rows {
                println!("{}: {}", r.n, r.value);
            }
        }
    }
}

fn vars_for(params: &Params) -> &'static stfib::ring::VarNames {
    match params {
        Params::QSymbolic => &VARS_Q,
        _ => &VARS_ST,
    }
}

fn cmd_seq(a: SeqArgs) -> Result<bool, String> {
    let params = a.mode.to_params_or_symbolic()?;
    let (lo, hi) = parse_range(&a.n)?;
    if lo < 0 {
        return Err("negative indices are not defined here".into());
    }
    let vars = vars_for(&params);
    let lucas = a.lucas;
    let rows = sequence_values(
        &params,
        lo,
        hi,
        |fc, n| {
            let v = if lucas { fc.lucas(n as usize) } else { fc.fib(n as usize) };
            Ok(v.render(vars))
        },
        |fc, n| {
            let v = if lucas { fc.lucas(n as usize) } else { fc.fib(n as usize) };
            Ok(v.render(vars))
        },
    )?;
    if a.json {
        emit_json(&ValuesDoc {
            schema: 1,
            command: "seq".into(),
            params: params.describe(),
            values: rows,
        })?;
    } else {
        print_rows(&params, &rows);
    }
    Ok(true)
}

fn cmd_poly(a: PolyArgs) -> Result<bool, String> {
    let params = a.mode.to_params_or_symbolic()?;
    let (lo, hi) = parse_range(&a.n)?;
    if lo < 0 {
        return Err("negative indices are not defined here".into());
    }
    if a.d == 0 {
        return Err("d must be at least 1".into());
    }
    let vars = vars_for(&params);
    let d = a.d as i64;
    let rows = sequence_values(
        &params,
        lo,
        hi,
        |fc, n| simplicial(fc, n, d).map(|v| v.render(vars)).map_err(|e| e.to_string()),
        |fc, n| simplicial(fc, n, d).map(|v| v.render(vars)).map_err(|e| e.to_string()),
    )?;
    if a.json {
        emit_json(&ValuesDoc {
            schema: 1,
            command: "poly".into(),
            params: params.describe(),
            values: rows,
        })?;
    } else {
        print_rows(&params, &rows);
    }
    Ok(true)
}

fn cmd_binom(a: BinomArgs) -> Result<bool, String> {
    let params = a.mode.to_params_or_symbolic()?;
    let vars = vars_for(&params);
    let rows = sequence_values(
        &params,
        0,
        0,
        |fc, _| fc.fibonomial(a.n, a.k).map(|v| v.render(vars)).map_err(|e| e.to_string()),
        |fc, _| fc.fibonomial(a.n, a.k).map(|v| v.render(vars)).map_err(|e| e.to_string()),
    )?;
    if a.json {
        emit_json(&ValuesDoc {
            schema: 1,
            command: "binom".into(),
            params: params.describe(),
            values: rows,
        })?;
    } else {
        println!("{}", rows[0].value);
    }
    Ok(true)
}

#[derive(Serialize)]
struct ClaimsDoc {
    schema: u32,
    command: String,
    reports: Vec<stfib::claims::ClaimReport>,
    all_as_expected: bool,
}

fn limits_for(params: &Params, a: &VerifyArgs) -> SweepLimits {
    let mut l = default_limits(params);
    if let Some(n) = a.max_n {
        l.max_n = n;
    }
    if let Some(d) = a.max_d {
        l.max_d = d;
    }
    l
}

fn cmd_verify(a: VerifyArgs) -> Result<bool, String> {
    if a.list {
        for spec in CLAIM_CATALOG {
            println!("{:<32} {}", spec.name, spec.description);
        }
        return Ok(true);
    }
    let mut reports = Vec::new();
    let param_sets: Vec<Params> = if a.mode.is_given() {
        vec![a.mode.to_params()?]
    } else {
        let mut v = vec![Params::Symbolic, Params::QSymbolic];
        v.extend(standard_families());
        v
    };
    for params in &param_sets {
        let limits = limits_for(params, &a);
        match &a.claim {
            Some(name) => {
                let spec =
                    find_claim(name).ok_or_else(|| format!("unknown claim '{name}'"))?;
                if stfib::polytopic::applicable(spec, params) {
                    reports.push(run_claim(spec, params, &limits));
                }
            }
            None => reports.extend(run_catalog(params, &limits)),
        }
    }
    if reports.is_empty() {
        return Err("no applicable claim runs for these parameters".into());
    }
    let ok = reports.iter().all(|r| r.as_expected);
    if a.json {
        emit_json(&ClaimsDoc {
            schema: 1,
            command: "verify".into(),
            all_as_expected: ok,
            reports,
        })?;
    } else {
        for r in &reports {
            println!("{}", r.summary_line());
            for f in &r.failures {
                println!("    {}: lhs={} rhs={}", f.instance, f.lhs, f.rhs);
            }
            if let Some(e) = &r.error {
                println!("    error: {e}");
            }
        }
    }
    Ok(ok)
}

fn cmd_gf(a: GfArgs) -> Result<bool, String> {
    let mut reports = Vec::new();
    if a.mode.is_given() {
        reports.extend(run_gf_checks(&a.mode.to_params()?, a.order));
    } else {
        reports.extend(run_gf_checks(&Params::Symbolic, a.order));
        reports.extend(run_gf_checks(&Params::QSymbolic, a.order));
    }
    let ok = reports.iter().all(|r| r.as_expected);
    if a.json {
        emit_json(&ClaimsDoc {
            schema: 1,
            command: "gf".into(),
            all_as_expected: ok,
            reports,
        })?;
    } else {
        for r in &reports {
            println!("{}", r.summary_line());
            for f in &r.failures {
                println!("    {}: lhs={} rhs={}", f.instance, f.lhs, f.rhs);
            }
        }
    }
    Ok(ok)
}

#[derive(Serialize)]
struct NumericDoc {
    schema: u32,
    command: String,
    reports: Vec<NumericReport>,
    all_as_expected: bool,
}

fn print_numeric(reports: &[NumericReport]) {
    for r in reports {
        println!("{}", r.summary_line());
        if let Some(lhs) = &r.lhs {
            println!(
                "    value {} (tail <= {}, {} terms)",
                lhs.value_sig, lhs.tail_bound, lhs.terms_used
            );
        }
        for c in &r.comparisons {
            println!(
                "    {}: rhs={} |diff|={} tol={} -> {:?}",
                c.label, c.rhs_value, c.abs_difference, c.tolerance, c.verdict
            );
        }
        for n in &r.notes {
            println!("    note: {n}");
        }
    }
}

fn cmd_zeta(a: ZetaArgs) -> Result<bool, String> {
    if !a.mode.is_given() || a.mode.symbolic || a.mode.q_symbolic {
        return Err("zeta needs rational parameters (--family or --s/--t)".into());
    }
    let params = a.mode.to_params()?;
    let z = parse_rat(&a.z)?;
    let rep = zeta_report(&params, &z, a.prec);
    let ok = rep.as_expected;
    if a.json {
        emit_json(&NumericDoc {
            schema: 1,
            command: "zeta".into(),
            all_as_expected: ok,
            reports: vec![rep],
        })?;
    } else {
        print_numeric(std::slice::from_ref(&rep));
    }
    Ok(ok)
}

fn cmd_sums(a: SumsArgs) -> Result<bool, String> {
    let reports: Vec<NumericReport> = match a.which.as_str() {
        "all" => {
            if a.mode.is_given() {
                let params = a.mode.to_params()?;
                let (s, _) = params
                    .rational_st()
                    .ok_or("sums needs rational parameters")?;
                let mut v = vec![
                    zeta_report(&params, &<Rat as Ring>::one(), a.prec),
                    even_reciprocal_report(&params, a.prec),
                    tri_reciprocal_report(&params, a.prec),
                    alt_tri_report(&params, a.prec),
                ];
                if params.rational_st().map(|(_, t)| t == &<Rat as Ring>::one()) == Some(true) {
                    v.push(odd_reciprocal_report(s, a.prec));
                }
                v
            } else {
                standard_battery(a.prec)
            }
        }
        which => {
            let params = a.mode.to_params()?;
            let report = match which {
                "zeta" => zeta_report(&params, &<Rat as Ring>::one(), a.prec),
                "even" => even_reciprocal_report(&params, a.prec),
                "tri" => tri_reciprocal_report(&params, a.prec),
                "alt" => alt_tri_report(&params, a.prec),
                "odd" => {
                    let (s, t) = params
                        .rational_st()
                        .ok_or("sums needs rational parameters")?;
                    if t != &<Rat as Ring>::one() {
                        return Err("the odd-index sum's closed form needs t = 1".into());
                    }
                    odd_reciprocal_report(s, a.prec)
                }
                other => return Err(format!("unknown battery '{other}'")),
            };
            vec![report]
        }
    };
    let ok = reports.iter().all(|r| r.as_expected);
    if a.json {
        emit_json(&NumericDoc {
            schema: 1,
            command: "sums".into(),
            all_as_expected: ok,
            reports,
        })?;
    } else {
        print_numeric(&reports);
    }
    Ok(ok)
}

#[derive(Serialize)]
struct OeisDoc {
    schema: u32,
    command: String,
    reports: Vec<oeis::OeisReport>,
    all_ok: bool,
}

fn cmd_oeis(a: OeisArgs) -> Result<bool, String> {
    if a.fetch {
        let dir = a.fixtures.as_ref().expect("clap requires fixtures with fetch");
        oeis::fetch_all(dir)?;
    }
    let reports = oeis::run_checks(a.fixtures.as_ref(), a.max_terms);
    let ok = reports.iter().all(|r| r.ok);
    if a.json {
        emit_json(&OeisDoc {
            schema: 1,
            command: "oeis-check".into(),
            all_ok: ok,
            reports,
        })?;
    } else {
        for r in &reports {
            println!("{}", r.summary_line());
            for m in &r.mismatches {
                println!("    {m}");
            }
        }
    }
    Ok(ok)
}

fn cmd_report(a: ReportArgs) -> Result<bool, String> {
    let doc = report::build(a.prec, a.order, a.fixtures.as_ref());
    let ok = doc.all_as_expected;
    if a.json {
        emit_json(&doc)?;
    } else {
        print!("{}", report::render_text(&doc));
    }
    Ok(ok)
}
