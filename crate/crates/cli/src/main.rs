mod output;
mod parse;

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use puiseux_core::algnum::{Alg, Tower};
use puiseux_core::oracle::{residual_consistent, solution_residual};
use puiseux_core::poly::{BivPoly, Coord, CurvePoint};
use puiseux_core::solver::{prepare, puiseux_solve, puiseux_solve_at, puiseux_solve_infinity, truncation_bound, truncation_bound_infinity, SolveOptions, SolveReport};
use puiseux_core::Error;

use output::{human, json_solution, JsonReport};
use parse::{parse_equation, parse_univariate};

/// Formal Puiseux series solutions of F(y, y') = 0, with p standing for y'.
#[derive(Parser)]
#[command(name = "puiseux", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solutions around a finite point x = 0.
    Solve(Common),
    /// Solutions at infinity, in powers of 1/x.
    SolveInfinity(Common),
}

#[derive(Args)]
struct Common {
    /// The polynomial F in y and p, or "-" to read it from stdin.
    equation: String,
    /// Number of terms; defaults to the equation's truncation bound.
    #[arg(long)]
    terms: Option<u32>,
    /// Restrict to one initial tuple "y0,p0". Each coordinate is a rational,
    /// "inf", or "root(<polynomial in z>)".
    #[arg(long)]
    point: Option<String>,
    /// Also list every conjugate numerically.
    #[arg(long)]
    expand_conjugates: bool,
    /// Print a JSON report instead of text.
    #[arg(long)]
    json: bool,
    /// Check every output's residual and fail on a violation.
    #[arg(long)]
    verify: bool,
    /// Upper limit on the number of terms, whatever its source.
    #[arg(long)]
    max_denominator_terms: Option<u32>,
}

const EXIT_PARSE: u8 = 1;
const EXIT_DEGENERATE: u8 = 2;
const EXIT_VERIFY: u8 = 3;
const EXIT_OTHER: u8 = 4;
const LARGE_N: u32 = 200;

fn fail(code: u8, msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn exit_for(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => EXIT_PARSE,
        Error::DegenerateEquation => EXIT_DEGENERATE,
        Error::NotOnCurve | Error::Precondition(_) => EXIT_PARSE,
        _ => EXIT_OTHER,
    }
}

fn coordinate(tw: &Tower, src: &str, name: &str) -> Result<(Tower, Coord), Error> {
    let s = src.trim();
    if s == "inf" || s == "∞" {
        return Ok((tw.clone(), Coord::Infinity));
    }
    if let Some(inner) = s.strip_prefix("root(").and_then(|r| r.strip_suffix(')')) {
        let poly = parse_univariate(inner)?;
        if poly.len() < 2 {
            return Err(Error::Precondition(format!("root({inner}) has no roots")));
        }
        let (t2, a) = tw.adjoin_root(&poly, name)?;
        return Ok((t2, Coord::Finite(a)));
    }
    let f = parse_univariate(s)?;
    if f.len() > 1 {
        return Err(Error::Precondition(format!("coordinate '{s}' is not a number")));
    }
    Ok((tw.clone(), Coord::Finite(f.into_iter().next().unwrap_or_else(Alg::zero))))
}

fn parse_point(src: &str) -> Result<(Tower, CurvePoint), Error> {
    let parts: Vec<&str> = src.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::Precondition("--point expects \"y0,p0\"".into()));
    }
    let (tw, y0) = coordinate(&Tower::rationals(), parts[0], "y0")?;
    let (tw, p0) = coordinate(&tw, parts[1], "p0")?;
    Ok((tw, CurvePoint::new(y0, p0)))
}

fn read_equation(src: &str) -> Result<String, String> {
    if src != "-" {
        return Ok(src.to_string());
    }
    let mut s = String::new();
    std::io::stdin().read_to_string(&mut s).map_err(|e| e.to_string())?;
    Ok(s.trim().to_string())
}

fn run(cmd: Cmd) -> Result<ExitCode, (u8, String)> {
    let (infinity, c) = match cmd {
        Cmd::Solve(c) => (false, c),
        Cmd::SolveInfinity(c) => (true, c),
    };
    let err = |e: Error| (exit_for(&e), e.to_string());
    let text = read_equation(&c.equation).map_err(|e| (EXIT_PARSE, e))?;
    let f: BivPoly = parse_equation(&text).map_err(err)?;
    if f.is_constant() || f.deg_p() == 0 {
        return Err((EXIT_DEGENERATE, "degenerate equation: F must depend on p".into()));
    }
    let (g, _) = prepare(&f).map_err(err)?;
    let default_n = if infinity { truncation_bound_infinity(&g) } else { truncation_bound(&g) };
    let mut n = c.terms.unwrap_or(default_n);
    if let Some(cap) = c.max_denominator_terms {
        if n > cap {
            eprintln!("warning: {n} terms capped at {cap}");
            n = cap;
        }
    }
    if n > LARGE_N {
        eprintln!("warning: computing {n} terms may be slow; pass --terms to choose fewer");
    }
    let opts = SolveOptions { terms: Some(n) };
    let (mode, report): (&str, SolveReport) = match (&c.point, infinity) {
        (Some(_), true) => return Err((EXIT_PARSE, "--point is not available with solve-infinity".into())),
        (Some(pt), false) => {
            let (tw, point) = parse_point(pt).map_err(err)?;
            ("point", puiseux_solve_at(&tw, &f, &point, &opts).map_err(err)?)
        }
        (None, false) => ("finite", puiseux_solve(&f, &opts).map_err(err)?),
        (None, true) => ("infinity", puiseux_solve_infinity(&f, &opts).map_err(err)?),
    };
    let mut residuals = Vec::new();
    let mut violations = Vec::new();
    if c.verify {
        for (i, s) in report.solutions.iter().enumerate() {
            let o = solution_residual(&report.equation, s).map_err(err)?;
            if let Some(o) = &o {
                if !residual_consistent(o) {
                    violations.push(format!("solution {} has residual order {o}", i + 1));
                }
            }
            residuals.push(o.map(|o| o.to_string()));
        }
    }
    if c.json {
        let j = JsonReport {
            equation: report.equation.display_with(&Tower::rationals()),
            mode: mode.to_string(),
            truncation_bound: report.truncation_bound,
            solutions: report
                .solutions
                .iter()
                .enumerate()
                .map(|(i, s)| json_solution(s, c.expand_conjugates, residuals.get(i).cloned().flatten()))
                .collect(),
        };
        println!("{}", serde_json::to_string_pretty(&j).expect("serializable"));
    } else {
        print!("{}", human(&report, mode, c.expand_conjugates, &residuals));
    }
    if !violations.is_empty() {
        return Err((EXIT_VERIFY, format!("verification failed: {}", violations.join("; "))));
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err((code, msg)) => fail(code, &msg),
    }
}
