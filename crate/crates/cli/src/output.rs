//! Human-readable and JSON renderings of a solve report.

use puiseux_core::algnum::{Rational, Tower};
use puiseux_core::oracle::{expand_numeric, NumericTruncation};
use puiseux_core::poly::Coord;
use puiseux_core::series::PuiseuxTruncation;
use puiseux_core::solver::{SolutionTruncation, SolveReport};
use serde::Serialize;

#[derive(Serialize)]
pub struct JsonReport {
    pub equation: String,
    pub mode: String,
    pub truncation_bound: u32,
    pub solutions: Vec<JsonSolution>,
}

#[derive(Serialize)]
pub struct JsonSolution {
    pub center: JsonCenter,
    pub kind: String,
    pub ramification: u32,
    pub free_parameters: Vec<String>,
    pub tower: Vec<String>,
    pub series: JsonSeries,
    /// For the generic family: the curve its center `(y0, p0)` lies on.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjugates: Option<Vec<Vec<JsonNumericTerm>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual_order: Option<String>,
}

#[derive(Serialize)]
pub struct JsonCenter {
    pub y0: String,
    pub p0: String,
}

#[derive(Serialize)]
pub struct JsonSeries {
    pub terms: Vec<JsonTerm>,
    pub known_order: Option<JsonExponent>,
}

#[derive(Serialize)]
pub struct JsonTerm {
    pub exp_num: String,
    pub exp_den: String,
    pub coeff: String,
}

#[derive(Serialize)]
pub struct JsonExponent {
    pub exp_num: String,
    pub exp_den: String,
}

#[derive(Serialize)]
pub struct JsonNumericTerm {
    pub exp_num: String,
    pub exp_den: String,
    pub re: String,
    pub im: String,
}

/// Exponent of `x` for index `j`; negated when the series is in `1/x`.
fn exponent_in_x(s: &PuiseuxTruncation, j: i64, at_infinity: bool) -> Rational {
    let e = s.exponent(j);
    if at_infinity {
        -e
    } else {
        e
    }
}

fn json_exponent(e: &Rational) -> JsonExponent {
    JsonExponent { exp_num: e.numer().to_string(), exp_den: e.denom().to_string() }
}

fn coord(c: &Coord, tw: &Tower) -> String {
    c.display(tw)
}

fn short(v: f64) -> String {
    format!("{v:.15e}")
}

/// Precision, in bits, of the numeric conjugate expansion.
const CONJ_BITS: usize = 192;

/// Every conjugate of a parameter-free solution, numerically.
pub fn conjugates(s: &SolutionTruncation) -> Option<Vec<NumericTruncation>> {
    if s.tower.depth() == 0 || !s.tower.params().is_empty() {
        return None;
    }
    Some(expand_numeric(&s.series, &s.tower, &[], CONJ_BITS))
}

fn json_conjugates(s: &SolutionTruncation, list: &[NumericTruncation]) -> Vec<Vec<JsonNumericTerm>> {
    list.iter()
        .map(|c| {
            c.coeffs
                .iter()
                .enumerate()
                .filter(|(_, v)| v.log2_abs().is_some())
                .map(|(i, v)| {
                    let e = exponent_in_x(&s.series, c.low + i as i64, s.at_infinity);
                    JsonNumericTerm { exp_num: e.numer().to_string(), exp_den: e.denom().to_string(), re: short(v.approx().0), im: short(v.approx().1) }
                })
                .collect()
        })
        .collect()
}

pub fn json_solution(s: &SolutionTruncation, expand: bool, residual: Option<String>) -> JsonSolution {
    let tw = &s.tower;
    let mut terms = Vec::new();
    for (j, c) in s.series.terms() {
        if c.is_literal_zero() {
            continue;
        }
        let e = exponent_in_x(&s.series, j, s.at_infinity);
        terms.push(JsonTerm { exp_num: e.numer().to_string(), exp_den: e.denom().to_string(), coeff: tw.display(c) });
    }
    let known = s.series.known_order_x().map(|e| json_exponent(&if s.at_infinity { -e } else { e }));
    let conjugates = if expand { conjugates(s).map(|l| json_conjugates(s, &l)) } else { None };
    JsonSolution {
        center: JsonCenter { y0: coord(&s.center.y0, tw), p0: coord(&s.center.p0, tw) },
        kind: s.kind.label().to_string(),
        ramification: s.ramification,
        free_parameters: s.free_parameters(),
        tower: s.tower_lines(),
        series: JsonSeries { terms, known_order: known },
        relation: s.relation.as_ref().map(|r| r.display_with(&Tower::rationals()).replace('y', "y0").replace('p', "p0")),
        conjugates,
        residual_order: residual,
    }
}

fn numeric_line(s: &SolutionTruncation, c: &NumericTruncation) -> String {
    let var = "x";
    let parts: Vec<String> = c
        .coeffs
        .iter()
        .enumerate()
        .filter(|(_, v)| v.log2_abs().is_some())
        .map(|(i, v)| {
            let e = exponent_in_x(&s.series, c.low + i as i64, s.at_infinity);
            let (re, im) = v.approx();
            let scale = re.abs().max(im.abs());
            let tiny = |a: f64| a.abs() <= scale * 1e-30;
            let c = match (tiny(re), tiny(im)) {
                (_, true) => format!("{re:.12}"),
                (true, false) => format!("{im:.12}*i"),
                _ => format!("({re:.12} {} {:.12}*i)", if im < 0.0 { '-' } else { '+' }, im.abs()),
            };
            if e == Rational::from_integer(0.into()) {
                c
            } else if e.is_integer() {
                format!("{c}*{var}^{e}")
            } else {
                format!("{c}*{var}^({e})")
            }
        })
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// Plain text: one block per solution, then the examined places.
pub fn human(report: &SolveReport, mode: &str, expand: bool, residuals: &[Option<String>]) -> String {
    let tw0 = Tower::rationals();
    let mut out = String::new();
    out.push_str(&format!("equation: {} = 0\n", report.equation.display_with(&tw0)));
    out.push_str(&format!("mode: {mode}\n"));
    out.push_str(&format!("truncation bound N = {}\n", report.truncation_bound));
    out.push_str(&format!("solutions: {}\n", report.solutions.len()));
    for (i, s) in report.solutions.iter().enumerate() {
        out.push_str(&format!("\n[{}] {} at {}, ramification {}\n", i + 1, s.kind.label(), s.display_center(), s.ramification));
        out.push_str(&format!("    y = {}\n", s.display_series()));
        if let Some(rel) = &s.relation {
            out.push_str(&format!("    where {} = 0 with (y0, p0) regular\n", rel.display_with(&tw0).replace('y', "y0").replace('p', "p0")));
        }
        for l in s.tower_lines() {
            out.push_str(&format!("    {l}\n"));
        }
        let free = s.free_parameters();
        if !free.is_empty() {
            out.push_str(&format!("    free parameters: {}\n", free.join(", ")));
        }
        if let Some(Some(r)) = residuals.get(i) {
            out.push_str(&format!("    residual order: {r}\n"));
        }
        if expand {
            if let Some(list) = conjugates(s) {
                for (k, c) in list.iter().enumerate() {
                    out.push_str(&format!("    conjugate {}: {}\n", k + 1, numeric_line(s, c)));
                }
            }
        }
    }
    if !report.notes.is_empty() {
        out.push_str("\nplaces examined:\n");
        for n in &report.notes {
            out.push_str(&format!("  {}\n", n.summary()));
        }
    }
    out
}
