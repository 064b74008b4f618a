use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::algnum::{TermRepr, Tower};

use super::PuiseuxTruncation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp_num: i64,
    pub exp_den: u32,
    pub coeff: Vec<TermRepr>,
    /// Human-readable form of `coeff`.
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub terms: Vec<TermJson>,
    /// Exponent `num/den` of the error term, `None` for exact series.
    pub known_order: Option<(i64, u32)>,
}

fn lowest(j: i64, n: u32) -> (i64, u32) {
    let g = j.gcd(&(n as i64)).max(1);
    (j / g, (n as i64 / g) as u32)
}

fn power(var: &str, (num, den): (i64, u32)) -> String {
    match (num, den) {
        (0, _) => String::new(),
        (1, 1) => var.to_string(),
        (k, 1) => format!("{var}^{k}"),
        (k, d) => format!("{var}^({k}/{d})"),
    }
}

impl PuiseuxTruncation {
    pub fn to_json(&self, tw: &Tower) -> SeriesJson {
        let terms = self
            .terms()
            .map(|(j, c)| {
                let c = tw.reduce(c);
                let (exp_num, exp_den) = lowest(j, self.n);
                TermJson { exp_num, exp_den, text: tw.display(&c), coeff: c.to_repr() }
            })
            .filter(|t| !t.coeff.is_empty())
            .collect();
        SeriesJson { terms, known_order: self.known.map(|k| lowest(k, self.n)) }
    }

    /// `c1*x^e1 + c2*x^e2 + ... + O(x^T)` in the variable `var`.
    pub fn display(&self, tw: &Tower, var: &str) -> String {
        self.render(tw, &|e| power(var, e))
    }

    /// The series read in `1/var`: `c1/x^e1 + ... + O(1/x^T)`.
    pub fn display_reciprocal(&self, tw: &Tower, var: &str) -> String {
        self.render(tw, &|(num, den)| match num {
            0 => String::new(),
            _ if num < 0 => power(var, (-num, den)),
            _ => format!("1/{}", power(var, (num, den))),
        })
    }

    fn render(&self, tw: &Tower, power: &dyn Fn((i64, u32)) -> String) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (j, c) in self.terms() {
            let c = tw.reduce(c);
            if c.is_literal_zero() {
                continue;
            }
            let cs = tw.display(&c);
            let v = power(lowest(j, self.n));
            let term = if v.is_empty() {
                if c.num_terms() > 1 { format!("({cs})") } else { cs }
            } else if cs == "1" {
                v
            } else if cs == "-1" {
                format!("-{v}")
            } else {
                let cs = if c.num_terms() > 1 { format!("({cs})") } else { cs };
                match v.strip_prefix("1/") {
                    Some(den) => format!("{cs}/{den}"),
                    None => format!("{cs}*{v}"),
                }
            };
            parts.push(term);
        }
        if let Some(k) = self.known {
            let e = power(lowest(k, self.n));
            parts.push(format!("O({})", if e.is_empty() { "1".to_string() } else { e }));
        }
        if parts.is_empty() {
            return "0".into();
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}
