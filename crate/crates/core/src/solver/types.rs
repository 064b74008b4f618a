use crate::algnum::{Rational, Tower};
use crate::poly::{BivPoly, CurvePoint};
use crate::series::PuiseuxTruncation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolutionKind {
    Constant,
    /// `y0 + p0 x` for every regular point `(y0, p0)` of `relation`.
    GenericNonCritical,
    Determined,
    /// Names of the free parameters.
    Family(Vec<String>),
}

impl SolutionKind {
    pub fn label(&self) -> &'static str {
        match self {
            SolutionKind::Constant => "constant",
            SolutionKind::GenericNonCritical => "generic",
            SolutionKind::Determined => "determined",
            SolutionKind::Family(_) => "family",
        }
    }

    pub(crate) fn rank(&self) -> u8 {
        match self {
            SolutionKind::GenericNonCritical => 0,
            SolutionKind::Constant => 1,
            SolutionKind::Determined => 2,
            SolutionKind::Family(_) => 3,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolutionTruncation {
    pub center: CurvePoint,
    pub kind: SolutionKind,
    pub ramification: u32,
    /// In `x`, or in `1/x` when `at_infinity` is set.
    pub series: PuiseuxTruncation,
    pub tower: Tower,
    /// Coefficients of `x^(j/n)`, `j <= guaranteed_terms`, are final.
    pub guaranteed_terms: u32,
    pub at_infinity: bool,
    /// The curve the center ranges over, for generic solutions.
    pub relation: Option<BivPoly>,
}

impl SolutionTruncation {
    pub fn display_series(&self) -> String {
        if self.at_infinity {
            self.series.display_reciprocal(&self.tower, "x")
        } else {
            self.series.display(&self.tower, "x")
        }
    }

    /// `(y0, p0)` with `y0` and `p0` shown through the tower.
    pub fn display_center(&self) -> String {
        self.center.display(&self.tower)
    }

    pub fn free_parameters(&self) -> Vec<String> {
        match &self.kind {
            SolutionKind::Family(p) => p.clone(),
            _ => vec![],
        }
    }

    /// Tower levels rendered as `name: defpoly`.
    pub fn tower_lines(&self) -> Vec<String> {
        let names = self.tower.gen_names();
        (0..self.tower.depth()).map(|l| format!("{}: {} = 0", names[l], self.tower.display_defpoly(l))).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlaceVerdict {
    /// `(k - r)/(1 - h)` is not a positive integer.
    RejectedOrder,
    /// The order test passed but the associated equation has no solution.
    RejectedSolvability,
    Accepted { outputs: usize },
}

/// Diagnostic record for one examined place.
#[derive(Clone, Debug)]
pub struct PlaceNote {
    pub center: String,
    pub place: String,
    pub k: u32,
    pub r: i64,
    pub n: Option<Rational>,
    pub verdict: PlaceVerdict,
}

impl PlaceNote {
    pub fn summary(&self) -> String {
        let n = self.n.as_ref().map_or("undefined".to_string(), |n| n.to_string());
        let v = match &self.verdict {
            PlaceVerdict::RejectedOrder => "rejected by the order test".to_string(),
            PlaceVerdict::RejectedSolvability => "passes the order test, rejected at solvability".to_string(),
            PlaceVerdict::Accepted { outputs } => format!("solution place, {outputs} truncation(s)"),
        };
        format!("center {} place {} k={} r={} n={}: {}", self.center, self.place, self.k, self.r, n, v)
    }
}

#[derive(Clone, Debug)]
pub struct SolveReport {
    /// The squarefree, content-free equation actually solved.
    pub equation: BivPoly,
    pub truncation_bound: u32,
    pub solutions: Vec<SolutionTruncation>,
    pub notes: Vec<PlaceNote>,
}
