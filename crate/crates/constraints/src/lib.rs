//! Rules producing projective characters and constraints on unknown
//! decomposition numbers, and an exact solver over bounded integer domains.

mod hcr;
mod rules;
mod solve;

use std::fmt;

use dmw_paramexpr::ParamExpr;

pub use hcr::{hcr_indecomposable, load_levis, HcrError, LeviData, DEFAULT_HCR_CAP};
pub use rules::{brauer_constraints, dl_constraints, sum_rule, table_constraints, SumRuleError};
pub use solve::{solve, solve_table, Equality, SolveError, SolveOptions, SolveResult, Survivors, ValueSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstraintKind {
    /// `e ≥ 0`.
    Nonneg(ParamExpr),
    /// `e = 0`.
    EqZero(ParamExpr),
    /// `e ≥ k`.
    AtLeast(ParamExpr, i64),
    /// `min ≤ unknown ≤ max`.
    Domain { unknown: String, min: i64, max: i64 },
    /// Every Brauer character of the table has positive degree at each
    /// sample value of `q`. Evaluated pointwise on the table's entry unknowns.
    DegreePositivity { q_samples: Vec<i64> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub kind: ConstraintKind,
    pub source: String,
    /// Imported from an argument outside the engine.
    pub axiom: bool,
}

impl Constraint {
    pub fn new(kind: ConstraintKind, source: impl Into<String>) -> Self {
        Self { kind, source: source.into(), axiom: false }
    }

    pub fn nonneg(e: ParamExpr, source: impl Into<String>) -> Self {
        Self::new(ConstraintKind::Nonneg(e), source)
    }

    pub fn eq_zero(e: ParamExpr, source: impl Into<String>) -> Self {
        Self::new(ConstraintKind::EqZero(e), source)
    }

    pub fn at_least(e: ParamExpr, k: i64, source: impl Into<String>) -> Self {
        Self::new(ConstraintKind::AtLeast(e, k), source)
    }

    pub fn domain(unknown: &str, min: i64, max: i64) -> Self {
        Self::new(
            ConstraintKind::Domain { unknown: unknown.to_string(), min, max },
            format!("domain of {unknown}"),
        )
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ConstraintKind::Nonneg(e) => write!(f, "nonneg({e})")?,
            ConstraintKind::EqZero(e) => write!(f, "eq_zero({e})")?,
            ConstraintKind::AtLeast(e, k) => write!(f, "at_least({e}, {k})")?,
            ConstraintKind::Domain { unknown, min, max } => write!(f, "domain({unknown}, {min}, {max})")?,
            ConstraintKind::DegreePositivity { q_samples } => {
                let q: Vec<String> = q_samples.iter().map(i64::to_string).collect();
                write!(f, "degree_positivity(q={})", q.join(","))?
            }
        }
        if !self.source.is_empty() {
            write!(f, " [{}]", self.source)?;
        }
        Ok(())
    }
}
