//! Integer-coefficient polynomial expressions in named small unknowns,
//! with a parser for the textual expression grammar used by datasets.

mod compiled;
mod expr;
mod parse;

use std::collections::BTreeMap;

pub use compiled::CompiledExpr;
pub use expr::{compare_names, Monomial, ParamExpr};
pub use parse::parse_expr;

/// Values bound to unknowns.
pub type Assignment = BTreeMap<String, i64>;

/// Inclusive range of admissible values for an unknown.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Domain {
    pub min: i64,
    pub max: i64,
}

impl Domain {
    /// Range used for an unknown that a dataset does not bound more tightly.
    pub const DEFAULT: Domain = Domain { min: 0, max: 64 };

    pub fn new(min: i64, max: i64) -> Self {
        Self { min, max }
    }

    pub fn contains(&self, v: i64) -> bool {
        (self.min..=self.max).contains(&v)
    }

    pub fn len(&self) -> u64 {
        if self.max < self.min {
            0
        } else {
            (self.max - self.min) as u64 + 1
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl Default for Domain {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// Errors raised while parsing or evaluating expressions.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExprError {
    #[error("expression syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown `{0}` has no value")]
    Unbound(String),
}

impl std::str::FromStr for ParamExpr {
    type Err = ExprError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_expr(s)
    }
}
