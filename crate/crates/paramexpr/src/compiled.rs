//! Index-based form of an expression for tight enumeration loops.

use std::collections::HashMap;

use crate::{ExprError, ParamExpr};

/// An expression whose unknowns are replaced by positions in a value slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompiledExpr {
    terms: Vec<(i64, Vec<usize>)>,
}

impl CompiledExpr {
    /// Compiles against a name-to-position map; every unknown must be present.
    pub fn new(e: &ParamExpr, index: &HashMap<String, usize>) -> Result<Self, ExprError> {
        let mut terms = Vec::new();
        for (m, c) in e.terms() {
            let vars = m
                .names()
                .iter()
                .map(|n| index.get(n).copied().ok_or_else(|| ExprError::Unbound(n.clone())))
                .collect::<Result<Vec<_>, _>>()?;
            terms.push((c, vars));
        }
        Ok(Self { terms })
    }

    /// Terms as a coefficient and the positions multiplied into it.
    pub fn terms(&self) -> &[(i64, Vec<usize>)] {
        &self.terms
    }

    /// Positions read by the expression.
    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.terms.iter().flat_map(|(_, v)| v.iter().copied())
    }

    /// Value at a full point.
    pub fn eval(&self, values: &[i64]) -> i64 {
        self.terms
            .iter()
            .map(|(c, vars)| vars.iter().fold(*c, |acc, &i| acc * values[i]))
            .sum()
    }

    /// Inclusive range of values over the box `lo[i] ..= hi[i]`, by interval arithmetic.
    pub fn bounds(&self, lo: &[i64], hi: &[i64]) -> (i64, i64) {
        let mut total = (0i64, 0i64);
        for (c, vars) in &self.terms {
            let mut t = (*c, *c);
            for &i in vars {
                let cands = [t.0 * lo[i], t.0 * hi[i], t.1 * lo[i], t.1 * hi[i]];
                t = (*cands.iter().min().expect("four values"), *cands.iter().max().expect("four values"));
            }
            total = (total.0 + t.0, total.1 + t.1);
        }
        total
    }

    /// For a linear expression, its coefficient list by position and its constant.
    pub fn linear(&self) -> Option<(Vec<(usize, i64)>, i64)> {
        let mut coeffs = Vec::new();
        let mut constant = 0;
        for (c, vars) in &self.terms {
            match vars.as_slice() {
                [] => constant += c,
                [i] => coeffs.push((*i, *c)),
                _ => return None,
            }
        }
        Some((coeffs, constant))
    }
}
