//! Constraint generators: the (Sum) rule, sign conditions from
//! Deligne-Lusztig characters, reductions, and the battery shipped with a table.

use dmw_chardata::{BlockTable, ConstraintKind as SpecKind};
use dmw_decomp::{brauer_expansion, pim_coordinates, DecompError, ProjectiveVector, VirtualVector};
use dmw_paramexpr::ParamExpr;

use crate::{Constraint, ConstraintKind};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SumRuleError {
    #[error("vectors have different lengths")]
    Length,
    #[error("the two differences disagree at row {row}: `{left}` against `{right}`")]
    Mismatch { row: usize, left: String, right: String },
}

/// From projective characters `χ1+χ2`, `χ1+χ3`, `χ2` and `χ3`, the
/// character `χ1`, after checking that both differences agree.
pub fn sum_rule(
    p12: &ProjectiveVector,
    p13: &ProjectiveVector,
    p2: &ProjectiveVector,
    p3: &ProjectiveVector,
) -> Result<ProjectiveVector, SumRuleError> {
    let n = p12.len();
    if [p13.len(), p2.len(), p3.len()].iter().any(|&l| l != n) {
        return Err(SumRuleError::Length);
    }
    let left = p12 - p2;
    let right = p13 - p3;
    if let Some(i) = (0..n).find(|&i| left.entries[i] != right.entries[i]) {
        return Err(SumRuleError::Mismatch {
            row: i + 1,
            left: left.entries[i].to_string(),
            right: right.entries[i].to_string(),
        });
    }
    Ok(left)
}

fn ints(v: &[i64]) -> Vec<ParamExpr> {
    v.iter().map(|&x| ParamExpr::constant(x)).collect()
}

fn keep(e: ParamExpr) -> Option<ParamExpr> {
    match e.as_constant() {
        Some(c) if c >= 0 => None,
        _ => Some(e),
    }
}

/// For each column `j` (1-based) outside `exempt`, the condition that
/// `sign · m_j ≥ 0` where `m` are the PIM coordinates of `v`. Conditions
/// that hold identically are dropped.
pub fn dl_constraints(t: &BlockTable, v: &VirtualVector, exempt: &[usize]) -> Result<Vec<Constraint>, DecompError> {
    let m = pim_coordinates(t, &ints(&v.entries))?;
    Ok(m.into_iter()
        .enumerate()
        .filter(|(j, _)| !exempt.contains(&(j + 1)))
        .filter_map(|(j, e)| keep(e.scale(v.sign)).map(|e| (j, e)))
        .map(|(j, e)| Constraint::nonneg(e, format!("{}, column {}", v.source, j + 1)))
        .collect())
}

/// The condition that every Brauer character occurs in `sign · v` with
/// non-negative multiplicity.
pub fn brauer_constraints(t: &BlockTable, v: &VirtualVector) -> Result<Vec<Constraint>, DecompError> {
    let m = brauer_expansion(t, &ints(&v.entries))?;
    Ok(m.into_iter()
        .enumerate()
        .filter_map(|(j, e)| keep(e.scale(v.sign)).map(|e| (j, e)))
        .map(|(j, e)| Constraint::nonneg(e, format!("{}, Brauer character {}", v.source, j + 1)))
        .collect())
}

/// Everything the table asserts about its unknowns: their domains,
/// non-negativity of every symbolic entry, and the dataset's constraints.
pub fn table_constraints(t: &BlockTable) -> Result<Vec<Constraint>, DecompError> {
    let mut out: Vec<Constraint> = t.params.iter().map(|(u, d)| Constraint::domain(u, d.min, d.max)).collect();
    for (j, c) in t.columns.iter().enumerate() {
        for (i, e) in c.entries.iter().enumerate() {
            if !e.is_constant() {
                out.push(Constraint::nonneg(
                    e.clone(),
                    format!("decomposition number at row {}, column {}", i + 1, j + 1),
                ));
            }
        }
    }
    for spec in &t.constraints {
        let mut generated = match &spec.kind {
            SpecKind::Nonneg(es) => es.iter().map(|e| Constraint::nonneg(e.clone(), &spec.source)).collect(),
            SpecKind::EqualZero(es) => es.iter().map(|e| Constraint::eq_zero(e.clone(), &spec.source)).collect(),
            SpecKind::AtLeast(e, k) => vec![Constraint::at_least(e.clone(), *k, &spec.source)],
            SpecKind::SignOfPimCoords { virtual_char, exempt } => {
                dl_constraints(t, &t.virtual_chars[virtual_char], exempt)?
            }
            SpecKind::BrauerNonneg { virtual_char } => brauer_constraints(t, &t.virtual_chars[virtual_char])?,
            SpecKind::DegreePositivity { q_samples } => vec![Constraint::new(
                ConstraintKind::DegreePositivity { q_samples: q_samples.clone() },
                &spec.source,
            )],
        };
        for c in &mut generated {
            c.axiom = spec.axiom;
        }
        out.extend(generated);
    }
    Ok(out)
}
