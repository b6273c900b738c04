//! Forward substitution, exact solving and evaluation on decomposition tables.

use dmw_chardata::BlockTable;
use dmw_paramexpr::{Assignment, ExprError, ParamExpr};
use dmw_qpoly::{BigRational, DensePoly};
use num::{Signed, Zero};

use crate::DecompError;

const ENUMERATION_CAP: u128 = 1 << 24;

fn unbound(e: ExprError) -> DecompError {
    match e {
        ExprError::Unbound(u) => DecompError::Unbound(u),
        other => DecompError::Unbound(other.to_string()),
    }
}

/// The table with `s` substituted into every entry; unbound unknowns stay symbolic.
pub fn specialize(t: &BlockTable, s: &Assignment) -> BlockTable {
    let mut out = t.clone();
    for c in &mut out.columns {
        for e in &mut c.entries {
            *e = e.substitute(s);
        }
    }
    out
}

/// First entry violating unitriangularity, scanning columns left to right:
/// a diagonal entry other than the constant 1, or a nonzero entry above it.
/// Rows and columns are 0-based.
pub fn check_unitriangular(t: &BlockTable) -> Option<(usize, usize, ParamExpr)> {
    for j in 0..t.len() {
        for i in 0..=j {
            let e = t.entry(i, j);
            let ok = if i == j { e.as_constant() == Some(1) } else { e.is_zero() };
            if !ok {
                return Some((i, j, e.clone()));
            }
        }
    }
    None
}

/// Row-major integer matrix of the table under `s`.
pub fn integer_matrix(t: &BlockTable, s: &Assignment) -> Result<Vec<Vec<i64>>, DecompError> {
    let n = t.len();
    (0..n).map(|i| (0..n).map(|j| t.entry(i, j).eval(s).map_err(unbound)).collect()).collect()
}

fn require_unitriangular(m: &[Vec<i64>]) -> Result<(), DecompError> {
    for (i, row) in m.iter().enumerate() {
        for (j, &v) in row.iter().enumerate().skip(i) {
            let expected = i64::from(i == j);
            if v != expected {
                return Err(DecompError::NotUnitriangular { row: i + 1, col: j + 1, value: v.to_string() });
            }
        }
    }
    Ok(())
}

fn degrees(t: &BlockTable) -> Result<Vec<&dmw_qpoly::CycloPoly>, DecompError> {
    t.rows
        .iter()
        .enumerate()
        .map(|(i, r)| r.degree.as_ref().ok_or_else(|| DecompError::MissingDegree { row: i + 1, name: r.name.clone() }))
        .collect()
}

fn is_unitriangular(m: &[Vec<i64>]) -> bool {
    require_unitriangular(m).is_ok()
}

/// Exact inverse over the rationals by Gauss-Jordan elimination.
fn rational_inverse(m: &[Vec<i64>]) -> Result<Vec<Vec<BigRational>>, DecompError> {
    let n = m.len();
    let r = |v: i64| BigRational::from_integer(v.into());
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| row.iter().map(|&v| r(v)).chain((0..n).map(|j| r(i64::from(i == j)))).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&i| !a[i][col].is_zero()).ok_or(DecompError::Singular)?;
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        for v in &mut a[col] {
            *v *= &inv;
        }
        let pivot_row = a[col].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * p;
                }
            }
        }
    }
    Ok(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Generic degrees `x` of the Brauer characters, solving `D x = deg` with
/// the matrix specialised at `s`: forward substitution when the
/// specialisation is unitriangular, exact elimination otherwise.
pub fn brauer_degrees(t: &BlockTable, s: &Assignment) -> Result<Vec<DensePoly>, DecompError> {
    let m = integer_matrix(t, s)?;
    let degs: Vec<DensePoly> = degrees(t)?.into_iter().map(|d| d.expand()).collect();
    if !is_unitriangular(&m) {
        let inv = rational_inverse(&m)?;
        return Ok(inv
            .iter()
            .map(|row| {
                row.iter().zip(&degs).filter(|(c, _)| !c.is_zero()).fold(DensePoly::zero(), |acc, (c, d)| &acc + &d.scale(c))
            })
            .collect());
    }
    let mut x: Vec<DensePoly> = Vec::with_capacity(m.len());
    for (i, row) in m.iter().enumerate() {
        let mut v = degs[i].clone();
        for (j, &c) in row.iter().enumerate().take(i) {
            if c != 0 {
                v = &v - &x[j].scale(&BigRational::from_integer(c.into()));
            }
        }
        x.push(v);
    }
    Ok(x)
}

/// Ordinary degrees evaluated at fixed sample values of `q`, for repeated
/// positivity tests of Brauer degrees under many assignments.
#[derive(Clone, Debug)]
pub struct DegreeSamples {
    pub q_samples: Vec<i64>,
    values: Vec<Vec<BigRational>>,
}

impl DegreeSamples {
    pub fn new(t: &BlockTable, q_samples: &[i64]) -> Result<Self, DecompError> {
        let degs = degrees(t)?;
        let values = q_samples.iter().map(|&q| degs.iter().map(|d| d.eval_int(q)).collect()).collect();
        Ok(Self { q_samples: q_samples.to_vec(), values })
    }

    /// Brauer degrees at each sample, indexed `[sample][column]`.
    pub fn brauer_values(&self, m: &[Vec<i64>]) -> Result<Vec<Vec<BigRational>>, DecompError> {
        if !is_unitriangular(m) {
            let inv = rational_inverse(m)?;
            return Ok(self
                .values
                .iter()
                .map(|deg| inv.iter().map(|row| row.iter().zip(deg).map(|(c, d)| c * d).sum()).collect())
                .collect());
        }
        Ok(self
            .values
            .iter()
            .map(|deg| {
                let mut x: Vec<BigRational> = Vec::with_capacity(m.len());
                for (i, row) in m.iter().enumerate() {
                    let mut v = deg[i].clone();
                    for (j, &c) in row.iter().enumerate().take(i) {
                        if c != 0 {
                            v -= &x[j] * BigRational::from_integer(c.into());
                        }
                    }
                    x.push(v);
                }
                x
            })
            .collect())
    }

    /// First `(q, column, value)` with a non-positive Brauer degree, columns 0-based.
    pub fn first_nonpositive(&self, m: &[Vec<i64>]) -> Result<Option<(i64, usize, BigRational)>, DecompError> {
        let all = self.brauer_values(m)?;
        for (k, xs) in all.into_iter().enumerate() {
            if let Some((j, v)) = xs.into_iter().enumerate().find(|(_, v)| !v.is_positive()) {
                return Ok(Some((self.q_samples[k], j, v)));
            }
        }
        Ok(None)
    }
}

/// All assignments of the entry unknowns, within their declared domains,
/// under which every Brauer degree is positive at every sample.
pub fn positivity_domain(t: &BlockTable, q_samples: &[i64]) -> Result<Vec<Assignment>, DecompError> {
    let names = t.entry_unknowns();
    let doms: Vec<_> = names.iter().map(|u| t.params[u]).collect();
    let size = doms.iter().map(|d| u128::from(d.len())).product::<u128>();
    if size > ENUMERATION_CAP {
        return Err(DecompError::TooLarge(size));
    }
    let samples = DegreeSamples::new(t, q_samples)?;
    let mut out = Vec::new();
    let mut point: Vec<i64> = doms.iter().map(|d| d.min).collect();
    if doms.iter().any(|d| d.is_empty()) {
        return Ok(out);
    }
    loop {
        let s: Assignment = names.iter().cloned().zip(point.iter().copied()).collect();
        let m = integer_matrix(t, &s)?;
        if let Ok(None) = samples.first_nonpositive(&m) {
            out.push(s);
        }
        // Odometer step over the domain product.
        let mut k = point.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            if point[k] < doms[k].max {
                point[k] += 1;
                break;
            }
            point[k] = doms[k].min;
        }
    }
}

/// The unique `m` with `D m = v`, by forward substitution over expressions.
pub fn pim_coordinates(t: &BlockTable, v: &[ParamExpr]) -> Result<Vec<ParamExpr>, DecompError> {
    let n = t.len();
    if v.len() != n {
        return Err(DecompError::Length { expected: n, found: v.len() });
    }
    if let Some((i, j, e)) = check_unitriangular(t) {
        return Err(DecompError::NotUnitriangular { row: i + 1, col: j + 1, value: e.to_string() });
    }
    let mut m: Vec<ParamExpr> = Vec::with_capacity(n);
    for i in 0..n {
        let mut acc = v[i].clone();
        for (j, mj) in m.iter().enumerate() {
            let d = t.entry(i, j);
            if !d.is_zero() && !mj.is_zero() {
                acc = &acc - &(d * mj);
            }
        }
        m.push(acc);
    }
    Ok(m)
}

/// `Dᵀ v`: the multiplicity of each Brauer character in the virtual
/// character with unipotent part `v`.
pub fn brauer_expansion(t: &BlockTable, v: &[ParamExpr]) -> Result<Vec<ParamExpr>, DecompError> {
    let n = t.len();
    if v.len() != n {
        return Err(DecompError::Length { expected: n, found: v.len() });
    }
    Ok((0..n)
        .map(|j| {
            let mut acc = ParamExpr::zero();
            for (i, vi) in v.iter().enumerate() {
                let d = t.entry(i, j);
                if !d.is_zero() && !vi.is_zero() {
                    acc = &acc + &(d * vi);
                }
            }
            acc
        })
        .collect())
}
