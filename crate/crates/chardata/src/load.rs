//! Parsing and validation of dataset files.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use dmw_paramexpr::{parse_expr, Domain, ParamExpr};
use dmw_qpoly::CycloPoly;
use num::Signed;

use crate::schema::{RawConstraint, RawConstraintKind, RawDataset, RawEntry, RawVirtual};
use crate::{
    BlockTable, Column, ConstraintKind, ConstraintSpec, DegreeSource, GroupInfo, LeviSpec, LoadError,
    UnipotentCharacter, VirtualChar,
};

/// Sample values of `q` at which every degree must be a positive integer.
const DEGREE_SAMPLES: [i64; 3] = [2, 3, 5];

/// Parses and validates dataset text. `name` labels the table in reports.
pub fn load_table(text: &str, name: &str) -> Result<BlockTable, LoadError> {
    let raw: RawDataset = serde_json::from_str(text).map_err(|e| LoadError::Schema {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    build(raw, name, None)
}

/// Reads and validates a dataset file; the table is named by the file stem.
pub fn load_table_file(path: &Path) -> Result<BlockTable, LoadError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| LoadError::Io { path: path.display().to_string(), message: e.to_string() })?;
    let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or("dataset");
    load_table(&text, name)
}

pub(crate) fn apply_scenario(base: &RawDataset, name: &str, scenario: &str) -> Result<BlockTable, LoadError> {
    let s = base
        .scenarios
        .get(scenario)
        .ok_or_else(|| LoadError::Invalid(format!("no scenario `{scenario}` in `{name}`")))?
        .clone();
    let mut raw = base.clone();
    let n = raw.characters.len();
    let row_of = |raw: &RawDataset, row: &str| {
        raw.characters
            .iter()
            .position(|c| c.name == row)
            .ok_or_else(|| LoadError::Invalid(format!("scenario `{scenario}`: no row `{row}`")))
    };
    let ncols = raw.columns.len();
    let check_col = |col: usize| {
        if col == 0 || col > ncols {
            Err(LoadError::Invalid(format!("scenario `{scenario}`: column {col} out of range")))
        } else {
            Ok(col - 1)
        }
    };
    for c in &s.columns {
        let j = check_col(c.col)?;
        let mut entries = vec![RawEntry::Int(0); n];
        for (row, e) in &c.entries {
            entries[row_of(&raw, row)?] = e.clone();
        }
        raw.columns[j].entries = entries;
    }
    for c in &s.entries {
        let j = check_col(c.col)?;
        let i = row_of(&raw, &c.row)?;
        if let Some(slot) = raw.columns[j].entries.get_mut(i) {
            *slot = c.expr.clone();
        }
    }
    raw.params.extend(s.params.clone());
    raw.constraints.extend(s.constraints.clone());
    raw.virtual_chars.extend(s.virtual_chars.clone());
    if let Some(w) = &s.witness {
        raw.witness.get_or_insert_with(BTreeMap::new).extend(w.clone());
    }
    build(raw, name, Some(scenario.to_string()))
}

fn parse_poly(text: &str) -> Result<CycloPoly, String> {
    text.parse::<CycloPoly>().map_err(|e| e.to_string())
}

fn build(raw: RawDataset, name: &str, scenario: Option<String>) -> Result<BlockTable, LoadError> {
    let invalid = |m: String| LoadError::Invalid(m);
    let group = GroupInfo::parse(&raw.group).ok_or_else(|| invalid(format!("unknown group `{}`", raw.group)))?;
    let declared_order = parse_poly(&raw.order).map_err(|m| invalid(format!("order: {m}")))?;
    if declared_order != group.order {
        return Err(invalid(format!(
            "declared order `{declared_order}` differs from the order `{}` of {}",
            group.order, group.name
        )));
    }
    if group.order.valuation_q().ok() != Some(group.positive_roots)
        || group.order.phi_valuation(4).ok() != Some(group.sylow_phi4_rank)
    {
        return Err(invalid(format!("order of {} is inconsistent with its root data", group.name)));
    }
    let degree_divisor = match &raw.degree_divisor {
        Some(t) => Some(parse_poly(t).map_err(|m| invalid(format!("degree_divisor: {m}")))?),
        None => None,
    };

    let n = raw.characters.len();
    let mut rows = Vec::with_capacity(n);
    for (i, c) in raw.characters.iter().enumerate() {
        let row_err = |message: String| LoadError::Row { row: i + 1, name: c.name.clone(), message };
        let computed = match group.classical() {
            Some(g) => Some(
                g.parse_label(&c.name)
                    .and_then(|l| l.generic_degree())
                    .map_err(|e| row_err(e.to_string()))?,
            ),
            None => None,
        };
        let (degree, degree_source) = match &c.degree {
            Some(t) => {
                let mut d = parse_poly(t).map_err(|m| row_err(format!("degree: {m}")))?;
                if let Some(div) = &degree_divisor {
                    d = &d * div;
                }
                (Some(d), DegreeSource::Dataset)
            }
            None => match computed {
                Some(d) => (Some(d), DegreeSource::Computed),
                None => (None, DegreeSource::Missing),
            },
        };
        if let Some(d) = &degree {
            if d.is_zero() {
                return Err(row_err("degree is zero".into()));
            }
            for q0 in DEGREE_SAMPLES {
                let v = d.eval_int(q0);
                if !v.is_positive() || !v.is_integer() {
                    return Err(row_err(format!("degree {d} at q={q0} is {v}, not a positive integer")));
                }
            }
        }
        let a_value = degree.as_ref().map(|d| d.valuation_q().expect("nonzero degree"));
        if let (Some(a), Some(declared)) = (a_value, c.a) {
            if a != declared {
                return Err(row_err(format!("declared a-value {declared} but degree has valuation {a}")));
            }
        }
        rows.push(UnipotentCharacter {
            name: c.name.clone(),
            degree,
            degree_source,
            a_value: a_value.or(c.a),
            family: c.family.clone(),
            hc_series: c.series.clone(),
            block: raw.block.clone(),
        });
    }
    let mut seen = BTreeSet::new();
    for (i, r) in rows.iter().enumerate() {
        if !seen.insert(r.name.as_str()) {
            return Err(LoadError::Row { row: i + 1, name: r.name.clone(), message: "duplicate row label".into() });
        }
    }

    if raw.columns.len() != n {
        return Err(invalid(format!("table is not square: {n} rows but {} columns", raw.columns.len())));
    }
    let mut columns = Vec::with_capacity(n);
    for (j, c) in raw.columns.iter().enumerate() {
        if c.entries.len() != n {
            return Err(LoadError::Column {
                col: j + 1,
                message: format!("has {} entries, expected {n}", c.entries.len()),
            });
        }
        let mut entries = Vec::with_capacity(n);
        for (i, e) in c.entries.iter().enumerate() {
            let value = match e {
                RawEntry::Int(v) => ParamExpr::constant(*v),
                RawEntry::Expr(s) => parse_expr(s)
                    .map_err(|err| LoadError::Entry { row: i + 1, col: j + 1, message: err.to_string() })?,
            };
            entries.push(value);
        }
        columns.push(Column { series: c.series.clone(), census: c.census.clone(), entries });
    }
    for j in 0..n {
        let diag = &columns[j].entries[j];
        if *diag != ParamExpr::constant(1) {
            return Err(LoadError::Entry { row: j + 1, col: j + 1, message: format!("diagonal not 1 (found `{diag}`)") });
        }
        for i in 0..j {
            let e = &columns[j].entries[i];
            if !e.is_zero() && e.is_constant() {
                return Err(LoadError::Entry {
                    row: i + 1,
                    col: j + 1,
                    message: format!("nonzero entry `{e}` above the diagonal"),
                });
            }
        }
    }

    let mut params = BTreeMap::new();
    for (k, d) in &raw.params {
        if d.min > d.max {
            return Err(invalid(format!("unknown `{k}` has empty domain {}..{}", d.min, d.max)));
        }
        params.insert(k.clone(), Domain::new(d.min, d.max));
    }

    let mut virtual_chars = BTreeMap::new();
    for (k, v) in &raw.virtual_chars {
        virtual_chars.insert(k.clone(), build_virtual(k, v, &rows)?);
    }
    let constraints = raw
        .constraints
        .iter()
        .enumerate()
        .map(|(k, c)| build_constraint(k + 1, c, n, &virtual_chars))
        .collect::<Result<Vec<_>, _>>()?;

    let levis = raw
        .levis
        .iter()
        .map(|l| LeviSpec {
            name: l.name.clone(),
            group: l.group.clone(),
            blocks: l.blocks.clone(),
            defect_zero: l.defect_zero.clone(),
            relabel: l.relabel.clone(),
        })
        .collect();

    if let Some(s) = &raw.default_scenario {
        if !raw.scenarios.contains_key(s) {
            return Err(invalid(format!("default scenario `{s}` is not defined")));
        }
    }

    let mut table = BlockTable {
        name: name.to_string(),
        group,
        block: raw.block.clone(),
        ell_condition: raw.ell_condition.clone(),
        declared_defect: raw.defect,
        degree_divisor,
        rows,
        columns,
        params,
        constraints,
        virtual_chars,
        levis,
        witness: raw.witness.clone(),
        default_scenario: raw.default_scenario.clone(),
        scenario,
        raw,
    };
    for u in table.all_unknowns() {
        if !table.params.contains_key(&u) {
            return Err(invalid(format!("unknown `{u}` has no declared domain")));
        }
    }
    if let Some(w) = &table.witness {
        for (k, v) in w {
            match table.params.get(k) {
                Some(d) if d.contains(*v) => {}
                Some(d) => return Err(invalid(format!("witness {k}={v} lies outside {}..{}", d.min, d.max))),
                None => return Err(invalid(format!("witness binds undeclared unknown `{k}`"))),
            }
        }
        let missing: Vec<String> = table.entry_unknowns().into_iter().filter(|u| !w.contains_key(u)).collect();
        if !missing.is_empty() {
            table.witness = None;
        }
    }
    Ok(table)
}

fn build_virtual(name: &str, v: &RawVirtual, rows: &[UnipotentCharacter]) -> Result<VirtualChar, LoadError> {
    let n = rows.len();
    let entries = match (&v.entries, &v.terms) {
        (Some(e), None) => {
            if e.len() != n {
                return Err(LoadError::Invalid(format!(
                    "virtual character `{name}` has {} entries, expected {n}",
                    e.len()
                )));
            }
            e.clone()
        }
        (None, Some(terms)) => {
            let mut e = vec![0; n];
            for (row, c) in terms {
                let i = rows.iter().position(|r| &r.name == row).ok_or_else(|| {
                    LoadError::Invalid(format!("virtual character `{name}` names unknown row `{row}`"))
                })?;
                e[i] += c;
            }
            e
        }
        _ => {
            return Err(LoadError::Invalid(format!(
                "virtual character `{name}` needs exactly one of `entries` or `terms`"
            )))
        }
    };
    if v.sign != 1 && v.sign != -1 {
        return Err(LoadError::Invalid(format!("virtual character `{name}` has sign {}", v.sign)));
    }
    Ok(VirtualChar { entries, sign: v.sign, source: v.source.clone() })
}

fn build_constraint(
    k: usize,
    c: &RawConstraint,
    n: usize,
    virtuals: &BTreeMap<String, VirtualChar>,
) -> Result<ConstraintSpec, LoadError> {
    let err = |m: String| LoadError::Invalid(format!("constraint {k}: {m}"));
    let parse = |s: &str| parse_expr(s).map_err(|e| err(format!("`{s}`: {e}")));
    let need_virtual = |v: &str| {
        if virtuals.contains_key(v) {
            Ok(v.to_string())
        } else {
            Err(err(format!("virtual character `{v}` is not defined")))
        }
    };
    let kind = match &c.kind {
        RawConstraintKind::Nonneg { exprs } => {
            ConstraintKind::Nonneg(exprs.iter().map(|s| parse(s)).collect::<Result<_, _>>()?)
        }
        RawConstraintKind::EqualZero { exprs } => {
            ConstraintKind::EqualZero(exprs.iter().map(|s| parse(s)).collect::<Result<_, _>>()?)
        }
        RawConstraintKind::AtLeast { expr, value } => ConstraintKind::AtLeast(parse(expr)?, *value),
        RawConstraintKind::SignOfPimCoords { r#virtual, exempt } => {
            if let Some(bad) = exempt.iter().find(|&&j| j == 0 || j > n) {
                return Err(err(format!("exempt column {bad} out of range")));
            }
            ConstraintKind::SignOfPimCoords { virtual_char: need_virtual(r#virtual)?, exempt: exempt.clone() }
        }
        RawConstraintKind::BrauerNonneg { r#virtual } => {
            ConstraintKind::BrauerNonneg { virtual_char: need_virtual(r#virtual)? }
        }
        RawConstraintKind::DegreePositivity { q_samples } => {
            if q_samples.is_empty() || q_samples.iter().any(|&q| q < 2) {
                return Err(err("q samples must be integers >= 2".into()));
            }
            ConstraintKind::DegreePositivity { q_samples: q_samples.clone() }
        }
    };
    Ok(ConstraintSpec { kind, source: c.source.clone(), axiom: c.axiom })
}
