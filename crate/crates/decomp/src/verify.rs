//! Consistency checks over a loaded table, reported line by line.

use std::fmt;

use dmw_chardata::{format_census, series_census, BlockTable, DegreeSource};
use dmw_paramexpr::Assignment;
use num::Signed;

use crate::algebra::{brauer_degrees, check_unitriangular, integer_matrix, specialize, DegreeSamples};

pub const DEFAULT_Q_SAMPLES: [i64; 6] = [2, 3, 5, 7, 8, 9];

/// Defect expected when the dataset does not declare one.
const DEFAULT_DEFECT: u32 = 2;

/// One line of a verification report: `CHECK <name> PASS|FAIL <detail>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, pass: bool, detail: impl Into<String>) -> Self {
        Self { name: name.to_string(), pass, detail: detail.into() }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CHECK {} {} {}", self.name, if self.pass { "PASS" } else { "FAIL" }, self.detail)
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub q_samples: Vec<i64>,
    /// Values for the unknowns; the dataset's witness is used when absent.
    pub assignment: Option<Assignment>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { q_samples: DEFAULT_Q_SAMPLES.to_vec(), assignment: None }
    }
}

fn join_samples(q: &[i64]) -> String {
    q.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

/// Runs every check on the table specialised at the chosen assignment.
pub fn verify(t: &BlockTable, opts: &VerifyOptions) -> Vec<Check> {
    let s = opts.assignment.clone().or_else(|| t.witness.clone()).unwrap_or_default();
    let st = specialize(t, &s);
    let n = t.len();
    vec![
        Check::new("shape", t.columns.len() == n, format!("{n} rows, {} columns", t.columns.len())),
        unitriangular(&st),
        nonneg_entries(&st),
        a_order(&st),
        degrees(t),
        defect(t),
        Check::new("census", true, format_census(&series_census(t))),
        brauer_positivity(&st, &s, &opts.q_samples),
    ]
}

fn unitriangular(t: &BlockTable) -> Check {
    match check_unitriangular(t) {
        None => Check::new("unitriangular", true, "diagonal 1, zero above"),
        Some((i, j, e)) => Check::new("unitriangular", false, format!("row {} column {}: `{e}`", i + 1, j + 1)),
    }
}

fn nonneg_entries(t: &BlockTable) -> Check {
    for j in 0..t.len() {
        for i in 0..t.len() {
            if let Some(v) = t.entry(i, j).as_constant() {
                if v < 0 {
                    return Check::new("entries", false, format!("row {} column {} is {v}", i + 1, j + 1));
                }
            }
        }
    }
    Check::new("entries", true, "no negative constant entry")
}

/// Every nonzero entry lies in a row whose a-value is at least that of the
/// column's diagonal row.
fn a_order(t: &BlockTable) -> Check {
    let missing = t.rows.iter().filter(|r| r.a_value.is_none()).count();
    if missing > 0 {
        return Check::new("a_order", false, format!("a-values unavailable for {missing} rows"));
    }
    let a: Vec<u32> = t.rows.iter().map(|r| r.a_value.expect("checked")).collect();
    for j in 0..t.len() {
        for i in 0..t.len() {
            if !t.entry(i, j).is_zero() && a[i] < a[j] {
                return Check::new(
                    "a_order",
                    false,
                    format!("row {} (a={}) meets column {} (a={})", i + 1, a[i], j + 1, a[j]),
                );
            }
        }
    }
    Check::new("a_order", true, "a-values increase down every column")
}

fn degrees(t: &BlockTable) -> Check {
    let missing = t.rows.iter().filter(|r| r.degree_source == DegreeSource::Missing).count();
    if missing > 0 {
        return Check::new("degrees", false, format!("{missing} of {} rows have no degree", t.len()));
    }
    let Some(g) = t.group.classical() else {
        return Check::new("degrees", true, format!("{} printed degrees, no symbol combinatorics", t.len()));
    };
    let mut matched = 0;
    let mut computed = 0;
    for (i, r) in t.rows.iter().enumerate() {
        let printed = r.degree.as_ref().expect("not missing");
        if r.degree_source == DegreeSource::Computed {
            computed += 1;
            continue;
        }
        match g.parse_label(&r.name).and_then(|l| l.generic_degree()) {
            Ok(d) if &d == printed => matched += 1,
            Ok(d) => {
                return Check::new(
                    "degrees",
                    false,
                    format!("row {} `{}`: printed {printed}, symbol gives {d}", i + 1, r.name),
                )
            }
            Err(e) => return Check::new("degrees", false, format!("row {} `{}`: {e}", i + 1, r.name)),
        }
    }
    Check::new("degrees", true, format!("{matched} printed degrees reproduced, {computed} computed"))
}

fn defect(t: &BlockTable) -> Check {
    let expected = t.declared_defect.unwrap_or(DEFAULT_DEFECT);
    match t.block_defect() {
        Some(d) if d == expected => Check::new("defect", true, format!("{d}")),
        Some(d) => Check::new("defect", false, format!("{d}, expected {expected}")),
        None => Check::new("defect", false, format!("degrees unavailable, expected {expected}")),
    }
}

fn brauer_positivity(t: &BlockTable, s: &Assignment, q: &[i64]) -> Check {
    const NAME: &str = "brauer_degrees";
    let m = match integer_matrix(t, s) {
        Ok(m) => m,
        Err(e) => return Check::new(NAME, false, e.to_string()),
    };
    let samples = match DegreeSamples::new(t, q) {
        Ok(x) => x,
        Err(e) => return Check::new(NAME, false, e.to_string()),
    };
    match samples.first_nonpositive(&m) {
        Err(e) => return Check::new(NAME, false, e.to_string()),
        Ok(Some((q0, j, v))) => {
            return Check::new(NAME, false, format!("column {} has degree {v} at q={q0}", j + 1))
        }
        Ok(None) => {}
    }
    let polys = match brauer_degrees(t, s) {
        Ok(p) => p,
        Err(e) => return Check::new(NAME, false, e.to_string()),
    };
    if let Some(j) = polys.iter().position(|p| !p.leading().is_some_and(|c| c.is_positive())) {
        return Check::new(NAME, false, format!("column {} has non-positive leading coefficient", j + 1));
    }
    Check::new(
        NAME,
        true,
        format!("{} positive at q={}, leading coefficients positive", polys.len(), join_samples(q)),
    )
}
