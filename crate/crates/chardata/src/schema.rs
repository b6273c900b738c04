//! Serialized form of a dataset file.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawDataset {
    pub group: String,
    pub order: String,
    pub block: String,
    pub ell_condition: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub defect: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_divisor: Option<String>,
    pub characters: Vec<RawCharacter>,
    pub columns: Vec<RawColumn>,
    #[serde(default)]
    pub params: BTreeMap<String, RawDomain>,
    #[serde(default)]
    pub constraints: Vec<RawConstraint>,
    #[serde(default)]
    pub virtual_chars: BTreeMap<String, RawVirtual>,
    #[serde(default)]
    pub levis: Vec<RawLevi>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<BTreeMap<String, i64>>,
    #[serde(default)]
    pub scenarios: BTreeMap<String, RawScenario>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub default_scenario: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawCharacter {
    pub name: String,
    pub degree: Option<String>,
    pub series: String,
    #[serde(default)]
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<u32>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawColumn {
    pub series: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub census: Option<String>,
    pub entries: Vec<RawEntry>,
}

/// A matrix entry: an integer, or an expression in the unknowns.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RawEntry {
    Int(i64),
    Expr(String),
}

impl RawEntry {
    pub fn text(&self) -> String {
        match self {
            RawEntry::Int(v) => v.to_string(),
            RawEntry::Expr(s) => s.clone(),
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawDomain {
    pub min: i64,
    pub max: i64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RawConstraintKind {
    Nonneg { exprs: Vec<String> },
    EqualZero { exprs: Vec<String> },
    AtLeast { expr: String, value: i64 },
    SignOfPimCoords { r#virtual: String, #[serde(default)] exempt: Vec<usize> },
    BrauerNonneg { r#virtual: String },
    DegreePositivity { q_samples: Vec<i64> },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RawConstraint {
    #[serde(flatten)]
    pub kind: RawConstraintKind,
    #[serde(default)]
    pub source: String,
    #[serde(default)]
    pub axiom: bool,
}

fn one() -> i64 {
    1
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawVirtual {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub terms: Option<BTreeMap<String, i64>>,
    #[serde(default = "one")]
    pub sign: i64,
    #[serde(default)]
    pub source: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawLevi {
    pub name: String,
    pub group: String,
    pub blocks: Vec<String>,
    #[serde(default)]
    pub defect_zero: Vec<String>,
    #[serde(default)]
    pub relabel: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawScenario {
    #[serde(default)]
    pub description: String,
    #[serde(default)]
    pub params: BTreeMap<String, RawDomain>,
    #[serde(default)]
    pub entries: Vec<RawCellOverride>,
    #[serde(default)]
    pub columns: Vec<RawColumnOverride>,
    #[serde(default)]
    pub constraints: Vec<RawConstraint>,
    #[serde(default)]
    pub virtual_chars: BTreeMap<String, RawVirtual>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<BTreeMap<String, i64>>,
}

/// Replaces one entry; `col` is 1-based.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawCellOverride {
    pub row: String,
    pub col: usize,
    pub expr: RawEntry,
}

/// Replaces a whole column; rows not listed become 0. `col` is 1-based.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawColumnOverride {
    pub col: usize,
    pub entries: BTreeMap<String, RawEntry>,
}
