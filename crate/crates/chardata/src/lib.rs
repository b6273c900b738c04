//! Data model and ingestion for decomposition tables of unipotent blocks:
//! groups, characters, matrices with symbolic entries, constraint records,
//! virtual characters, Levi data and named scenarios.

mod census;
mod group;
mod load;
pub mod schema;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use dmw_paramexpr::{Assignment, Domain, ParamExpr};
use dmw_qpoly::CycloPoly;

pub use census::{census_order, format_census, series_census};
pub use group::{ExceptionalType, GroupInfo, GroupKind};
pub use load::{load_table, load_table_file};

/// Errors raised while loading a dataset, with coordinates where they apply.
/// Rows and columns are reported 1-based.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LoadError {
    #[error("cannot read `{path}`: {message}")]
    Io { path: String, message: String },
    #[error("schema error at line {line}, column {column}: {message}")]
    Schema { line: usize, column: usize, message: String },
    #[error("row {row} (`{name}`): {message}")]
    Row { row: usize, name: String, message: String },
    #[error("entry at row {row}, column {col}: {message}")]
    Entry { row: usize, col: usize, message: String },
    #[error("column {col}: {message}")]
    Column { col: usize, message: String },
    #[error("{0}")]
    Invalid(String),
}

/// Where a row's degree came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeSource {
    /// Printed in the dataset (multiplied by the declared divisor).
    Dataset,
    /// Not printed; recomputed from the symbol of a classical label.
    Computed,
    /// Not printed and not computable.
    Missing,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnipotentCharacter {
    pub name: String,
    pub degree: Option<CycloPoly>,
    pub degree_source: DegreeSource,
    pub a_value: Option<u32>,
    pub family: String,
    pub hc_series: String,
    pub block: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Column {
    pub series: String,
    /// Label under which the column is counted in a series census, when it
    /// differs from `series`.
    pub census: Option<String>,
    pub entries: Vec<ParamExpr>,
}

impl Column {
    pub fn census_label(&self) -> &str {
        self.census.as_deref().unwrap_or(&self.series)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstraintKind {
    Nonneg(Vec<ParamExpr>),
    EqualZero(Vec<ParamExpr>),
    AtLeast(ParamExpr, i64),
    /// Each non-exempt PIM coordinate of the virtual character, times its
    /// sign, is non-negative. Exempt columns are 1-based.
    SignOfPimCoords { virtual_char: String, exempt: Vec<usize> },
    /// Each Brauer-character multiplicity of the virtual character, times
    /// its sign, is non-negative.
    BrauerNonneg { virtual_char: String },
    /// Every Brauer character has positive degree at each sample.
    DegreePositivity { q_samples: Vec<i64> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintSpec {
    pub kind: ConstraintKind,
    pub source: String,
    /// Imported from an argument outside the engine rather than derived.
    pub axiom: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualChar {
    pub entries: Vec<i64>,
    pub sign: i64,
    pub source: String,
}

/// Levi subgroup data for restriction checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviSpec {
    pub name: String,
    pub group: String,
    /// Dataset names of the Levi's blocks of positive defect.
    pub blocks: Vec<String>,
    /// Levi characters lying in blocks of defect zero.
    pub defect_zero: Vec<String>,
    /// Relabelling applied to the group's labels before restriction.
    pub relabel: BTreeMap<String, String>,
}

/// A validated decomposition table of one block.
#[derive(Clone, Debug)]
pub struct BlockTable {
    pub name: String,
    pub group: GroupInfo,
    pub block: String,
    pub ell_condition: String,
    pub declared_defect: Option<u32>,
    pub degree_divisor: Option<CycloPoly>,
    pub rows: Vec<UnipotentCharacter>,
    pub columns: Vec<Column>,
    pub params: BTreeMap<String, Domain>,
    pub constraints: Vec<ConstraintSpec>,
    pub virtual_chars: BTreeMap<String, VirtualChar>,
    pub levis: Vec<LeviSpec>,
    pub witness: Option<Assignment>,
    pub default_scenario: Option<String>,
    /// Name of the scenario applied to produce this table, if any.
    pub scenario: Option<String>,
    raw: schema::RawDataset,
}

impl BlockTable {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Entry at 0-based row `i`, column `j`.
    pub fn entry(&self, i: usize, j: usize) -> &ParamExpr {
        &self.columns[j].entries[i]
    }

    pub fn row_index(&self, name: &str) -> Option<usize> {
        self.rows.iter().position(|r| r.name == name)
    }

    /// Unknowns occurring in matrix entries, sorted.
    pub fn entry_unknowns(&self) -> Vec<String> {
        let mut set = std::collections::BTreeSet::new();
        for c in &self.columns {
            for e in &c.entries {
                set.extend(e.unknowns());
            }
        }
        set.into_iter().collect()
    }

    /// Unknowns occurring anywhere: entries and constraint expressions.
    pub fn all_unknowns(&self) -> Vec<String> {
        let mut set: std::collections::BTreeSet<String> = self.entry_unknowns().into_iter().collect();
        for c in &self.constraints {
            match &c.kind {
                ConstraintKind::Nonneg(es) | ConstraintKind::EqualZero(es) => {
                    for e in es {
                        set.extend(e.unknowns());
                    }
                }
                ConstraintKind::AtLeast(e, _) => set.extend(e.unknowns()),
                _ => {}
            }
        }
        set.into_iter().collect()
    }

    pub fn scenario_names(&self) -> Vec<String> {
        self.raw.scenarios.keys().cloned().collect()
    }

    pub fn scenario_description(&self, name: &str) -> Option<&str> {
        self.raw.scenarios.get(name).map(|s| s.description.as_str())
    }

    /// The table with the named scenario applied: entry and column
    /// overrides, extra unknowns, constraints, virtual characters and witness.
    pub fn with_scenario(&self, name: &str) -> Result<BlockTable, LoadError> {
        load::apply_scenario(&self.raw, &self.name, name)
    }

    /// The serialized form this table was built from.
    pub fn raw(&self) -> &schema::RawDataset {
        &self.raw
    }

    /// `phi_valuation(order, 4)` minus the least `Φ4`-valuation of a row
    /// degree; `None` when some degree is unavailable.
    pub fn block_defect(&self) -> Option<u32> {
        let group = self.group.order.phi_valuation(4).ok()?;
        let mut least = u32::MAX;
        for r in &self.rows {
            least = least.min(r.degree.as_ref()?.phi_valuation(4).ok()?);
        }
        group.checked_sub(least)
    }
}

/// Directory holding the shipped datasets: `DMW_DATA_DIR` if set, else the
/// `data` directory of the workspace.
pub fn data_dir() -> PathBuf {
    match std::env::var_os("DMW_DATA_DIR") {
        Some(dir) => PathBuf::from(dir),
        None => Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data"),
    }
}

/// Loads a dataset by name (file stem) from [`data_dir`].
pub fn load_named(name: &str) -> Result<BlockTable, LoadError> {
    load_table_file(&data_dir().join(format!("{name}.json")))
}

/// File stems of all datasets in [`data_dir`], sorted.
pub fn shipped_names() -> Vec<String> {
    let mut names: Vec<String> = std::fs::read_dir(data_dir())
        .map(|rd| {
            rd.filter_map(|e| e.ok())
                .filter_map(|e| {
                    let p = e.path();
                    (p.extension()? == "json").then(|| p.file_stem()?.to_str().map(str::to_string))?
                })
                .collect()
        })
        .unwrap_or_default();
    names.sort();
    names
}
