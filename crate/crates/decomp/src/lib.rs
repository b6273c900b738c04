//! Decomposition-matrix algebra over symbolic entries: unitriangular
//! solving, Brauer-character degrees, coordinates of virtual characters in
//! the basis of projective indecomposables, and identity of blocks up to
//! reordering.

mod algebra;
mod equiv;
mod verify;

use dmw_paramexpr::ParamExpr;

pub use algebra::{
    brauer_degrees, brauer_expansion, check_unitriangular, integer_matrix, pim_coordinates, positivity_domain,
    specialize, DegreeSamples,
};
pub use dmw_chardata::VirtualChar as VirtualVector;
pub use equiv::{permutation_identical, Witness};
pub use verify::{verify, Check, VerifyOptions, DEFAULT_Q_SAMPLES};

/// Errors raised by matrix computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecompError {
    #[error("unknown `{0}` is not bound")]
    Unbound(String),
    #[error("entry at row {row}, column {col} is `{value}`, so the matrix is not unitriangular")]
    NotUnitriangular { row: usize, col: usize, value: String },
    #[error("the specialised matrix is singular")]
    Singular,
    #[error("vector has length {found}, expected {expected}")]
    Length { expected: usize, found: usize },
    #[error("degree of row {row} (`{name}`) is unavailable")]
    MissingDegree { row: usize, name: String },
    #[error("domain product of {0} points is too large to enumerate")]
    TooLarge(u128),
}

/// The character of a projective module restricted to the unipotent rows
/// of a block, with the Harish-Chandra series it was induced from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveVector {
    pub entries: Vec<ParamExpr>,
    pub series: Option<String>,
}

impl ProjectiveVector {
    pub fn new(entries: Vec<ParamExpr>) -> Self {
        Self { entries, series: None }
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        Self::new(entries.iter().map(|&v| ParamExpr::constant(v)).collect())
    }

    /// The `j`-th column (0-based) of a table, with its series label.
    pub fn column(t: &dmw_chardata::BlockTable, j: usize) -> Self {
        Self { entries: t.columns[j].entries.clone(), series: Some(t.columns[j].series.clone()) }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(ParamExpr::is_zero)
    }

    /// Entry values when every entry is constant.
    pub fn as_ints(&self) -> Option<Vec<i64>> {
        self.entries.iter().map(ParamExpr::as_constant).collect()
    }
}

impl std::ops::Add for &ProjectiveVector {
    type Output = ProjectiveVector;

    fn add(self, rhs: &ProjectiveVector) -> ProjectiveVector {
        ProjectiveVector::new(self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect())
    }
}

impl std::ops::Sub for &ProjectiveVector {
    type Output = ProjectiveVector;

    fn sub(self, rhs: &ProjectiveVector) -> ProjectiveVector {
        ProjectiveVector::new(self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect())
    }
}
