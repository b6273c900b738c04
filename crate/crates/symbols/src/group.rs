//! Classical groups by type and rank, and the row labels of their unipotent characters.

use std::fmt;

use dmw_qpoly::CycloPoly;

use crate::partition::parse_parts;
use crate::{Bipartition, ClassicalType, Symbol, SymbolError};

/// A classical group of given type and rank, e.g. `D4`, `2D5`, `C4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClassicalGroup {
    pub ty: ClassicalType,
    pub rank: u32,
}

impl ClassicalGroup {
    pub fn new(ty: ClassicalType, rank: u32) -> Self {
        Self { ty, rank }
    }

    /// Parses `D<n>`, `2D<n>`, `B<n>` or `C<n>`.
    pub fn parse(name: &str) -> Result<Self, SymbolError> {
        let unknown = || SymbolError::UnknownGroup(name.into());
        let (ty, digits) = if let Some(rest) = name.strip_prefix("2D") {
            (ClassicalType::TwistedD, rest)
        } else if let Some(rest) = name.strip_prefix('D') {
            (ClassicalType::D, rest)
        } else if let Some(rest) = name.strip_prefix('B').or_else(|| name.strip_prefix('C')) {
            (ClassicalType::BC, rest)
        } else {
            return Err(unknown());
        };
        let rank: u32 = digits.parse().map_err(|_| unknown())?;
        let min_rank = if ty == ClassicalType::BC { 1 } else { 2 };
        if rank < min_rank {
            return Err(unknown());
        }
        Ok(Self { ty, rank })
    }

    /// Group order `q^N ∏ (q^{d_i} ∓ 1)`.
    pub fn order(&self) -> CycloPoly {
        let n = self.rank;
        let (mut p, last, qexp) = match self.ty {
            ClassicalType::BC => (CycloPoly::one(), n, n * n),
            ClassicalType::D => (CycloPoly::q_pow_minus_one(n), n - 1, n * (n - 1)),
            ClassicalType::TwistedD => (CycloPoly::q_pow_plus_one(n), n - 1, n * (n - 1)),
        };
        for i in 1..=last {
            p = p * CycloPoly::q_pow_minus_one(2 * i);
        }
        p * CycloPoly::q_pow(qexp)
    }

    /// The group one step down the chain used for branching.
    pub fn levi_below(&self) -> Option<Self> {
        let min_rank = if self.ty == ClassicalType::BC { 1 } else { 2 };
        (self.rank > min_rank).then(|| Self { ty: self.ty, rank: self.rank - 1 })
    }

    /// Parses a row label of this group.
    pub fn parse_label(&self, text: &str) -> Result<SeriesLabel, SymbolError> {
        SeriesLabel::parse(text, *self)
    }

    /// Labels of all principal-series unipotent characters.
    pub fn principal_series(&self) -> Vec<Bipartition> {
        let size = self.rank - self.ty.rank_offset();
        let mut out = Vec::new();
        for k in 0..=size {
            for alpha in crate::partitions(k) {
                for beta in crate::partitions(size - k) {
                    if self.ty == ClassicalType::D && beta < alpha {
                        continue;
                    }
                    out.extend(Bipartition::with_all_signs(self.ty, alpha.clone(), beta));
                }
            }
        }
        out
    }
}

impl fmt::Display for ClassicalGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ty {
            ClassicalType::D => write!(f, "D{}", self.rank),
            ClassicalType::TwistedD => write!(f, "2D{}", self.rank),
            ClassicalType::BC => write!(f, "C{}", self.rank),
        }
    }
}

/// A unipotent character label: a principal-series bipartition, or a
/// bipartition of the relative Weyl group of a cuspidal character of a
/// smaller group (`D4:α.β` in type D, `C2:α.β` or `B2:α.β` in type BC).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SeriesLabel {
    Principal(Bipartition),
    Cuspidal { prefix: String, alpha: Vec<u32>, beta: Vec<u32>, defect: u32 },
}

impl SeriesLabel {
    pub fn parse(text: &str, group: ClassicalGroup) -> Result<Self, SymbolError> {
        let malformed = |message: &str| SymbolError::Malformed { label: text.into(), message: message.into() };
        let (prefix, rest) = match text.split_once(':') {
            Some((p, r)) => (p, Some(r)),
            None => (text, None),
        };
        let cuspidal = match (group.ty, prefix) {
            (ClassicalType::D, "D4") => Some((4u32, 4u32)),
            (ClassicalType::BC, "C2" | "B2") => Some((3, 2)),
            _ => None,
        };
        let Some((defect, cusp_rank)) = cuspidal else {
            if rest.is_some() {
                return Err(malformed("unsupported series prefix"));
            }
            return Ok(SeriesLabel::Principal(Bipartition::parse(text, group.ty, group.rank)?));
        };
        let (alpha, beta) = match rest {
            None | Some("") => (Vec::new(), Vec::new()),
            Some(r) => match r.split_once('.') {
                Some((a, b)) => (
                    parse_parts(a).map_err(|m| malformed(&m))?,
                    parse_parts(b).map_err(|m| malformed(&m))?,
                ),
                // A rank-one relative Weyl group labels its two characters by
                // the partitions `2` and `1^2` of two.
                None => match parse_parts(r).map_err(|m| malformed(&m))?.as_slice() {
                    [2] => (vec![1], vec![]),
                    [1, 1] => (vec![], vec![1]),
                    _ => return Err(malformed("expected `α.β`, `2` or `1^2` after the series prefix")),
                },
            },
        };
        let found = alpha.iter().chain(&beta).sum::<u32>() + cusp_rank;
        if found != group.rank {
            return Err(SymbolError::RankMismatch { label: text.into(), expected: group.rank, found });
        }
        Ok(SeriesLabel::Cuspidal { prefix: prefix.into(), alpha, beta, defect })
    }

    pub fn symbol(&self) -> Symbol {
        match self {
            SeriesLabel::Principal(b) => b.symbol(),
            SeriesLabel::Cuspidal { alpha, beta, defect, .. } => Symbol::from_parts(alpha, beta, *defect),
        }
    }

    pub fn generic_degree(&self) -> Result<CycloPoly, SymbolError> {
        Ok(self.symbol().degree()?)
    }

    pub fn as_principal(&self) -> Option<&Bipartition> {
        match self {
            SeriesLabel::Principal(b) => Some(b),
            SeriesLabel::Cuspidal { .. } => None,
        }
    }
}
