//! Bipartition labels `α.β[±]` for unipotent characters of classical groups.

use std::fmt;

use dmw_qpoly::CycloPoly;

use crate::partition::{format_parts, parse_parts};
use crate::{Symbol, SymbolError};

/// Classical group types handled by the symbol combinatorics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassicalType {
    /// Split orthogonal groups `SO_{2n}^+`.
    D,
    /// Non-split orthogonal groups `SO_{2n}^-`.
    TwistedD,
    /// Symplectic and odd orthogonal groups.
    BC,
}

impl ClassicalType {
    /// Defect of the symbols labelling principal-series characters.
    pub fn principal_defect(self) -> u32 {
        match self {
            ClassicalType::D => 0,
            ClassicalType::BC => 1,
            ClassicalType::TwistedD => 2,
        }
    }

    /// Difference between the group rank and the size of a principal-series label.
    pub fn rank_offset(self) -> u32 {
        match self {
            ClassicalType::TwistedD => 1,
            _ => 0,
        }
    }
}

/// Sign distinguishing the two characters of a degenerate type-D symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// A principal-series unipotent label `(α; β)`.
///
/// For type D the pair is unordered; the stored order puts the
/// lexicographically smaller part list first, which is also the printed order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    ty: ClassicalType,
    alpha: Vec<u32>,
    beta: Vec<u32>,
    sign: Option<Sign>,
}

fn check_parts(parts: &[u32]) -> Result<(), String> {
    if parts.contains(&0) {
        return Err("parts must be positive".into());
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err("parts must be weakly decreasing".into());
    }
    Ok(())
}

impl Bipartition {
    /// Validated constructor. The sign must be given exactly when the type is
    /// D and both components agree.
    pub fn new(ty: ClassicalType, alpha: Vec<u32>, beta: Vec<u32>, sign: Option<Sign>) -> Result<Self, String> {
        check_parts(&alpha)?;
        check_parts(&beta)?;
        let (alpha, beta) = if ty == ClassicalType::D && beta < alpha { (beta, alpha) } else { (alpha, beta) };
        let degenerate = ty == ClassicalType::D && alpha == beta;
        if degenerate != sign.is_some() {
            return Err(if degenerate {
                "a degenerate label needs a sign".into()
            } else {
                "only degenerate type-D labels carry a sign".into()
            });
        }
        Ok(Self { ty, alpha, beta, sign })
    }

    /// Both signed characters for a degenerate pair, the single label otherwise.
    pub fn with_all_signs(ty: ClassicalType, alpha: Vec<u32>, beta: Vec<u32>) -> Vec<Self> {
        if ty == ClassicalType::D && alpha == beta {
            [Sign::Plus, Sign::Minus]
                .into_iter()
                .map(|s| Self::new(ty, alpha.clone(), beta.clone(), Some(s)).expect("valid parts"))
                .collect()
        } else {
            vec![Self::new(ty, alpha, beta, None).expect("valid parts")]
        }
    }

    /// Parses `α.β`, or `α±` for a degenerate type-D label, and checks the rank.
    pub fn parse(text: &str, ty: ClassicalType, rank: u32) -> Result<Self, SymbolError> {
        let b = Self::parse_any_rank(text, ty)?;
        if b.rank() != rank {
            return Err(SymbolError::RankMismatch { label: text.into(), expected: rank, found: b.rank() });
        }
        Ok(b)
    }

    /// Parses a label without fixing the rank.
    pub fn parse_any_rank(text: &str, ty: ClassicalType) -> Result<Self, SymbolError> {
        let malformed = |message: String| SymbolError::Malformed { label: text.into(), message };
        let (body, sign) = match text.as_bytes().last() {
            Some(b'+') => (&text[..text.len() - 1], Some(Sign::Plus)),
            Some(b'-') => (&text[..text.len() - 1], Some(Sign::Minus)),
            _ => (text, None),
        };
        let (alpha, beta) = match body.split_once('.') {
            Some((a, b)) => (parse_parts(a).map_err(malformed)?, parse_parts(b).map_err(malformed)?),
            None if sign.is_some() => {
                let p = parse_parts(body).map_err(malformed)?;
                (p.clone(), p)
            }
            None => return Err(malformed("expected `α.β` or a signed degenerate label".into())),
        };
        Self::new(ty, alpha, beta, sign).map_err(malformed)
    }

    pub fn classical_type(&self) -> ClassicalType {
        self.ty
    }

    pub fn alpha(&self) -> &[u32] {
        &self.alpha
    }

    pub fn beta(&self) -> &[u32] {
        &self.beta
    }

    pub fn sign(&self) -> Option<Sign> {
        self.sign
    }

    /// Number of boxes `|α|+|β|`.
    pub fn size(&self) -> u32 {
        self.alpha.iter().chain(&self.beta).sum()
    }

    /// Rank of the group the label belongs to.
    pub fn rank(&self) -> u32 {
        self.size() + self.ty.rank_offset()
    }

    /// Principal-series symbol.
    pub fn symbol(&self) -> Symbol {
        Symbol::from_parts(&self.alpha, &self.beta, self.ty.principal_defect())
    }

    /// Generic degree; both characters of a degenerate pair share it.
    pub fn generic_degree(&self) -> Result<CycloPoly, SymbolError> {
        Ok(self.symbol().degree()?)
    }

    /// Order of vanishing of the generic degree at `q = 0`.
    pub fn a_value(&self) -> Result<u32, SymbolError> {
        Ok(self.generic_degree()?.valuation_q()?)
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Some(s) => write!(f, "{}{}", format_parts(&self.alpha), s.symbol()),
            None => write!(f, "{}.{}", format_parts(&self.alpha), format_parts(&self.beta)),
        }
    }
}
