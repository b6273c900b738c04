//! Group types, orders and the Levi chain used for branching.

use std::fmt;

use dmw_qpoly::CycloPoly;
use dmw_symbols::{ClassicalGroup, ClassicalType};

/// Exceptional types with shipped tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExceptionalType {
    E6,
    TwistedE6,
    E7,
    E8,
    F4,
}

impl ExceptionalType {
    /// Degrees of the basic invariants together with the sign `ε` such that
    /// the order is `q^N ∏ (q^d - ε)`.
    fn degrees(self) -> Vec<(u32, i32)> {
        let plain = |ds: &[u32]| ds.iter().map(|&d| (d, 1)).collect();
        match self {
            ExceptionalType::E6 => plain(&[2, 5, 6, 8, 9, 12]),
            ExceptionalType::TwistedE6 => {
                [2, 5, 6, 8, 9, 12].iter().map(|&d| (d, if d % 2 == 1 { -1 } else { 1 })).collect()
            }
            ExceptionalType::E7 => plain(&[2, 6, 8, 10, 12, 14, 18]),
            ExceptionalType::E8 => plain(&[2, 8, 12, 14, 18, 20, 24, 30]),
            ExceptionalType::F4 => plain(&[2, 6, 8, 12]),
        }
    }

    fn rank(self) -> u32 {
        match self {
            ExceptionalType::E6 | ExceptionalType::TwistedE6 => 6,
            ExceptionalType::E7 => 7,
            ExceptionalType::E8 => 8,
            ExceptionalType::F4 => 4,
        }
    }
}

/// The type of a group: classical with a symbol combinatorics, or exceptional.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Classical(ClassicalGroup),
    Exceptional(ExceptionalType),
}

/// A finite group of Lie type named by its type label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupInfo {
    pub name: String,
    pub kind: GroupKind,
    pub order: CycloPoly,
    /// Number of simple reflections of the Weyl group.
    pub weyl_generators: u32,
    pub positive_roots: u32,
    /// Exponent of `Φ4` in the order, computed from the invariant degrees.
    pub sylow_phi4_rank: u32,
}

impl GroupInfo {
    /// Parses `D<n>`, `2D<n>`, `B<n>`, `C<n>`, `E6`, `2E6`, `E7`, `E8` or `F4`.
    pub fn parse(name: &str) -> Option<Self> {
        let kind = match name {
            "E6" => GroupKind::Exceptional(ExceptionalType::E6),
            "2E6" => GroupKind::Exceptional(ExceptionalType::TwistedE6),
            "E7" => GroupKind::Exceptional(ExceptionalType::E7),
            "E8" => GroupKind::Exceptional(ExceptionalType::E8),
            "F4" => GroupKind::Exceptional(ExceptionalType::F4),
            _ => GroupKind::Classical(ClassicalGroup::parse(name).ok()?),
        };
        // (degree, ε) pairs with order q^N ∏ (q^d - ε).
        let (degrees, rank) = match kind {
            GroupKind::Exceptional(e) => (e.degrees(), e.rank()),
            GroupKind::Classical(g) => {
                let n = g.rank;
                let mut ds: Vec<(u32, i32)> = match g.ty {
                    ClassicalType::BC => (1..=n).map(|i| (2 * i, 1)).collect(),
                    _ => (1..n).map(|i| (2 * i, 1)).collect(),
                };
                match g.ty {
                    ClassicalType::D => ds.push((n, 1)),
                    ClassicalType::TwistedD => ds.push((n, -1)),
                    ClassicalType::BC => {}
                }
                (ds, n)
            }
        };
        let positive_roots: u32 = degrees.iter().map(|(d, _)| d - 1).sum();
        let mut order = CycloPoly::q_pow(positive_roots);
        let mut sylow_phi4_rank = 0;
        for &(d, eps) in &degrees {
            if eps == 1 {
                order = order * CycloPoly::q_pow_minus_one(d);
                sylow_phi4_rank += u32::from(d % 4 == 0);
            } else {
                order = order * CycloPoly::q_pow_plus_one(d);
                sylow_phi4_rank += u32::from(d % 4 == 2);
            }
        }
        Some(Self { name: name.to_string(), kind, order, weyl_generators: rank, positive_roots, sylow_phi4_rank })
    }

    pub fn classical(&self) -> Option<ClassicalGroup> {
        match self.kind {
            GroupKind::Classical(g) => Some(g),
            GroupKind::Exceptional(_) => None,
        }
    }

    /// The next group down the classical chain, `D_{n-1} ⊂ D_n` and its analogues.
    pub fn levi_chain(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut g = self.classical();
        while let Some(h) = g.and_then(|g| g.levi_below()) {
            out.push(h.to_string());
            g = Some(h);
        }
        out
    }
}

impl fmt::Display for GroupInfo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}
