//! Two-row β-set symbols and their generic degrees.

use std::fmt;

use dmw_qpoly::{rat, CycloPoly, QpolyError};

use crate::ClassicalType;

/// A symbol: two strictly increasing rows of non-negative integers.
///
/// The stored form is the shift-reduced representative: the two rows never
/// both start with 0. The first row is the one built from the first
/// component of a bipartition and is never shorter than the second.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

/// β-set of `parts` with `len` entries, increasing.
fn beta_set(parts: &[u32], len: usize) -> Vec<u32> {
    (0..len)
        .map(|i| {
            let idx = len - 1 - i;
            parts.get(idx).copied().unwrap_or(0) + i as u32
        })
        .collect()
}

/// Partition (weakly decreasing, no zeros) with β-set `row`.
fn parts_of(row: &[u32]) -> Vec<u32> {
    let mut parts: Vec<u32> = row.iter().enumerate().map(|(i, &b)| b - i as u32).filter(|&p| p > 0).collect();
    parts.reverse();
    parts
}

fn triangular(k: u32) -> u32 {
    k * k.saturating_sub(1) / 2
}

impl Symbol {
    /// Builds a symbol from explicit rows; rows must be strictly increasing
    /// and the first row at least as long as the second.
    pub fn new(top: Vec<u32>, bottom: Vec<u32>) -> Result<Self, String> {
        for row in [&top, &bottom] {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err("symbol rows must be strictly increasing".into());
            }
        }
        if top.len() < bottom.len() {
            return Err("first symbol row must not be shorter than the second".into());
        }
        let mut s = Self { top, bottom };
        s.reduce();
        Ok(s)
    }

    /// The symbol of the bipartition `(alpha; beta)` whose first row is
    /// longer by `defect`.
    pub fn from_parts(alpha: &[u32], beta: &[u32], defect: u32) -> Self {
        let m = (alpha.len().saturating_sub(defect as usize)).max(beta.len());
        let mut s = Self { top: beta_set(alpha, m + defect as usize), bottom: beta_set(beta, m) };
        s.reduce();
        s
    }

    fn reduce(&mut self) {
        while self.top.first() == Some(&0) && self.bottom.first() == Some(&0) {
            self.top.remove(0);
            self.bottom.remove(0);
            self.top.iter_mut().for_each(|x| *x -= 1);
            self.bottom.iter_mut().for_each(|x| *x -= 1);
        }
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    pub fn defect(&self) -> u32 {
        (self.top.len() - self.bottom.len()) as u32
    }

    /// The bipartition read back from the two rows.
    pub fn parts(&self) -> (Vec<u32>, Vec<u32>) {
        (parts_of(&self.top), parts_of(&self.bottom))
    }

    /// Group type whose unipotent characters this symbol labels.
    pub fn classical_type(&self) -> ClassicalType {
        match self.defect() % 4 {
            1 | 3 => ClassicalType::BC,
            0 => ClassicalType::D,
            _ => ClassicalType::TwistedD,
        }
    }

    /// Rank of the group: entry sum minus `⌊((a+b-1)/2)²⌋`.
    pub fn rank(&self) -> u32 {
        let total: u32 = self.top.iter().chain(&self.bottom).sum();
        let len = (self.top.len() + self.bottom.len()) as u32;
        let half = len.saturating_sub(1) / 2;
        let correction = if len % 2 == 0 { half * (half + 1) } else { half * half };
        total - correction
    }

    /// Equal rows (type D only): the symbol labels two characters.
    pub fn is_degenerate(&self) -> bool {
        self.top == self.bottom
    }

    /// Generic degree of the unipotent character(s) labelled by the symbol,
    /// in the group of its type and rank.
    pub fn degree(&self) -> Result<CycloPoly, QpolyError> {
        let n = self.rank();
        let ty = self.classical_type();
        let mut num = match ty {
            ClassicalType::BC => CycloPoly::one(),
            ClassicalType::D => CycloPoly::q_pow_minus_one(n.max(1)),
            ClassicalType::TwistedD => CycloPoly::q_pow_plus_one(n),
        };
        if ty == ClassicalType::D && n == 0 {
            num = CycloPoly::one();
        }
        let last = if ty == ClassicalType::BC { n } else { n.saturating_sub(1) };
        for i in 1..=last {
            num = num * CycloPoly::q_pow_minus_one(2 * i);
        }
        for row in [&self.top, &self.bottom] {
            for (j, &y) in row.iter().enumerate() {
                for &x in &row[..j] {
                    num = num * CycloPoly::q_pow(x) * CycloPoly::q_pow_minus_one(y - x);
                }
            }
        }
        for &x in &self.top {
            for &y in &self.bottom {
                let (lo, hi) = (x.min(y), x.max(y));
                num = num * CycloPoly::q_pow(lo) * CycloPoly::q_pow_plus_one(hi - lo);
            }
        }
        let a = self.top.len() as u32;
        let b = self.bottom.len() as u32;
        let twos = if self.is_degenerate() {
            a
        } else if ty == ClassicalType::BC {
            (a + b - 1) / 2
        } else {
            (a + b).saturating_sub(2) / 2
        };
        let mut den = CycloPoly::from_rational(rat(1 << twos));
        for &x in self.top.iter().chain(&self.bottom) {
            for k in 1..=x {
                den = den * CycloPoly::q_pow_minus_one(2 * k);
            }
        }
        let mut k = a + b;
        let mut qexp = 0;
        while k >= 4 {
            qexp += triangular(k - 2);
            k -= 2;
        }
        den = den * CycloPoly::q_pow(qexp);
        num.checked_div(&den)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[u32]| r.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({}; {})", row(&self.top), row(&self.bottom))
    }
}
