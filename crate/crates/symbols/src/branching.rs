//! One-box Harish-Chandra branching along `X_{n-1} ⊂ X_n`.
//!
//! Induction adds a box to either component and restriction removes one.
//! For type D a pair is unordered: a non-degenerate character meeting a
//! degenerate pair `(γ; γ)` meets each signed character once, and a signed
//! character branches like its unsigned pair taken once.

use std::collections::BTreeMap;

use crate::{Bipartition, ClassicalType};

fn add_box(parts: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for i in 0..=parts.len() {
        let current = parts.get(i).copied().unwrap_or(0);
        if i == 0 || parts[i - 1] > current {
            let mut p = parts.to_vec();
            if i == parts.len() {
                p.push(1);
            } else {
                p[i] += 1;
            }
            out.push(p);
        }
    }
    out
}

fn remove_box(parts: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for i in 0..parts.len() {
        let next = parts.get(i + 1).copied().unwrap_or(0);
        if parts[i] > next {
            let mut p = parts.to_vec();
            p[i] -= 1;
            if p[i] == 0 {
                p.pop();
            }
            out.push(p);
        }
    }
    out
}

fn collect(ty: ClassicalType, pairs: Vec<(Vec<u32>, Vec<u32>)>, signed_input: bool) -> Vec<(Bipartition, u32)> {
    let mut out: BTreeMap<Bipartition, u32> = BTreeMap::new();
    for (a, b) in pairs {
        debug_assert!(!(signed_input && a == b), "a signed input never meets a degenerate pair");
        for label in Bipartition::with_all_signs(ty, a, b) {
            *out.entry(label).or_insert(0) += 1;
        }
    }
    out.into_iter().collect()
}

fn branch(b: &Bipartition, step: fn(&[u32]) -> Vec<Vec<u32>>) -> Vec<(Bipartition, u32)> {
    let (alpha, beta) = (b.alpha(), b.beta());
    let mut pairs: Vec<(Vec<u32>, Vec<u32>)> = step(alpha).into_iter().map(|a| (a, beta.to_vec())).collect();
    if b.sign().is_none() {
        pairs.extend(step(beta).into_iter().map(|x| (alpha.to_vec(), x)));
    }
    collect(b.classical_type(), pairs, b.sign().is_some())
}

/// Characters of rank `n` in the Harish-Chandra induction of a rank `n-1`
/// principal-series character, with multiplicities.
pub fn induce_one_box(b: &Bipartition) -> Vec<(Bipartition, u32)> {
    branch(b, add_box)
}

/// Characters of rank `n-1` in the Harish-Chandra restriction, with
/// multiplicities; the adjoint of [`induce_one_box`].
pub fn restrict_one_box(b: &Bipartition) -> Vec<(Bipartition, u32)> {
    branch(b, remove_box)
}
