//! Characters of the hyperoctahedral groups computed from scratch:
//! Murnaghan–Nakayama values for symmetric groups, combined over signed
//! cycle types, restricted to the even-sign subgroup. Shared by test targets
//! through `#[path]`.

#![allow(dead_code)]

use std::collections::BTreeMap;

use dmw_symbols::{induce_one_box, partitions, restrict_one_box, Bipartition, ClassicalType};
use proptest::prelude::*;

/// χ^λ(μ) by removing border strips of length μ[0] from the β-set of λ.
pub fn mn(lambda: &[u32], mu: &[u32]) -> i64 {
    if mu.is_empty() {
        return i64::from(lambda.iter().sum::<u32>() == 0);
    }
    let len = lambda.len();
    let beta: Vec<i64> = (0..len).map(|i| i64::from(lambda[i]) + (len - 1 - i) as i64).collect();
    let k = i64::from(mu[0]);
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        let nb = b - k;
        if nb < 0 || beta.contains(&nb) {
            continue;
        }
        let height = beta.iter().filter(|&&x| x > nb && x < b).count();
        let mut next = beta.clone();
        next[i] = nb;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let m = next.len();
        let parts: Vec<u32> = (0..m).map(|j| (next[j] - (m - 1 - j) as i64) as u32).filter(|&p| p > 0).collect();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&parts, &mu[1..]);
    }
    total
}

/// A signed cycle type: positive and negative cycle lengths.
#[derive(Clone, Debug)]
pub struct Class {
    pub pos: Vec<u32>,
    pub neg: Vec<u32>,
}

pub fn classes(n: u32) -> Vec<Class> {
    let mut out = Vec::new();
    for k in 0..=n {
        for pos in partitions(k) {
            for neg in partitions(n - k) {
                out.push(Class { pos: pos.clone(), neg });
            }
        }
    }
    out
}

pub fn factorial(n: u32) -> i64 {
    (1..=i64::from(n)).product()
}

pub fn centralizer(c: &Class) -> i64 {
    let mut z = 1;
    for row in [&c.pos, &c.neg] {
        let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
        for &k in row.iter() {
            *counts.entry(k).or_default() += 1;
        }
        for (k, m) in counts {
            z *= (2 * i64::from(k)).pow(m) * factorial(m);
        }
    }
    z
}

/// Character of W(B_n) labelled (α; β) at a signed cycle type.
pub fn chi_b(alpha: &[u32], beta: &[u32], c: &Class) -> i64 {
    let cycles: Vec<(u32, bool)> = c.pos.iter().map(|&k| (k, false)).chain(c.neg.iter().map(|&k| (k, true))).collect();
    let a_size: u32 = alpha.iter().sum();
    let mut total = 0;
    for mask in 0u32..(1 << cycles.len()) {
        let mut a_part = Vec::new();
        let mut b_part = Vec::new();
        let mut sign = 1;
        for (i, &(k, negative)) in cycles.iter().enumerate() {
            if mask & (1 << i) != 0 {
                a_part.push(k);
            } else {
                b_part.push(k);
                if negative {
                    sign = -sign;
                }
            }
        }
        if a_part.iter().sum::<u32>() != a_size {
            continue;
        }
        total += sign * mn(alpha, &a_part) * mn(beta, &b_part);
    }
    total
}

/// Inner product over W(B_m), or over its index-two subgroup W(D_m) when
/// `even_only`, of two class functions given on signed cycle types.
pub fn inner(m: u32, even_only: bool, f: impl Fn(&Class) -> i64, g: impl Fn(&Class) -> i64) -> i64 {
    let order = (1i64 << m) * factorial(m);
    let sub_order = if even_only { order / 2 } else { order };
    let mut total = 0;
    for c in classes(m) {
        if even_only && c.neg.len() % 2 == 1 {
            continue;
        }
        total += (order / centralizer(&c)) * f(&c) * g(&c);
    }
    assert_eq!(total % sub_order, 0);
    total / sub_order
}

/// ⟨Res y, x⟩ over the smaller Weyl group, where a point of rank m-1 is
/// embedded by adjoining a fixed point.
pub fn oracle_multiplicity(ty: ClassicalType, x: (&[u32], &[u32]), y: (&[u32], &[u32])) -> i64 {
    let m: u32 = x.0.iter().chain(x.1).sum();
    let res_y = |c: &Class| {
        let mut bigger = c.clone();
        bigger.pos.push(1);
        bigger.pos.sort_unstable_by(|a, b| b.cmp(a));
        chi_b(y.0, y.1, &bigger)
    };
    inner(m, ty == ClassicalType::D, res_y, |c| chi_b(x.0, x.1, c))
}

/// Unsigned label pairs of a given size, unordered for type D.
pub fn pairs(ty: ClassicalType, size: u32) -> Vec<(Vec<u32>, Vec<u32>)> {
    let mut out = Vec::new();
    for k in 0..=size {
        for a in partitions(k) {
            for b in partitions(size - k) {
                if ty != ClassicalType::D || a <= b {
                    out.push((a.clone(), b));
                }
            }
        }
    }
    out
}

pub fn mult(list: &[(Bipartition, u32)], target: &Bipartition) -> u32 {
    list.iter().find(|(b, _)| b == target).map_or(0, |(_, m)| *m)
}

/// Checks one (x, y) pair of unsigned labels against the oracle.
pub fn check_pair(ty: ClassicalType, x: &(Vec<u32>, Vec<u32>), y: &(Vec<u32>, Vec<u32>)) -> Result<(), String> {
    let xs = Bipartition::with_all_signs(ty, x.0.clone(), x.1.clone());
    let ys = Bipartition::with_all_signs(ty, y.0.clone(), y.1.clone());
    let mut total = 0;
    let mut seen = Vec::new();
    for xi in &xs {
        let ind = induce_one_box(xi);
        for yi in &ys {
            let up = mult(&ind, yi);
            let down = mult(&restrict_one_box(yi), xi);
            if up != down {
                return Err(format!("adjointness fails for {xi} -> {yi}"));
            }
            seen.push(up);
            total += i64::from(up);
        }
    }
    if seen.iter().any(|&m| m != seen[0]) {
        return Err(format!("signed multiplicities differ for {x:?} -> {y:?}: {seen:?}"));
    }
    let expected = oracle_multiplicity(ty, (&x.0, &x.1), (&y.0, &y.1));
    if total != expected {
        return Err(format!("multiplicity of {y:?} in induction of {x:?} ({ty:?}) is {total}, oracle gives {expected}"));
    }
    Ok(())
}

/// A random pair of labels of sizes n-1 and n for some n in 2..=max_size.
pub fn labelled_pair(ty: ClassicalType, max_size: u32) -> impl Strategy<Value = ((Vec<u32>, Vec<u32>), (Vec<u32>, Vec<u32>))> {
    (2..=max_size).prop_flat_map(move |n| {
        let xs = pairs(ty, n - 1);
        let ys = pairs(ty, n);
        (prop::sample::select(xs), prop::sample::select(ys))
    })
}
