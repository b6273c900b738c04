//! Branching checked against characters of the hyperoctahedral groups
//! computed from scratch.

#[path = "support/weyl.rs"]
mod weyl;

use dmw_qpoly::{BigRational, CycloPoly};
use dmw_symbols::{induce_one_box, partitions, ClassicalGroup, ClassicalType};
use proptest::prelude::*;
use weyl::{check_pair, chi_b, factorial, inner, labelled_pair, mn, pairs};

fn check_rank(ty: ClassicalType, size: u32) {
    for x in pairs(ty, size - 1) {
        for y in pairs(ty, size) {
            check_pair(ty, &x, &y).unwrap();
        }
    }
}

#[test]
fn murnaghan_nakayama_sanity() {
    assert_eq!(mn(&[2, 1], &[1, 1, 1]), 2);
    assert_eq!(mn(&[2, 1], &[3]), -1);
    assert_eq!(mn(&[3, 3], &[2, 2, 2]), -3);
    for n in 1..=6 {
        let total: i64 = partitions(n).iter().map(|l| mn(l, &vec![1; n as usize]).pow(2)).sum();
        assert_eq!(total, factorial(n));
    }
}

#[test]
fn hyperoctahedral_characters_are_orthonormal() {
    for n in 1..=5 {
        let labels = pairs(ClassicalType::BC, n);
        for a in &labels {
            for b in &labels {
                let ip = inner(n, false, |c| chi_b(&a.0, &a.1, c), |c| chi_b(&b.0, &b.1, c));
                assert_eq!(ip, i64::from(a == b));
            }
        }
    }
}

#[test]
fn type_d_branching_matches_oracle_up_to_rank_6() {
    for n in 2..=6 {
        check_rank(ClassicalType::D, n);
    }
}

#[test]
fn type_bc_branching_matches_oracle_up_to_rank_6() {
    for n in 1..=6 {
        check_rank(ClassicalType::BC, n);
    }
}

#[test]
fn twisted_d_branching_matches_oracle_up_to_rank_6() {
    // Labels of 2D_n have n-1 boxes.
    for n in 3..=6 {
        check_rank(ClassicalType::TwistedD, n - 1);
    }
}

/// `|G|_{p'} / (|L|_{p'})` for the Levi `X_{n-1} × GL_1`.
fn levi_index(group: ClassicalGroup) -> CycloPoly {
    let below = group.levi_below().expect("rank above the chain start");
    let strip = |g: ClassicalGroup| {
        let o = g.order();
        o.checked_div(&CycloPoly::q_pow(o.qexp())).unwrap()
    };
    strip(group).checked_div(&(strip(below) * CycloPoly::phi(1))).unwrap()
}

#[test]
fn induced_degree_sums_match_levi_index() {
    for (ty, ranks) in [(ClassicalType::D, 3..=6), (ClassicalType::BC, 2..=6), (ClassicalType::TwistedD, 3..=6)] {
        for n in ranks {
            let g = ClassicalGroup::new(ty, n);
            let l = g.levi_below().unwrap();
            let index = levi_index(g);
            for x in l.principal_series() {
                for q in [2i64, 3] {
                    let lhs: BigRational = induce_one_box(&x)
                        .iter()
                        .map(|(y, m)| y.generic_degree().unwrap().eval_int(q) * BigRational::from_integer((*m).into()))
                        .sum();
                    let rhs = x.generic_degree().unwrap().eval_int(q) * index.eval_int(q);
                    assert_eq!(lhs, rhs, "{g}: induction of {x} at q={q}");
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn random_type_d_pairs_are_adjoint((x, y) in labelled_pair(ClassicalType::D, 6)) {
        prop_assert_eq!(check_pair(ClassicalType::D, &x, &y), Ok(()));
    }

    #[test]
    fn random_type_bc_pairs_are_adjoint((x, y) in labelled_pair(ClassicalType::BC, 6)) {
        prop_assert_eq!(check_pair(ClassicalType::BC, &x, &y), Ok(()));
    }
}
