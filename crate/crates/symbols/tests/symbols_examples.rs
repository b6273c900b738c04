//! Label parsing, degrees, a-values and branching on documented cases.

use dmw_qpoly::CycloPoly;
use dmw_symbols::{
    format_parts, induce_one_box, parse_parts, restrict_one_box, Bipartition, ClassicalGroup, ClassicalType,
    SeriesLabel, Sign, Symbol, SymbolError,
};
use proptest::prelude::*;

fn d(label: &str, rank: u32) -> Bipartition {
    Bipartition::parse(label, ClassicalType::D, rank).unwrap()
}

fn poly(text: &str) -> CycloPoly {
    text.parse().unwrap()
}

fn degree(group: &str, label: &str) -> String {
    let g = ClassicalGroup::parse(group).unwrap();
    g.parse_label(label).unwrap().generic_degree().unwrap().to_string()
}

#[test]
fn parse_labels() {
    let b = d(".4", 4);
    assert_eq!((b.alpha(), b.beta()), (&[][..], &[4][..]));
    let plus = d("2+", 4);
    assert_eq!((plus.alpha(), plus.beta(), plus.sign()), (&[2][..], &[2][..], Some(Sign::Plus)));
    let b = d("1.21", 4);
    assert_eq!((b.alpha(), b.beta()), (&[1][..], &[2, 1][..]));
    assert_eq!(d("21.1", 4), b);
    assert_eq!(d(".1^4", 4).beta(), &[1, 1, 1, 1]);
    assert_eq!(d("1^2-", 4).to_string(), "1^2-");
    assert!(matches!(Bipartition::parse(".4", ClassicalType::D, 5), Err(SymbolError::RankMismatch { .. })));
    assert!(matches!(Bipartition::parse("2", ClassicalType::D, 4), Err(SymbolError::Malformed { .. })));
    assert!(matches!(Bipartition::parse("2.2", ClassicalType::D, 4), Err(SymbolError::Malformed { .. })));
    assert!(matches!(Bipartition::parse("1.12", ClassicalType::D, 4), Err(SymbolError::Malformed { .. })));
    assert_eq!(Bipartition::parse("31.", ClassicalType::TwistedD, 5).unwrap().rank(), 5);
}

#[test]
fn part_notation_round_trips() {
    assert_eq!(parse_parts("2^21").unwrap(), vec![2, 2, 1]);
    assert_eq!(parse_parts("").unwrap(), Vec::<u32>::new());
    assert_eq!(format_parts(&[2, 2, 1, 1, 1]), "2^21^3");
    assert_eq!(format_parts(&[12, 1]), "{12}1");
    assert_eq!(parse_parts("{12}1").unwrap(), vec![12, 1]);
}

#[test]
fn generic_degrees_of_documented_labels() {
    assert_eq!(d(".4", 4).generic_degree().unwrap(), CycloPoly::one());
    assert_eq!(d(".31", 4).generic_degree().unwrap(), poly("q^2 P3 P6"));
    assert_eq!(d(".1^4", 4).generic_degree().unwrap(), poly("q^12"));
    assert_eq!(d("1.21", 4).generic_degree().unwrap(), poly("1/2 q^3 P2^4 P6"));
    assert_eq!(d("2-", 4).generic_degree().unwrap(), poly("q^2 P3 P6"));
    assert_eq!(degree("2D5", "31."), "q P3 P10");
    assert_eq!(degree("D4", "D4"), "1/2 q^3 P1^4 P3");
    assert_eq!(degree("D5", "D4:2"), "1/2 q^3 P1^4 P3 P5");
    assert_eq!(degree("D5", "D4:1^2"), "1/2 q^7 P1^4 P3 P5");
    assert_eq!(degree("D6", "D4:1.1"), "1/2 q^7 P1^4 P3^2 P5 P8");
    assert_eq!(degree("C4", ".4"), "1/2 q P6 P8");
    assert_eq!(degree("C4", "C2:1.1"), "1/2 q^4 P1^2 P2^2 P3 P6");
}

#[test]
fn a_values() {
    assert_eq!(d(".4", 4).a_value().unwrap(), 0);
    assert_eq!(d("1.21", 4).a_value().unwrap(), 3);
    assert_eq!(d(".1^4", 4).a_value().unwrap(), 12);
}

fn labels(list: Vec<(Bipartition, u32)>) -> Vec<(String, u32)> {
    let mut v: Vec<_> = list.into_iter().map(|(b, m)| (b.to_string(), m)).collect();
    v.sort();
    v
}

#[test]
fn one_box_branching() {
    assert_eq!(
        labels(induce_one_box(&d(".3", 3))),
        vec![(".31".into(), 1), (".4".into(), 1), ("1.3".into(), 1)]
    );
    assert_eq!(labels(restrict_one_box(&d(".4", 4))), vec![(".3".into(), 1)]);
    assert_eq!(
        labels(restrict_one_box(&d("1.21", 4))),
        vec![(".21".into(), 1), ("1.1^2".into(), 1), ("1.2".into(), 1)]
    );
    // A non-degenerate label reaching a degenerate pair meets both signs once.
    assert_eq!(
        labels(induce_one_box(&d("1.2", 3))),
        vec![("1.21".into(), 1), ("1.3".into(), 1), ("1^2.2".into(), 1), ("2+".into(), 1), ("2-".into(), 1)]
    );
    assert_eq!(labels(restrict_one_box(&d("2+", 4))), vec![("1.2".into(), 1)]);
}

#[test]
fn group_orders() {
    assert_eq!(ClassicalGroup::parse("D4").unwrap().order(), poly("q^12 P1^4 P2^4 P3 P4^2 P6"));
    assert_eq!(ClassicalGroup::parse("C2").unwrap().order(), poly("q^4 P1^2 P2^2 P4"));
    assert_eq!(ClassicalGroup::parse("2D5").unwrap().order().phi_valuation(4).unwrap(), 2);
    assert!(ClassicalGroup::parse("E6").is_err());
}

#[test]
fn series_labels() {
    let g = ClassicalGroup::parse("D6").unwrap();
    assert!(matches!(g.parse_label("D4:.1^2").unwrap(), SeriesLabel::Cuspidal { .. }));
    assert!(g.parse_label("D4:3").is_err());
    assert!(matches!(g.parse_label("D4:1.1^2"), Err(SymbolError::RankMismatch { .. })));
    assert!(g.parse_label("X:1.1").is_err());
}

#[test]
fn principal_series_counts() {
    // Unipotent principal-series characters: 13 for D4, 5 for D3, 10 for C2-chain rank 3.
    assert_eq!(ClassicalGroup::parse("D4").unwrap().principal_series().len(), 13);
    assert_eq!(ClassicalGroup::parse("D3").unwrap().principal_series().len(), 5);
    assert_eq!(ClassicalGroup::parse("C3").unwrap().principal_series().len(), 10);
}

fn partition_strategy(max: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1u32..=max, 0..4).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn degree_is_independent_of_symbol_shift(a in partition_strategy(4), b in partition_strategy(4), defect in 0u32..5, pad in 0u32..3) {
        let s = Symbol::from_parts(&a, &b, defect);
        let m = a.len().max(b.len()) as u32 + pad;
        let beta_set = |p: &[u32], len: u32| -> Vec<u32> {
            (0..len).map(|i| p.get((len - 1 - i) as usize).copied().unwrap_or(0) + i).collect()
        };
        let padded = Symbol::new(beta_set(&a, m + defect), beta_set(&b, m)).unwrap();
        prop_assert_eq!(&padded, &s);
        prop_assert_eq!(s.parts(), (a.clone(), b.clone()));
        let deg = s.degree().unwrap();
        for q in [2i64, 3, 5] {
            let v = deg.eval_int(q);
            prop_assert!(v.is_integer() && v > dmw_qpoly::rat(0), "{} at q={} is {}", s, q, v);
        }
    }

    #[test]
    fn labels_print_and_parse_back(a in partition_strategy(5), b in partition_strategy(5)) {
        for ty in [ClassicalType::D, ClassicalType::BC, ClassicalType::TwistedD] {
            for x in Bipartition::with_all_signs(ty, a.clone(), b.clone()) {
                let back = Bipartition::parse_any_rank(&x.to_string(), ty).unwrap();
                prop_assert_eq!(&back, &x);
            }
        }
    }
}
