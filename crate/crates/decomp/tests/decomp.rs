use dmw_chardata::{load_named, load_table, shipped_names, BlockTable};
use dmw_decomp::{
    brauer_degrees, brauer_expansion, check_unitriangular, integer_matrix, permutation_identical, pim_coordinates,
    positivity_domain, specialize, verify, DecompError, DegreeSamples, ProjectiveVector, VerifyOptions,
};
use dmw_paramexpr::{parse_expr, Assignment, ParamExpr};
use dmw_qpoly::{rat, BigRational, CycloPoly, DensePoly};

fn assign(pairs: &[(&str, i64)]) -> Assignment {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

fn exprs(texts: &[&str]) -> Vec<ParamExpr> {
    texts.iter().map(|t| parse_expr(t).unwrap()).collect()
}

fn ints(v: &[i64]) -> Vec<ParamExpr> {
    v.iter().map(|&x| ParamExpr::constant(x)).collect()
}

/// A 3x3 table in type C2-free form: identity matrix with the given degrees.
fn identity_table(n: usize) -> BlockTable {
    let chars: Vec<String> = (0..n)
        .map(|i| format!(r#"{{"name":"r{i}","degree":"q^{i} P4","series":"ps"}}"#))
        .collect();
    let cols: Vec<String> = (0..n)
        .map(|j| {
            let e: Vec<String> = (0..n).map(|i| if i == j { "1".into() } else { "0".into() }).collect();
            format!(r#"{{"series":"ps","entries":[{}]}}"#, e.join(","))
        })
        .collect();
    let text = format!(
        r#"{{"group":"F4","order":"q^24 P1^4 P2^4 P3^2 P4^2 P6^2 P8 P12","block":"id","ell_condition":"",
        "characters":[{}],"columns":[{}]}}"#,
        chars.join(","),
        cols.join(",")
    );
    load_table(&text, "identity").unwrap()
}

/// Independent oracle: `D x` evaluated at `q0` with exact rationals.
fn apply_matrix_at(m: &[Vec<i64>], x: &[DensePoly], q0: i64) -> Vec<BigRational> {
    m.iter()
        .map(|row| row.iter().zip(x).map(|(&c, p)| rat(c) * p.eval_int(q0)).sum())
        .collect()
}

#[test]
fn identity_is_unitriangular_and_degrees_are_unchanged() {
    let t = identity_table(3);
    assert!(check_unitriangular(&t).is_none());
    let x = brauer_degrees(&t, &Assignment::new()).unwrap();
    for (xi, r) in x.iter().zip(&t.rows) {
        assert_eq!(xi, &r.degree.as_ref().unwrap().expand());
    }
    let v = ints(&[3, -1, 4]);
    assert_eq!(brauer_expansion(&t, &v).unwrap(), v);
    assert_eq!(pim_coordinates(&t, &v).unwrap(), v);
    assert_eq!(positivity_domain(&t, &[2, 3]).unwrap(), vec![Assignment::new()]);
}

#[test]
fn shipped_tables_are_unitriangular_at_their_witness() {
    for name in shipped_names() {
        let t = load_named(&name).unwrap();
        let s = t.witness.clone().unwrap_or_default();
        assert_eq!(check_unitriangular(&specialize(&t, &s)), None, "{name}");
    }
    let f4 = load_named("f4_principal").unwrap();
    assert_eq!(check_unitriangular(&f4), None);
}

#[test]
fn d4_second_brauer_degree() {
    let t = load_named("d4_principal").unwrap();
    let x = brauer_degrees(&t, &Assignment::new()).unwrap();
    let expected = &CycloPoly::new(rat(1), 2, [(3, 1), (6, 1)]).expand() - &DensePoly::one();
    assert_eq!(x[1], expected);
    assert_eq!(x[1].eval_int(2), rat(83));
}

#[test]
fn brauer_degrees_solve_the_system_on_every_table_with_degrees() {
    for name in shipped_names() {
        let t = load_named(&name).unwrap();
        if t.rows.iter().any(|r| r.degree.is_none()) {
            continue;
        }
        let s = t.witness.clone().unwrap_or_default();
        let m = integer_matrix(&t, &s).unwrap();
        let x = brauer_degrees(&t, &s).unwrap();
        for q0 in [2, 3, 7] {
            let lhs = apply_matrix_at(&m, &x, q0);
            let rhs: Vec<BigRational> = t.rows.iter().map(|r| r.degree.as_ref().unwrap().eval_int(q0)).collect();
            assert_eq!(lhs, rhs, "{name} at q={q0}");
        }
        let samples = DegreeSamples::new(&t, &[2, 3, 7]).unwrap();
        let numeric = samples.brauer_values(&m).unwrap();
        for (k, q0) in [2, 3, 7].into_iter().enumerate() {
            let from_poly: Vec<BigRational> = x.iter().map(|p| p.eval_int(q0)).collect();
            assert_eq!(numeric[k], from_poly, "{name} at q={q0}");
        }
    }
}

#[test]
fn missing_degrees_are_reported() {
    let t = load_named("e8_block1").unwrap();
    assert!(matches!(brauer_degrees(&t, &Assignment::new()), Err(DecompError::MissingDegree { row: 1, .. })));
}

#[test]
fn d7_second_block_tenth_degree_is_negative_for_a_one() {
    let t = load_named("d7_block2").unwrap().with_scenario("degree").unwrap();
    let x = brauer_degrees(&t, &assign(&[("a", 1)])).unwrap();
    assert!(x[9].eval_int(2) < rat(0), "{}", x[9].eval_int(2));
    let m = integer_matrix(&t, &assign(&[("a", 1)])).unwrap();
    let lhs = apply_matrix_at(&m, &x, 5);
    let rhs: Vec<BigRational> = t.rows.iter().map(|r| r.degree.as_ref().unwrap().eval_int(5)).collect();
    assert_eq!(lhs, rhs);
    let y = brauer_degrees(&t, &assign(&[("a", 2)])).unwrap();
    assert!(y.iter().all(|p| p.eval_int(2) > rat(0)));
}

#[test]
fn positivity_domain_fixes_a_on_the_d7_second_block() {
    let t = load_named("d7_block2").unwrap().with_scenario("degree").unwrap();
    assert_eq!(positivity_domain(&t, &[2, 3, 5]).unwrap(), vec![assign(&[("a", 2)])]);
}

#[test]
fn positivity_domain_on_d4_contains_two() {
    let t = load_named("d4_principal").unwrap().with_scenario("coxeter").unwrap();
    let dom = positivity_domain(&t, &[2, 3, 5, 7]).unwrap();
    assert!(dom.contains(&assign(&[("a", 2)])));
}

#[test]
fn d4_coxeter_coordinates() {
    let t = load_named("d4_principal").unwrap().with_scenario("coxeter").unwrap();
    let v = &t.virtual_chars["coxeter"];
    let m = pim_coordinates(&t, &ints(&v.entries)).unwrap();
    assert_eq!(m, exprs(&["1", "-1", "-1", "-1", "2", "1", "-1", "-1", "-1", "2-a"]));
}

#[test]
fn coordinates_of_a_column_are_a_basis_vector() {
    for name in ["d4_principal", "f4_principal", "2e6_principal", "d7_principal"] {
        let t = load_named(name).unwrap();
        for j in 0..t.len() {
            let m = pim_coordinates(&t, &t.columns[j].entries).unwrap();
            for (i, e) in m.iter().enumerate() {
                assert_eq!(e, &ParamExpr::constant(i64::from(i == j)), "{name} column {j}");
            }
        }
    }
}

#[test]
fn coordinates_reproduce_the_vector() {
    let t = load_named("f4_principal").unwrap().with_scenario("coxeter").unwrap();
    let v: Vec<ParamExpr> = (0..t.len()).map(|i| ParamExpr::constant(i as i64 % 3 - 1)).collect();
    let m = pim_coordinates(&t, &v).unwrap();
    for i in 0..t.len() {
        let mut acc = ParamExpr::zero();
        for (j, mj) in m.iter().enumerate() {
            acc = &acc + &(t.entry(i, j) * mj);
        }
        assert_eq!(acc, v[i], "row {i}");
    }
}

#[test]
fn brauer_expansion_is_the_transpose_product() {
    let t = load_named("c4_principal").unwrap().with_scenario("reduction").unwrap();
    let v: Vec<ParamExpr> = (0..t.len()).map(|i| ParamExpr::constant(1 + i as i64)).collect();
    let e = brauer_expansion(&t, &v).unwrap();
    for j in 0..t.len() {
        let mut acc = ParamExpr::zero();
        for i in 0..t.len() {
            acc = &acc + &(t.entry(i, j) * &v[i]);
        }
        assert_eq!(e[j], acc);
    }
    assert!(matches!(brauer_expansion(&t, &v[1..]), Err(DecompError::Length { .. })));
}

#[test]
fn projective_vector_arithmetic() {
    let a = ProjectiveVector::from_ints(&[1, 2, 0]);
    let b = ProjectiveVector::from_ints(&[0, 1, 1]);
    assert_eq!((&(&a + &b) - &b), a);
    assert_eq!((&a - &a).as_ints(), Some(vec![0, 0, 0]));
    assert!((&a - &a).is_zero());
}

fn check_witness(a: &str, b: &str) {
    let t1 = load_named(a).unwrap();
    let t2 = load_named(b).unwrap();
    let w = permutation_identical(&t1, &t2).unwrap_or_else(|| panic!("{a} ~ {b}"));
    let n = t1.len();
    for i in 0..n {
        for j in 0..n {
            assert_eq!(t1.entry(i, j), t2.entry(w.rows[i], w.cols[j]));
        }
    }
    for j in 0..n {
        assert_eq!(t1.columns[j].series, t2.columns[w.cols[j]].series);
    }
}

#[test]
fn identical_block_pairs() {
    check_witness("e6_principal", "e8_block3");
    check_witness("e7_block2", "e7_block3");
    check_witness("e7_block1", "e8_block1");
    check_witness("e7_block4", "e8_block4");
    check_witness("d6_block1", "d8_block1");
    check_witness("d6_block3", "d8_block4");
}

#[test]
fn non_identical_pairs() {
    let d4 = load_named("d4_principal").unwrap();
    let d5 = load_named("d5_principal").unwrap();
    assert!(permutation_identical(&d4, &d5).is_none());
    let a = load_named("d6_block1").unwrap();
    let b = load_named("d6_block3").unwrap();
    assert!(permutation_identical(&a, &b).is_none());
    assert!(permutation_identical(&a, &a).is_some());
}

#[test]
fn verify_report_lines() {
    let t = load_named("d4_principal").unwrap();
    let report = verify(&t, &VerifyOptions::default());
    assert!(report.iter().all(|c| c.pass), "{report:?}");
    assert_eq!(report[0].to_string(), "CHECK shape PASS 10 rows, 10 columns");
    assert!(report.iter().any(|c| c.to_string() == "CHECK census PASS ps:5 A3:2 D3:1 D4:1 .1^4:1"));
}

#[test]
fn verify_rejects_a_one_on_the_d7_second_block() {
    let t = load_named("d7_block2").unwrap().with_scenario("degree").unwrap();
    let opts = VerifyOptions { assignment: Some(assign(&[("a", 1)])), ..Default::default() };
    let failed: Vec<String> = verify(&t, &opts).into_iter().filter(|c| !c.pass).map(|c| c.name).collect();
    assert!(failed.contains(&"brauer_degrees".to_string()), "{failed:?}");
    let opts = VerifyOptions { assignment: Some(assign(&[("a", 2)])), ..Default::default() };
    assert!(verify(&t, &opts).iter().all(|c| c.pass));
}

#[test]
fn every_table_with_degrees_verifies() {
    for name in shipped_names() {
        let t = load_named(&name).unwrap();
        let report = verify(&t, &VerifyOptions::default());
        let complete = t.rows.iter().all(|r| r.degree.is_some());
        assert_eq!(report.iter().all(|c| c.pass), complete, "{name}: {report:?}");
    }
}
