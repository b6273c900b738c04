//! Checks against independent integer-polynomial oracles and hand-computed values.

use dmw_qpoly::{cyclotomic, rat, BigRational, CycloPoly, DensePoly, QpolyError};

/// Integer polynomial product, lowest degree first.
fn int_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact integer division by a monic polynomial; panics on a nonzero remainder.
fn int_div_monic(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let mut quot = vec![0; a.len() - db];
    for k in (0..quot.len()).rev() {
        let c = rem[k + db];
        quot[k] = c;
        for (i, bc) in b.iter().enumerate() {
            rem[k + i] -= c * bc;
        }
    }
    assert!(rem.iter().all(|&r| r == 0), "oracle division not exact");
    quot
}

fn q_pow_minus_one(k: usize) -> Vec<i64> {
    let mut v = vec![0; k + 1];
    v[0] = -1;
    v[k] = 1;
    v
}

fn mobius(n: usize) -> i32 {
    let mut m = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

/// Φ_n via the Möbius product ∏_{d | n} (q^d - 1)^{μ(n/d)}.
fn oracle_cyclotomic(n: usize) -> Vec<i64> {
    let mut num = vec![1];
    let mut den = vec![1];
    for d in (1..=n).filter(|d| n % d == 0) {
        match mobius(n / d) {
            1 => num = int_mul(&num, &q_pow_minus_one(d)),
            -1 => den = int_mul(&den, &q_pow_minus_one(d)),
            _ => {}
        }
    }
    // The denominator has leading coefficient 1 and constant ±1; normalise sign.
    let sign = *den.last().unwrap();
    let den: Vec<i64> = den.iter().map(|c| c * sign).collect();
    let mut q = int_div_monic(&num, &den);
    if sign < 0 {
        q.iter_mut().for_each(|c| *c = -*c);
    }
    q
}

fn dense(coeffs: &[i64]) -> DensePoly {
    DensePoly::from_ints(coeffs)
}

fn parse(s: &str) -> CycloPoly {
    s.parse().expect("valid polynomial")
}

#[test]
fn cyclotomic_small_cases() {
    assert_eq!(cyclotomic(1), dense(&[-1, 1]));
    assert_eq!(cyclotomic(4), dense(&[1, 0, 1]));
    assert_eq!(cyclotomic(6), dense(&[1, -1, 1]));
}

#[test]
fn cyclotomic_matches_mobius_oracle_up_to_105() {
    for n in 1..=105 {
        assert_eq!(cyclotomic(n as u32), dense(&oracle_cyclotomic(n)), "Φ_{n}");
    }
}

#[test]
fn factors_of_q_pow_minus_one_expand_exactly() {
    for d in 1..=64u32 {
        let mut v = vec![0i64; d as usize + 1];
        v[0] = -1;
        v[d as usize] = 1;
        assert_eq!(CycloPoly::q_pow_minus_one(d).expand(), dense(&v), "q^{d}-1");
        v[0] = 1;
        assert_eq!(CycloPoly::q_pow_plus_one(d).expand(), dense(&v), "q^{d}+1");
    }
}

#[test]
fn evaluation_examples() {
    assert_eq!(parse("1/2 q^3 P2^4 P6").eval_int(2), rat(972));
    assert_eq!(parse("P1 P2 P4").expand(), dense(&[-1, 0, 0, 0, 1]));
}

#[test]
fn sum_that_refactors() {
    let sum = CycloPoly::q_pow(6).add(&CycloPoly::from_int(-1)).unwrap();
    assert_eq!(sum, parse("P1 P2 P3 P6"));
}

#[test]
fn sum_that_does_not_refactor_carries_the_dense_value() {
    // q^2 Φ3 Φ6 - 1 = q^6 + q^4 + q^2 - 1 takes the value 2 at q = ±1, and
    // its value 83 at q = 2 is prime while no Φ_d with d ≤ 12 takes the value 83 there.
    let err = parse("q^2 P3 P6").add(&CycloPoly::from_int(-1)).unwrap_err();
    assert_eq!(err.0, dense(&[-1, 0, 1, 0, 1, 0, 1]));
    assert_eq!(err.0.eval_int(2), rat(83));
}

#[test]
fn valuations() {
    assert_eq!(parse("q^2 P3 P6").valuation_q(), Ok(2));
    assert_eq!(parse("1/2 q^3 P1^4 P3").valuation_q(), Ok(3));
    assert_eq!(CycloPoly::one().valuation_q(), Ok(0));
    assert_eq!(CycloPoly::zero().valuation_q(), Err(QpolyError::ZeroPolynomial));
    assert_eq!(CycloPoly::q_pow(12).phi_valuation(4), Ok(0));
    assert_eq!(parse("P4^3").phi_valuation(4), Ok(3));
}

#[test]
fn order_of_so8_plus_by_brute_force_division() {
    // q^12 (q^4 - 1) (q^2 - 1) (q^4 - 1) (q^6 - 1), expanded with integers and
    // then stripped of Φ_d factors one at a time by the oracle.
    let mut p = vec![1];
    for k in [4, 2, 4, 6] {
        p = int_mul(&p, &q_pow_minus_one(k));
    }
    let mut exps = Vec::new();
    for d in 1..=12 {
        let phi = oracle_cyclotomic(d);
        let mut m = 0;
        loop {
            if p.len() < phi.len() {
                break;
            }
            let db = phi.len() - 1;
            let mut rem = p.clone();
            let mut quot = vec![0; p.len() - db];
            for k in (0..quot.len()).rev() {
                let c = rem[k + db];
                quot[k] = c;
                for (i, bc) in phi.iter().enumerate() {
                    rem[k + i] -= c * bc;
                }
            }
            if rem.iter().any(|&r| r != 0) {
                break;
            }
            p = quot;
            m += 1;
        }
        if m > 0 {
            exps.push((d as u32, m));
        }
    }
    let order = CycloPoly::new(BigRational::from_integer(p[0].into()), 12, exps);
    let built = &CycloPoly::q_pow(12)
        * &(&(&CycloPoly::q_pow_minus_one(4) * &CycloPoly::q_pow_minus_one(2))
            * &(&CycloPoly::q_pow_minus_one(4) * &CycloPoly::q_pow_minus_one(6)));
    assert_eq!(order, built);
    assert_eq!(order, parse("q^12 P1^4 P2^4 P3 P4^2 P6"));
    assert_eq!(order.phi_valuation(4), Ok(2));
}

#[test]
fn text_round_trip_and_errors() {
    for s in ["1/2 q^3 P1^4 P3", "q^2 P3 P6", "1", "-3/4 q P12^2", "0", "q"] {
        assert_eq!(parse(s).to_string(), s);
    }
    assert_eq!(parse("P3 q^2 P6").to_string(), "q^2 P3 P6");
    match "q^2 Px".parse::<CycloPoly>() {
        Err(QpolyError::Parse { offset, .. }) => assert_eq!(offset, 4),
        other => panic!("unexpected {other:?}"),
    }
    assert!("".parse::<CycloPoly>().is_err());
    assert!("P0".parse::<CycloPoly>().is_err());
    assert!("1/0".parse::<CycloPoly>().is_err());
}

#[test]
fn checked_division() {
    let a = parse("1/2 q^3 P1^4 P3");
    let b = parse("q P1^2");
    assert_eq!(a.checked_div(&b).unwrap(), parse("1/2 q^2 P1^2 P3"));
    assert!(b.checked_div(&a).is_err());
}
