//! Cyclotomic polynomials and small number-theoretic helpers.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num::{BigRational, One};

use crate::dense::DensePoly;

fn cache() -> &'static Mutex<HashMap<u32, Arc<DensePoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<DensePoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|e| n % e == 0).collect()
}

/// Euler's totient, the degree of the `n`-th cyclotomic polynomial.
pub fn totient(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// The `d`-th cyclotomic polynomial `Φ_d`, obtained by dividing `q^d - 1`
/// exactly by `Φ_e` for every proper divisor `e` of `d`.
///
/// Panics if `d == 0`.
pub fn cyclotomic(d: u32) -> DensePoly {
    cyclotomic_shared(d).as_ref().clone()
}

pub(crate) fn cyclotomic_shared(d: u32) -> Arc<DensePoly> {
    assert!(d >= 1, "cyclotomic index must be positive");
    if let Some(p) = cache().lock().expect("cyclotomic cache").get(&d) {
        return Arc::clone(p);
    }
    let mut p = &DensePoly::monomial(BigRational::one(), d as usize) - &DensePoly::one();
    for e in divisors(d).into_iter().filter(|&e| e < d) {
        p = p
            .exact_div(&cyclotomic_shared(e))
            .expect("q^d - 1 is divisible by every Φ_e with e | d");
    }
    let p = Arc::new(p);
    cache()
        .lock()
        .expect("cyclotomic cache")
        .insert(d, Arc::clone(&p));
    p
}

/// Indices `d` with `Φ_d` dividing `q^k - 1`, i.e. the divisors of `k`.
pub fn factors_of_q_pow_minus_one(k: u32) -> Vec<u32> {
    divisors(k)
}

/// Indices `d` with `Φ_d` dividing `q^k + 1`: divisors of `2k` that do not divide `k`.
pub fn factors_of_q_pow_plus_one(k: u32) -> Vec<u32> {
    divisors(2 * k).into_iter().filter(|d| k % d != 0).collect()
}
