//! Polynomials in `q` kept in the factored form `scalar · q^k · ∏ Φ_d^{m_d}`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::cyclotomic::{
    cyclotomic_shared, factors_of_q_pow_minus_one, factors_of_q_pow_plus_one, totient,
};
use crate::dense::DensePoly;
use crate::QpolyError;

/// An exact product `scalar · q^qexp · ∏ Φ_d^{m_d}`.
///
/// The representation is canonical: the zero polynomial has scalar 0, no
/// q-power and no factors, and the factor map never stores a zero exponent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycloPoly {
    scalar: BigRational,
    qexp: u32,
    factors: BTreeMap<u32, u32>,
}

/// A sum that is not a rational multiple of `q^k · ∏ Φ_d^{m_d}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonFactorable(pub DensePoly);

impl fmt::Display for NonFactorable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not a cyclotomic product: {}", self.0)
    }
}

impl std::error::Error for NonFactorable {}

impl CycloPoly {
    /// Builds a canonical value from its parts. Zero exponents are dropped.
    pub fn new(scalar: BigRational, qexp: u32, factors: impl IntoIterator<Item = (u32, u32)>) -> Self {
        if scalar.is_zero() {
            return Self::zero();
        }
        let mut map = BTreeMap::new();
        for (d, m) in factors {
            assert!(d >= 1, "cyclotomic index must be positive");
            if m > 0 {
                *map.entry(d).or_insert(0) += m;
            }
        }
        Self { scalar, qexp, factors: map }
    }

    pub fn zero() -> Self {
        Self { scalar: BigRational::zero(), qexp: 0, factors: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::new(BigRational::from_integer(c.into()), 0, [])
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::new(c, 0, [])
    }

    /// `q^k`.
    pub fn q_pow(k: u32) -> Self {
        Self::new(BigRational::one(), k, [])
    }

    /// `Φ_d`.
    pub fn phi(d: u32) -> Self {
        Self::new(BigRational::one(), 0, [(d, 1)])
    }

    /// `q^k - 1` for `k ≥ 1`.
    pub fn q_pow_minus_one(k: u32) -> Self {
        assert!(k >= 1, "q^0 - 1 is zero");
        Self::new(BigRational::one(), 0, factors_of_q_pow_minus_one(k).into_iter().map(|d| (d, 1)))
    }

    /// `q^k + 1`; for `k = 0` this is the constant 2.
    pub fn q_pow_plus_one(k: u32) -> Self {
        if k == 0 {
            return Self::from_int(2);
        }
        Self::new(BigRational::one(), 0, factors_of_q_pow_plus_one(k).into_iter().map(|d| (d, 1)))
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero()
    }

    pub fn scalar(&self) -> &BigRational {
        &self.scalar
    }

    pub fn qexp(&self) -> u32 {
        self.qexp
    }

    /// The map `d → m_d`.
    pub fn factors(&self) -> &BTreeMap<u32, u32> {
        &self.factors
    }

    /// Total degree in `q`; zero for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.qexp + self.factors.iter().map(|(&d, &m)| totient(d) * m).sum::<u32>()
    }

    /// Order of vanishing at `q = 0`.
    pub fn valuation_q(&self) -> Result<u32, QpolyError> {
        if self.is_zero() {
            return Err(QpolyError::ZeroPolynomial);
        }
        Ok(self.qexp)
    }

    /// Exponent of `Φ_d`.
    pub fn phi_valuation(&self, d: u32) -> Result<u32, QpolyError> {
        if self.is_zero() {
            return Err(QpolyError::ZeroPolynomial);
        }
        Ok(self.factors.get(&d).copied().unwrap_or(0))
    }

    /// Multiplies the scalar by `c`.
    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(&self.scalar * c, self.qexp, self.factors.clone())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigRational::one())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exact quotient `self / other`, failing when a q-power or cyclotomic
    /// exponent would become negative.
    pub fn checked_div(&self, other: &CycloPoly) -> Result<Self, QpolyError> {
        if other.is_zero() {
            return Err(QpolyError::ZeroPolynomial);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let not_divisible = || QpolyError::NotDivisible {
            numerator: self.to_string(),
            denominator: other.to_string(),
        };
        let qexp = self.qexp.checked_sub(other.qexp).ok_or_else(not_divisible)?;
        let mut factors = self.factors.clone();
        for (&d, &m) in &other.factors {
            let have = factors.get(&d).copied().unwrap_or(0);
            let left = have.checked_sub(m).ok_or_else(not_divisible)?;
            factors.insert(d, left);
        }
        Ok(Self::new(&self.scalar / &other.scalar, qexp, factors))
    }

    /// Dense coefficient form.
    pub fn expand(&self) -> DensePoly {
        if self.is_zero() {
            return DensePoly::zero();
        }
        let mut p = DensePoly::monomial(self.scalar.clone(), self.qexp as usize);
        for (&d, &m) in &self.factors {
            let phi = cyclotomic_shared(d);
            for _ in 0..m {
                p = &p * &phi;
            }
        }
        p
    }

    /// Exact value at `q = q0`.
    pub fn eval(&self, q0: &BigRational) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        let mut v = self.scalar.clone() * num::pow(q0.clone(), self.qexp as usize);
        for (&d, &m) in &self.factors {
            v *= num::pow(cyclotomic_shared(d).eval(q0), m as usize);
        }
        v
    }

    /// Exact value at an integer point.
    pub fn eval_int(&self, q0: i64) -> BigRational {
        self.eval(&BigRational::from_integer(q0.into()))
    }

    /// Refactored sum. Fails with the dense sum when it is not a cyclotomic product.
    pub fn add(&self, other: &CycloPoly) -> Result<CycloPoly, NonFactorable> {
        Self::refactor(&(&self.expand() + &other.expand()))
    }

    /// Refactored difference.
    pub fn sub(&self, other: &CycloPoly) -> Result<CycloPoly, NonFactorable> {
        Self::refactor(&(&self.expand() - &other.expand()))
    }

    /// Recovers the factored form of a dense polynomial by extracting the
    /// q-power and trial-dividing by cyclotomic polynomials.
    pub fn refactor(p: &DensePoly) -> Result<CycloPoly, NonFactorable> {
        let Some(low) = p.low_degree() else {
            return Ok(Self::zero());
        };
        let mut rest = p.shift_down(low);
        let mut factors = BTreeMap::new();
        let start_degree = rest.degree().unwrap_or(0) as u32;
        // For every d below 10^8 the ratio d / φ(d) stays under 6, so any Φ_d
        // of degree at most `start_degree` has d ≤ 6 · start_degree.
        let bound = 6 * start_degree.max(1);
        let mut probe = IntegerProbe::new(&rest);
        for d in 1..=bound {
            let remaining = rest.degree().unwrap_or(0) as u32;
            if remaining == 0 {
                break;
            }
            if totient(d) > remaining || !probe.may_divide(d) {
                continue;
            }
            let phi = cyclotomic_shared(d);
            let mut changed = false;
            while rest.degree().unwrap_or(0) as u32 >= totient(d) {
                match rest.exact_div(&phi) {
                    Some(q) => {
                        rest = q;
                        changed = true;
                        *factors.entry(d).or_insert(0) += 1;
                    }
                    None => break,
                }
            }
            if changed {
                probe = IntegerProbe::new(&rest);
            }
        }
        if rest.degree() != Some(0) {
            return Err(NonFactorable(p.clone()));
        }
        let scalar = rest.coeff(0);
        Ok(Self::new(scalar, low as u32, factors))
    }
}

/// Values at `q = 2` and `q = 3` of the primitive integer multiple of a
/// polynomial. Since `Φ_d` is monic with integer coefficients, `Φ_d | p`
/// forces `Φ_d(2)` and `Φ_d(3)` to divide these values.
struct IntegerProbe {
    values: [BigInt; 2],
}

impl IntegerProbe {
    const POINTS: [i64; 2] = [2, 3];

    fn new(p: &DensePoly) -> Self {
        let den = p
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = p
            .coeffs()
            .iter()
            .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
            .collect();
        let values = Self::POINTS.map(|x| {
            let xb = BigInt::from(x);
            ints.iter().rev().fold(BigInt::zero(), |acc, c| acc * &xb + c)
        });
        Self { values }
    }

    fn may_divide(&self, d: u32) -> bool {
        Self::POINTS.iter().zip(&self.values).all(|(&x, v)| {
            v.is_zero() || (v % phi_at_integer(d, x)).is_zero()
        })
    }
}

/// `Φ_d(x)` for an integer `x ≥ 2` via the Möbius product formula, memoised.
fn phi_at_integer(d: u32, x: i64) -> BigInt {
    static CACHE: OnceLock<Mutex<HashMap<(u32, i64), BigInt>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().expect("phi value cache").get(&(d, x)) {
        return v.clone();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for e in crate::cyclotomic::divisors(d) {
        let term = num::pow(BigInt::from(x), e as usize) - BigInt::one();
        match mobius(d / e) {
            1 => num *= term,
            -1 => den *= term,
            _ => {}
        }
    }
    let value = num / den;
    cache.lock().expect("phi value cache").insert((d, x), value.clone());
    value
}

fn mobius(n: u32) -> i32 {
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

impl Mul for &CycloPoly {
    type Output = CycloPoly;
    fn mul(self, rhs: &CycloPoly) -> CycloPoly {
        if self.is_zero() || rhs.is_zero() {
            return CycloPoly::zero();
        }
        let mut factors = self.factors.clone();
        for (&d, &m) in &rhs.factors {
            *factors.entry(d).or_insert(0) += m;
        }
        CycloPoly::new(&self.scalar * &rhs.scalar, self.qexp + rhs.qexp, factors)
    }
}

impl Mul for CycloPoly {
    type Output = CycloPoly;
    fn mul(self, rhs: CycloPoly) -> CycloPoly {
        &self * &rhs
    }
}

impl fmt::Display for CycloPoly {
    /// Space-separated tokens in the dataset grammar, e.g. `1/2 q^3 P1^4 P3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if !self.scalar.is_one() || (self.qexp == 0 && self.factors.is_empty()) {
            parts.push(self.scalar.to_string());
        }
        match self.qexp {
            0 => {}
            1 => parts.push("q".to_string()),
            k => parts.push(format!("q^{k}")),
        }
        for (&d, &m) in &self.factors {
            if m == 1 {
                parts.push(format!("P{d}"));
            } else {
                parts.push(format!("P{d}^{m}"));
            }
        }
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for CycloPoly {
    type Err = QpolyError;

    /// Parses `<rational> q^<int> P<d>[^<m>] ...`; every token is optional and
    /// tokens multiply, so `1/2 q^3 P1^4 P3`, `q P3` and `1` are all accepted.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut value = CycloPoly::one();
        let mut seen = false;
        let mut offset = 0;
        for token in text.split_whitespace() {
            let at = offset + text[offset..].find(token).expect("token comes from text");
            offset = at + token.len();
            seen = true;
            value = &value * &parse_token(token, at)?;
        }
        if !seen {
            return Err(QpolyError::Parse { offset: 0, message: "empty polynomial".into() });
        }
        Ok(value)
    }
}

fn parse_token(token: &str, at: usize) -> Result<CycloPoly, QpolyError> {
    let err = |message: &str| QpolyError::Parse { offset: at, message: format!("{message} in `{token}`") };
    let parse_u32 = |s: &str, what: &str| s.parse::<u32>().map_err(|_| err(what));
    if let Some(rest) = token.strip_prefix('q') {
        let k = match rest.strip_prefix('^') {
            Some(exp) => parse_u32(exp, "bad q exponent")?,
            None if rest.is_empty() => 1,
            None => return Err(err("unexpected text after q")),
        };
        return Ok(CycloPoly::q_pow(k));
    }
    if let Some(rest) = token.strip_prefix('P') {
        let (d, m) = match rest.split_once('^') {
            Some((d, m)) => (parse_u32(d, "bad cyclotomic index")?, parse_u32(m, "bad cyclotomic exponent")?),
            None => (parse_u32(rest, "bad cyclotomic index")?, 1),
        };
        if d == 0 {
            return Err(err("cyclotomic index must be positive"));
        }
        return Ok(CycloPoly::new(BigRational::one(), 0, [(d, m)]));
    }
    let (n, dnm) = match token.split_once('/') {
        Some((n, dnm)) => (n, dnm),
        None => (token, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| err("bad rational"))?;
    let dnm: BigInt = dnm.parse().map_err(|_| err("bad rational"))?;
    if dnm.is_zero() || dnm.is_negative() {
        return Err(err("denominator must be positive"));
    }
    Ok(CycloPoly::from_rational(BigRational::new(n, dnm)))
}
