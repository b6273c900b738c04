//! Canonical integer polynomials in named unknowns.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::{Assignment, ExprError};

/// Orders unknown names by alphabetic prefix, then by numeric suffix, so
/// that `c2` sorts before `c10` and `c` before `c1`.
pub fn compare_names(a: &str, b: &str) -> Ordering {
    fn split(s: &str) -> (&str, Option<u64>, &str) {
        let cut = s.find(|ch: char| ch.is_ascii_digit()).unwrap_or(s.len());
        let (head, tail) = s.split_at(cut);
        let digits_end = tail.find(|ch: char| !ch.is_ascii_digit()).unwrap_or(tail.len());
        let (digits, rest) = tail.split_at(digits_end);
        (head, digits.parse().ok(), rest)
    }
    let (ha, na, ra) = split(a);
    let (hb, nb, rb) = split(b);
    ha.cmp(hb).then(na.cmp(&nb)).then_with(|| ra.cmp(rb)).then_with(|| a.cmp(b))
}

/// A monomial: the sorted multiset of unknown names it multiplies.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<String>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn var(name: &str) -> Self {
        Self(vec![name.to_string()])
    }

    fn from_vec(mut names: Vec<String>) -> Self {
        names.sort_by(|a, b| compare_names(a, b));
        Self(names)
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial::from_vec(self.0.iter().chain(&other.0).cloned().collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| {
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| compare_names(a, b))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial with integer coefficients in named unknowns.
///
/// Zero coefficients are never stored, so the zero expression has no terms
/// and structural equality coincides with polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ParamExpr {
    terms: BTreeMap<Monomial, i64>,
}

fn checked(v: Option<i64>) -> i64 {
    v.expect("integer overflow in expression arithmetic")
}

impl ParamExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        let mut e = Self::zero();
        e.add_term(Monomial::one(), c);
        e
    }

    pub fn var(name: &str) -> Self {
        let mut e = Self::zero();
        e.add_term(Monomial::var(name), 1);
        e
    }

    fn add_term(&mut self, m: Monomial, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert(0);
        *entry = checked(entry.checked_add(c));
        if *entry == 0 {
            self.terms.remove(&m);
        }
    }

    /// Terms in canonical order (by degree, then by unknown names).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value when the expression has no unknowns.
    pub fn as_constant(&self) -> Option<i64> {
        match self.terms.len() {
            0 => Some(0),
            1 => self.terms.get(&Monomial::one()).copied(),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    /// The constant term.
    pub fn constant_term(&self) -> i64 {
        self.terms.get(&Monomial::one()).copied().unwrap_or(0)
    }

    /// Unknowns occurring in the expression.
    pub fn unknowns(&self) -> BTreeSet<String> {
        self.terms.keys().flat_map(|m| m.0.iter().cloned()).collect()
    }

    /// Highest monomial degree (0 for constants).
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// For an expression of degree at most one, its coefficients per unknown and its constant.
    pub fn linear_parts(&self) -> Option<(BTreeMap<String, i64>, i64)> {
        if self.degree() > 1 {
            return None;
        }
        let coeffs = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == 1)
            .map(|(m, &c)| (m.0[0].clone(), c))
            .collect();
        Some((coeffs, self.constant_term()))
    }

    /// Exact value under an assignment binding every unknown.
    pub fn eval(&self, s: &Assignment) -> Result<i64, ExprError> {
        let mut total: i64 = 0;
        for (m, &c) in &self.terms {
            let mut v = c;
            for name in &m.0 {
                let x = *s.get(name).ok_or_else(|| ExprError::Unbound(name.clone()))?;
                v = checked(v.checked_mul(x));
            }
            total = checked(total.checked_add(v));
        }
        Ok(total)
    }

    /// Replaces the bound unknowns by their values, keeping the others symbolic.
    pub fn substitute(&self, s: &Assignment) -> ParamExpr {
        let mut out = ParamExpr::zero();
        for (m, &c) in &self.terms {
            let mut coeff = c;
            let mut rest = Vec::new();
            for name in &m.0 {
                match s.get(name) {
                    Some(&x) => coeff = checked(coeff.checked_mul(x)),
                    None => rest.push(name.clone()),
                }
            }
            out.add_term(Monomial::from_vec(rest), coeff);
        }
        out
    }

    /// Replaces every occurrence of the unknown `name` by the expression `by`.
    pub fn substitute_expr(&self, name: &str, by: &ParamExpr) -> ParamExpr {
        let mut out = ParamExpr::zero();
        for (m, &c) in &self.terms {
            let mut term = ParamExpr::zero();
            let rest: Vec<String> = m.0.iter().filter(|n| *n != name).cloned().collect();
            term.add_term(Monomial::from_vec(rest), c);
            for _ in m.0.iter().filter(|n| *n == name) {
                term = &term * by;
            }
            out = &out + &term;
        }
        out
    }

    /// Multiplies every coefficient by `k`.
    pub fn scale(&self, k: i64) -> ParamExpr {
        let mut out = ParamExpr::zero();
        for (m, &c) in &self.terms {
            out.add_term(m.clone(), checked(c.checked_mul(k)));
        }
        out
    }
}

impl Add for &ParamExpr {
    type Output = ParamExpr;
    fn add(self, rhs: &ParamExpr) -> ParamExpr {
        let mut out = self.clone();
        for (m, &c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Sub for &ParamExpr {
    type Output = ParamExpr;
    fn sub(self, rhs: &ParamExpr) -> ParamExpr {
        let mut out = self.clone();
        for (m, &c) in &rhs.terms {
            out.add_term(m.clone(), checked(c.checked_neg()));
        }
        out
    }
}

impl Mul for &ParamExpr {
    type Output = ParamExpr;
    fn mul(self, rhs: &ParamExpr) -> ParamExpr {
        let mut out = ParamExpr::zero();
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &rhs.terms {
                out.add_term(ma.times(mb), checked(ca.checked_mul(cb)));
            }
        }
        out
    }
}

impl Neg for &ParamExpr {
    type Output = ParamExpr;
    fn neg(self) -> ParamExpr {
        self.scale(-1)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for ParamExpr {
            type Output = ParamExpr;
            fn $method(self, rhs: ParamExpr) -> ParamExpr {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl From<i64> for ParamExpr {
    fn from(c: i64) -> Self {
        ParamExpr::constant(c)
    }
}

impl fmt::Display for ParamExpr {
    /// Canonical text accepted by the parser, e.g. `4+2*c1-3*c5` or `c1-1`.
    ///
    /// Terms follow the canonical monomial order, except that a negative
    /// constant moves to the end when the first other term is positive, so
    /// the text opens with a positive term whenever one is available.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut ordered: Vec<(&Monomial, i64)> = self.terms().collect();
        let constant_first = ordered[0].0.degree() == 0;
        if constant_first && ordered.len() > 1 && ordered[0].1 < 0 && ordered[1].1 > 0 {
            let c = ordered.remove(0);
            ordered.push(c);
        }
        for (i, (m, c)) in ordered.into_iter().enumerate() {
            let sign = if c < 0 { "-" } else if i > 0 { "+" } else { "" };
            let a = c.unsigned_abs();
            let body = m.0.join("*");
            if body.is_empty() {
                write!(f, "{sign}{a}")?;
            } else if a == 1 {
                write!(f, "{sign}{body}")?;
            } else {
                write!(f, "{sign}{a}*{body}")?;
            }
        }
        Ok(())
    }
}
