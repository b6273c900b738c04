//! Affine hull of a growing set of integer points.

use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};

/// The affine hull of the points added so far: a base point, a basis of
/// directions in reduced row echelon form, and integer equations cutting
/// out the hull.
#[derive(Clone, Debug)]
pub(crate) struct Hull {
    n: usize,
    base: Option<Vec<i64>>,
    basis: Vec<Vec<BigRational>>,
    pivots: Vec<usize>,
    eqs: Vec<(Vec<i64>, i64)>,
}

fn dot(c: &[i64], p: &[i64]) -> i128 {
    c.iter().zip(p).map(|(&a, &b)| i128::from(a) * i128::from(b)).sum()
}

impl Hull {
    pub(crate) fn new(n: usize) -> Self {
        Self { n, base: None, basis: Vec::new(), pivots: Vec::new(), eqs: Vec::new() }
    }

    /// Equations `c · x = r` valid on the hull, one per missing dimension.
    pub(crate) fn equations(&self) -> &[(Vec<i64>, i64)] {
        &self.eqs
    }

    pub(crate) fn contains(&self, p: &[i64]) -> bool {
        self.base.is_some() && self.eqs.iter().all(|(c, r)| dot(c, p) == i128::from(*r))
    }

    pub(crate) fn add_point(&mut self, p: &[i64]) {
        match &self.base {
            None => {
                self.base = Some(p.to_vec());
                self.recompute();
            }
            Some(b) => {
                if !self.contains(p) {
                    let d = p.iter().zip(b).map(|(&x, &y)| BigRational::from_integer(BigInt::from(x - y))).collect();
                    self.add_direction(d);
                }
            }
        }
    }

    pub(crate) fn merge(&mut self, other: &Hull) {
        if let Some(b) = &other.base {
            self.add_point(b);
            for row in &other.basis {
                self.add_direction(row.clone());
            }
        }
    }

    fn add_direction(&mut self, mut d: Vec<BigRational>) {
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            if !d[pc].is_zero() {
                let f = d[pc].clone();
                for (x, y) in d.iter_mut().zip(row) {
                    *x -= &f * y;
                }
            }
        }
        let Some(pc) = d.iter().position(|x| !x.is_zero()) else {
            return;
        };
        let lead = d[pc].clone();
        for x in &mut d {
            *x /= &lead;
        }
        for row in &mut self.basis {
            if !row[pc].is_zero() {
                let f = row[pc].clone();
                for (x, y) in row.iter_mut().zip(&d) {
                    *x -= &f * y;
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < pc);
        self.basis.insert(at, d);
        self.pivots.insert(at, pc);
        self.recompute();
    }

    fn recompute(&mut self) {
        let base = self.base.as_ref().expect("hull has a point");
        self.eqs = (0..self.n)
            .filter(|f| !self.pivots.contains(f))
            .map(|f| {
                let mut v = vec![BigRational::zero(); self.n];
                v[f] = BigRational::one();
                for (row, &pc) in self.basis.iter().zip(&self.pivots) {
                    v[pc] = -row[f].clone();
                }
                let c = to_integer_row(&v);
                let r = dot(&c, base);
                (c, i64::try_from(r).expect("hull equation constant fits in i64"))
            })
            .collect();
    }
}

/// Scales a rational row to coprime integers.
pub(crate) fn to_integer_row(v: &[BigRational]) -> Vec<i64> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let g = if g.is_zero() { BigInt::one() } else { g.abs() };
    ints.iter().map(|x| (x / &g).to_i64().expect("coefficient fits in i64")).collect()
}
