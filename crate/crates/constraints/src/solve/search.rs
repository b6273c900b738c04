//! Bound propagation and depth-first search over integer boxes.

use std::collections::BTreeSet;
use std::sync::Arc;

use dmw_paramexpr::CompiledExpr;
use rayon::prelude::*;

use super::hull::Hull;

/// Propagation rounds before giving up on reaching a fixpoint; stopping
/// early is sound because the search re-checks every leaf.
const MAX_ROUNDS: usize = 10_000;

/// Domains up to this size are branched value by value; larger ones are bisected.
const ENUMERATE_WIDTH: i64 = 16;

/// Values tracked per unknown before only the range is kept.
pub(crate) const VALUE_SET_LIMIT: usize = 8;

pub(crate) type PointCheck = Arc<dyn Fn(&[i64]) -> bool + Send + Sync>;

/// `expr ≥ 0`, or `expr = 0` when `eq` holds.
#[derive(Clone, Debug)]
pub(crate) struct Prim {
    pub expr: CompiledExpr,
    pub eq: bool,
    pub source: usize,
}

/// A condition evaluated once all of `vars` are fixed.
#[derive(Clone)]
pub(crate) struct Pointwise {
    pub vars: Vec<usize>,
    pub check: PointCheck,
    pub source: usize,
}

#[derive(Clone)]
pub(crate) struct Model {
    pub n: usize,
    pub prims: Vec<Prim>,
    pub pointwise: Vec<Pointwise>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct LimitHit;

fn ceil_div(a: i64, b: i64) -> i64 {
    let q = a.div_euclid(b);
    if a.rem_euclid(b) == 0 {
        q
    } else {
        q + 1
    }
}

/// Tightens bounds from `sign · expr ≥ 0`. A term with a single unfixed
/// unknown of degree one bounds that unknown; other terms contribute their
/// interval. Returns the changed flag, or `Err` when the inequality cannot
/// hold anywhere on the box.
fn tighten(expr: &CompiledExpr, sign: i64, lo: &mut [i64], hi: &mut [i64]) -> Result<bool, ()> {
    let mut maxsum = 0i64;
    let mut singles: Vec<(usize, i64, i64)> = Vec::new();
    for (c, vars) in expr.terms() {
        let mut t = (sign * c, sign * c);
        let mut free: Option<usize> = None;
        let mut several = false;
        for &i in vars {
            if lo[i] != hi[i] {
                several |= free.is_some();
                free = Some(i);
            }
            let cands = [t.0 * lo[i], t.0 * hi[i], t.1 * lo[i], t.1 * hi[i]];
            t = (*cands.iter().min().expect("four values"), *cands.iter().max().expect("four values"));
        }
        maxsum += t.1;
        if let (Some(k), false) = (free, several) {
            let a = vars.iter().filter(|&&i| i != k).fold(sign * c, |acc, &i| acc * lo[i]);
            singles.push((k, a, t.1));
        }
    }
    if maxsum < 0 {
        return Err(());
    }
    let mut changed = false;
    for (k, a, tmax) in singles {
        let rest = maxsum - tmax;
        if a > 0 {
            let nl = ceil_div(-rest, a);
            if nl > lo[k] {
                lo[k] = nl;
                changed = true;
            }
        } else if a < 0 {
            let nh = rest.div_euclid(-a);
            if nh < hi[k] {
                hi[k] = nh;
                changed = true;
            }
        }
        if lo[k] > hi[k] {
            return Err(());
        }
    }
    Ok(changed)
}

impl Model {
    /// Propagates bounds to a fixpoint; `Err` carries the source index of a
    /// constraint that no point of the box satisfies.
    pub(crate) fn propagate(&self, lo: &mut [i64], hi: &mut [i64]) -> Result<(), usize> {
        for _ in 0..MAX_ROUNDS {
            let mut changed = false;
            for p in &self.prims {
                changed |= tighten(&p.expr, 1, lo, hi).map_err(|_| p.source)?;
                if p.eq {
                    changed |= tighten(&p.expr, -1, lo, hi).map_err(|_| p.source)?;
                }
            }
            if !changed {
                break;
            }
        }
        for pw in &self.pointwise {
            if pw.vars.iter().all(|&k| lo[k] == hi[k]) {
                let vals: Vec<i64> = pw.vars.iter().map(|&k| lo[k]).collect();
                if !(pw.check)(&vals) {
                    return Err(pw.source);
                }
            }
        }
        Ok(())
    }

    /// Visits every point of the propagated box `lo..=hi` satisfying all
    /// constraints until `visit` returns false. `first` names an unknown to
    /// branch on before the others, descending when its flag is set.
    pub(crate) fn dfs(
        &self,
        lo: &[i64],
        hi: &[i64],
        first: Option<(usize, bool)>,
        visit: &mut dyn FnMut(&[i64]) -> bool,
        nodes: &mut u64,
        limit: u64,
    ) -> Result<bool, LimitHit> {
        *nodes += 1;
        if *nodes > limit {
            return Err(LimitHit);
        }
        let k = match first {
            Some((k, _)) if lo[k] < hi[k] => Some(k),
            _ => (0..self.n).filter(|&k| lo[k] < hi[k]).min_by_key(|&k| (hi[k] - lo[k], k)),
        };
        let Some(k) = k else {
            return Ok(visit(lo));
        };
        let desc = matches!(first, Some((f, true)) if f == k);
        let ranges: Vec<(i64, i64)> = if hi[k] - lo[k] < ENUMERATE_WIDTH {
            (lo[k]..=hi[k]).map(|v| (v, v)).collect()
        } else {
            let mid = lo[k] + (hi[k] - lo[k]) / 2;
            vec![(lo[k], mid), (mid + 1, hi[k])]
        };
        let ordered: Box<dyn Iterator<Item = &(i64, i64)>> =
            if desc { Box::new(ranges.iter().rev()) } else { Box::new(ranges.iter()) };
        for &(a, b) in ordered {
            let mut l2 = lo.to_vec();
            let mut h2 = hi.to_vec();
            l2[k] = a;
            h2[k] = b;
            if self.propagate(&mut l2, &mut h2).is_ok() && !self.dfs(&l2, &h2, first, visit, nodes, limit)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Some point of the box satisfying every constraint, branching first
    /// on `first` when given.
    pub(crate) fn find(
        &self,
        lo: &[i64],
        hi: &[i64],
        first: Option<(usize, bool)>,
        limit: u64,
    ) -> Result<Option<Vec<i64>>, LimitHit> {
        let (mut l, mut h) = (lo.to_vec(), hi.to_vec());
        if self.propagate(&mut l, &mut h).is_err() {
            return Ok(None);
        }
        let mut found = None;
        let mut nodes = 0;
        self.dfs(
            &l,
            &h,
            first,
            &mut |p| {
                found = Some(p.to_vec());
                false
            },
            &mut nodes,
            limit,
        )?;
        Ok(found)
    }
}

/// What is kept about the points of one component.
#[derive(Clone, Debug)]
pub(crate) struct Stats {
    pub count: u128,
    pub min: Vec<i64>,
    pub max: Vec<i64>,
    /// Distinct values per unknown, dropped once they exceed the limit.
    pub values: Vec<Option<BTreeSet<i64>>>,
    pub hull: Hull,
    pub points: Option<Vec<Vec<i64>>>,
    explicit_limit: usize,
}

impl Stats {
    pub(crate) fn new(n: usize, explicit_limit: usize) -> Self {
        Self {
            count: 0,
            min: vec![i64::MAX; n],
            max: vec![i64::MIN; n],
            values: vec![Some(BTreeSet::new()); n],
            hull: Hull::new(n),
            points: Some(Vec::new()),
            explicit_limit,
        }
    }

    pub(crate) fn add(&mut self, p: &[i64]) {
        self.count += 1;
        for (k, &v) in p.iter().enumerate() {
            self.min[k] = self.min[k].min(v);
            self.max[k] = self.max[k].max(v);
            add_value(&mut self.values[k], v);
        }
        self.hull.add_point(p);
        if let Some(pts) = &mut self.points {
            if pts.len() < self.explicit_limit {
                pts.push(p.to_vec());
            } else {
                self.points = None;
            }
        }
    }

    pub(crate) fn merge(&mut self, other: Stats) {
        self.count += other.count;
        for k in 0..self.min.len() {
            self.min[k] = self.min[k].min(other.min[k]);
            self.max[k] = self.max[k].max(other.max[k]);
            match (&mut self.values[k], other.values[k].as_ref()) {
                (Some(_), None) => self.values[k] = None,
                (Some(_), Some(o)) => {
                    for &v in o {
                        add_value(&mut self.values[k], v);
                    }
                }
                (None, _) => {}
            }
        }
        self.hull.merge(&other.hull);
        self.points = match (self.points.take(), other.points) {
            (Some(mut a), Some(b)) if a.len() + b.len() <= self.explicit_limit => {
                a.extend(b);
                Some(a)
            }
            _ => None,
        };
    }
}

fn add_value(set: &mut Option<BTreeSet<i64>>, v: i64) {
    if let Some(s) = set {
        s.insert(v);
        if s.len() > VALUE_SET_LIMIT {
            *set = None;
        }
    }
}

/// Visits every point of the box, splitting the widest unknown across
/// worker threads; merging in value order keeps the result deterministic.
pub(crate) fn enumerate(
    model: &Model,
    lo: &[i64],
    hi: &[i64],
    explicit_limit: usize,
    limit: u64,
) -> Result<Stats, LimitHit> {
    let n = model.n;
    let split = (0..n).filter(|&k| lo[k] < hi[k]).max_by_key(|&k| (hi[k] - lo[k], std::cmp::Reverse(k)));
    let values: Vec<Option<i64>> = match split {
        Some(k) => (lo[k]..=hi[k]).map(Some).collect(),
        None => vec![None],
    };
    let parts: Vec<Result<Stats, LimitHit>> = values
        .par_iter()
        .map(|v| {
            let mut stats = Stats::new(n, explicit_limit);
            let (mut l, mut h) = (lo.to_vec(), hi.to_vec());
            if let (Some(k), Some(v)) = (split, v) {
                l[k] = *v;
                h[k] = *v;
            }
            if model.propagate(&mut l, &mut h).is_ok() {
                let mut nodes = 0;
                model.dfs(
                    &l,
                    &h,
                    None,
                    &mut |p| {
                        stats.add(p);
                        true
                    },
                    &mut nodes,
                    limit,
                )?;
            }
            Ok(stats)
        })
        .collect();
    let mut total = Stats::new(n, explicit_limit);
    for p in parts {
        total.merge(p?);
    }
    Ok(total)
}
