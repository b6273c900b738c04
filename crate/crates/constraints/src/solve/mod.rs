//! Exact solution of constraint systems over bounded integer domains.
//!
//! Linear equalities are eliminated first, the remaining unknowns are split
//! into independent components, and each component is either enumerated
//! completely or, when its box is too large, summarised by exact extreme
//! values and an affine hull proven by targeted searches.

mod hull;
mod search;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use dmw_chardata::BlockTable;
use dmw_decomp::{integer_matrix, DecompError, DegreeSamples};
use dmw_paramexpr::{compare_names, Assignment, CompiledExpr, Domain, ParamExpr};
use num::{BigRational, Zero};

use crate::rules::table_constraints;
use crate::{Constraint, ConstraintKind};
use hull::{to_integer_row, Hull};
use search::{enumerate, LimitHit, Model, PointCheck, Pointwise, Prim, VALUE_SET_LIMIT};

/// Points of the original box examined when explaining infeasibility.
const DIAGNOSTIC_POINTS: usize = 8;

/// Largest survivor set printed point by point.
const PRINTED_POINTS: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Components whose box has at most this many points are enumerated.
    pub enumeration_budget: u128,
    /// Enumerated survivor sets up to this size are listed explicitly.
    pub explicit_limit: usize,
    /// Search nodes allowed for a single enumeration or query.
    pub node_limit: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self { enumeration_budget: 1 << 22, explicit_limit: 4096, node_limit: 50_000_000 }
    }
}

/// The values an unknown takes over the surviving assignments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValueSet {
    Values(Vec<i64>),
    /// Minimum and maximum, both attained.
    Range(i64, i64),
}

impl ValueSet {
    pub fn min(&self) -> i64 {
        match self {
            ValueSet::Values(v) => v[0],
            ValueSet::Range(lo, _) => *lo,
        }
    }

    pub fn max(&self) -> i64 {
        match self {
            ValueSet::Values(v) => *v.last().expect("value sets are nonempty"),
            ValueSet::Range(_, hi) => *hi,
        }
    }
}

impl fmt::Display for ValueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValueSet::Values(v) => {
                let s: Vec<String> = v.iter().map(i64::to_string).collect();
                write!(f, "{{{}}}", s.join(","))
            }
            ValueSet::Range(lo, hi) => write!(f, "{lo}..{hi}"),
        }
    }
}

/// `multiplier · unknown = rhs`, valid on every surviving assignment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equality {
    pub unknown: String,
    pub multiplier: i64,
    pub rhs: ParamExpr,
}

impl fmt::Display for Equality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multiplier == 1 {
            write!(f, "{} = {}", self.unknown, self.rhs)
        } else {
            write!(f, "{}*{} = {}", self.multiplier, self.unknown, self.rhs)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Survivors {
    /// Every surviving assignment.
    Explicit(Vec<Assignment>),
    /// The number of surviving assignments, too many to list.
    Count(u128),
    /// Some component was too large to enumerate; the equalities and value
    /// ranges are still exact.
    Bounded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub unknowns: Vec<String>,
    /// A basis of the affine relations among the survivors, each solved for
    /// its latest unknown.
    pub equalities: Vec<Equality>,
    /// Value sets of the unknowns not determined by an equality with
    /// constant right-hand side.
    pub domains: Vec<(String, ValueSet)>,
    pub survivors: Survivors,
    /// One surviving assignment.
    pub witness: Assignment,
    /// Sources of the constraints taken as axioms.
    pub axioms: Vec<String>,
}

impl SolveResult {
    pub fn equality(&self, unknown: &str) -> Option<&Equality> {
        self.equalities.iter().find(|e| e.unknown == unknown)
    }

    pub fn domain(&self, unknown: &str) -> Option<&ValueSet> {
        self.domains.iter().find(|(u, _)| u == unknown).map(|(_, v)| v)
    }

    /// The value of an unknown when every survivor agrees on it.
    pub fn fixed_value(&self, unknown: &str) -> Option<i64> {
        if let Some(e) = self.equality(unknown) {
            return e.rhs.as_constant().filter(|c| c % e.multiplier == 0).map(|c| c / e.multiplier);
        }
        match self.domain(unknown)? {
            ValueSet::Values(v) if v.len() == 1 => Some(v[0]),
            _ => None,
        }
    }

    /// Smallest and largest value of an unknown over the survivors, when known.
    pub fn range(&self, unknown: &str) -> Option<(i64, i64)> {
        if let Some(v) = self.domain(unknown) {
            return Some((v.min(), v.max()));
        }
        self.fixed_value(unknown).map(|v| (v, v))
    }

    pub fn count(&self) -> Option<u128> {
        match &self.survivors {
            Survivors::Explicit(v) => Some(v.len() as u128),
            Survivors::Count(n) => Some(*n),
            Survivors::Bounded => None,
        }
    }
}

impl fmt::Display for SolveResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "unknowns: {}", self.unknowns.join(" "))?;
        for e in &self.equalities {
            writeln!(f, "eq: {e}")?;
        }
        for (u, v) in &self.domains {
            writeln!(f, "dom: {u} in {v}")?;
        }
        match &self.survivors {
            Survivors::Explicit(v) => writeln!(f, "survivors: {}", v.len())?,
            Survivors::Count(n) => writeln!(f, "survivors: {n}")?,
            Survivors::Bounded => writeln!(f, "survivors: not counted, box too large to enumerate")?,
        }
        match &self.survivors {
            Survivors::Explicit(v) if v.len() <= PRINTED_POINTS => {
                for p in v {
                    writeln!(f, "point: {}", format_assignment(p, &self.unknowns))?;
                }
            }
            _ => writeln!(f, "witness: {}", format_assignment(&self.witness, &self.unknowns))?,
        }
        for a in &self.axioms {
            writeln!(f, "axiom: {a}")?;
        }
        Ok(())
    }
}

fn format_assignment(s: &Assignment, order: &[String]) -> String {
    order.iter().filter_map(|u| s.get(u).map(|v| format!("{u}={v}"))).collect::<Vec<_>>().join(" ")
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("unknown `{0}` has no declared domain")]
    MissingDomain(String),
    #[error("no assignment satisfies the constraints: {}", .reasons.join("; "))]
    Infeasible { reasons: Vec<String> },
    #[error("search exceeded {0} nodes")]
    SearchLimit(u64),
    #[error(transparent)]
    Decomp(#[from] DecompError),
}

type AssignmentCheck = Arc<dyn Fn(&Assignment) -> bool + Send + Sync>;

/// A condition on named unknowns, checked once they are all fixed.
struct NamedCheck {
    vars: Vec<String>,
    check: AssignmentCheck,
    source: usize,
}

/// Solves the table's own constraint battery.
pub fn solve_table(t: &BlockTable, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    solve(t, &table_constraints(t)?, opts)
}

/// All assignments of the unknowns in `constraints` satisfying every one of
/// them. Unknowns without a domain constraint take the table's declared
/// domain.
pub fn solve(t: &BlockTable, constraints: &[Constraint], opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    let mut sources: Vec<String> = constraints.iter().map(Constraint::to_string).collect();
    let mut domains: BTreeMap<String, Domain> = BTreeMap::new();
    let mut prims: Vec<(ParamExpr, bool, usize)> = Vec::new();
    let mut checks: Vec<NamedCheck> = Vec::new();
    let mut names: BTreeSet<String> = BTreeSet::new();
    for (i, c) in constraints.iter().enumerate() {
        match &c.kind {
            ConstraintKind::Nonneg(e) => prims.push((e.clone(), false, i)),
            ConstraintKind::EqZero(e) => prims.push((e.clone(), true, i)),
            ConstraintKind::AtLeast(e, k) => prims.push((e - &ParamExpr::constant(*k), false, i)),
            ConstraintKind::Domain { unknown, min, max } => {
                names.insert(unknown.clone());
                let d = domains.entry(unknown.clone()).or_insert(Domain::new(*min, *max));
                *d = Domain::new(d.min.max(*min), d.max.min(*max));
            }
            ConstraintKind::DegreePositivity { q_samples } => {
                let samples = DegreeSamples::new(t, q_samples)?;
                let table = t.clone();
                let vars = t.entry_unknowns();
                names.extend(vars.iter().cloned());
                let check: AssignmentCheck = Arc::new(move |s: &Assignment| {
                    integer_matrix(&table, s)
                        .ok()
                        .and_then(|m| samples.first_nonpositive(&m).ok())
                        .is_some_and(|r| r.is_none())
                });
                checks.push(NamedCheck { vars, check, source: i });
            }
        }
    }
    for (e, _, _) in &prims {
        names.extend(e.unknowns());
    }
    let mut unknowns: Vec<String> = names.into_iter().collect();
    unknowns.sort_by(|a, b| compare_names(a, b));
    for u in &unknowns {
        if !domains.contains_key(u) {
            let d = t.params.get(u).ok_or_else(|| SolveError::MissingDomain(u.clone()))?;
            domains.insert(u.clone(), *d);
        }
        if domains[u].is_empty() {
            return Err(SolveError::Infeasible { reasons: vec![format!("the domain of {u} is empty")] });
        }
    }
    let mut axioms: Vec<String> = Vec::new();
    for c in constraints.iter().filter(|c| c.axiom) {
        if !axioms.contains(&c.source) {
            axioms.push(c.source.clone());
        }
    }
    let original = prims.clone();
    let infeasible = |first: Option<String>, sources: &[String]| {
        let mut reasons: Vec<String> = first.into_iter().collect();
        reasons.extend(diagnose(&unknowns, &domains, &original, &checks, sources));
        SolveError::Infeasible { reasons }
    };

    // Eliminate linear equalities.
    let protected: BTreeSet<String> = checks.iter().flat_map(|c| c.vars.iter().cloned()).collect();
    let mut subs: Vec<(String, ParamExpr)> = Vec::new();
    loop {
        let mut kept = Vec::with_capacity(prims.len());
        for p in prims {
            match p.0.as_constant() {
                Some(c) if c < 0 || (p.1 && c != 0) => {
                    let first = format!("{} fails identically", sources[p.2]);
                    return Err(infeasible(Some(first), &sources));
                }
                Some(_) => {}
                None => kept.push(p),
            }
        }
        prims = kept;
        let Some((x, rhs)) = find_pivot(&prims, &protected) else {
            break;
        };
        for p in &mut prims {
            p.0 = p.0.substitute_expr(&x, &rhs);
        }
        for s in &mut subs {
            s.1 = s.1.substitute_expr(&x, &rhs);
        }
        let d = domains[&x];
        let src = sources.len();
        sources.push(format!("domain of {x}"));
        prims.push((&rhs - &ParamExpr::constant(d.min), false, src));
        prims.push((&ParamExpr::constant(d.max) - &rhs, false, src));
        subs.push((x, rhs));
    }
    let eliminated: BTreeSet<&String> = subs.iter().map(|(x, _)| x).collect();
    let active: Vec<String> = unknowns.iter().filter(|u| !eliminated.contains(u)).cloned().collect();

    // Split the active unknowns into independent components.
    let index: HashMap<String, usize> = active.iter().enumerate().map(|(i, u)| (u.clone(), i)).collect();
    let mut parent: Vec<usize> = (0..active.len()).collect();
    let mut link = |vars: &mut dyn Iterator<Item = usize>| {
        let mut vars = vars.peekable();
        if let Some(&first) = vars.peek() {
            for v in vars {
                let (a, b) = (find_root(&mut parent, first), find_root(&mut parent, v));
                parent[a] = b;
            }
        }
    };
    for (e, _, _) in &prims {
        link(&mut e.unknowns().iter().map(|u| index[u]));
    }
    for c in &checks {
        link(&mut c.vars.iter().map(|u| index[u]));
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..active.len() {
        let r = find_root(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    let mut components: Vec<Vec<String>> =
        groups.into_values().map(|g| g.into_iter().map(|i| active[i].clone()).collect()).collect();
    components.sort_by(|a, b| compare_names(&a[0], &b[0]));

    let mut outcomes = Vec::with_capacity(components.len());
    for comp in &components {
        let local: HashMap<String, usize> = comp.iter().enumerate().map(|(i, u)| (u.clone(), i)).collect();
        let model = Model {
            n: comp.len(),
            prims: prims
                .iter()
                .filter(|(e, _, _)| e.unknowns().iter().any(|u| local.contains_key(u)))
                .map(|(e, eq, src)| Prim {
                    expr: CompiledExpr::new(e, &local).expect("components are closed under constraints"),
                    eq: *eq,
                    source: *src,
                })
                .collect(),
            pointwise: checks
                .iter()
                .filter(|c| c.vars.iter().any(|u| local.contains_key(u)))
                .map(|c| {
                    let names = c.vars.clone();
                    let f = c.check.clone();
                    let check: PointCheck = Arc::new(move |vals: &[i64]| {
                        let s: Assignment = names.iter().cloned().zip(vals.iter().copied()).collect();
                        f(&s)
                    });
                    Pointwise { vars: c.vars.iter().map(|u| local[u]).collect(), check, source: c.source }
                })
                .collect(),
        };
        let mut lo: Vec<i64> = comp.iter().map(|u| domains[u].min).collect();
        let mut hi: Vec<i64> = comp.iter().map(|u| domains[u].max).collect();
        if let Err(src) = model.propagate(&mut lo, &mut hi) {
            let first = format!("bounds from {} leave no value", sources[src]);
            return Err(infeasible(Some(first), &sources));
        }
        match solve_component(&model, comp, &lo, &hi, opts)? {
            Some(o) => outcomes.push(o),
            None => return Err(infeasible(None, &sources)),
        }
    }

    Ok(combine(unknowns, &subs, &components, outcomes, opts, axioms))
}

fn find_root(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

/// A linear equality among the constraints, either stated or implied by
/// two opposite inequalities, solved for an unknown with coefficient ±1.
/// The latest such unknown is chosen so that results read in terms of
/// earlier ones.
fn find_pivot(prims: &[(ParamExpr, bool, usize)], protected: &BTreeSet<String>) -> Option<(String, ParamExpr)> {
    let ineqs: HashMap<&ParamExpr, usize> =
        prims.iter().enumerate().filter(|(_, p)| !p.1).map(|(i, p)| (&p.0, i)).collect();
    let candidates = prims.iter().filter(|p| p.1 || ineqs.contains_key(&-&p.0)).map(|p| &p.0);
    for e in candidates {
        let Some((coeffs, _)) = e.linear_parts() else {
            continue;
        };
        let pivot = coeffs
            .iter()
            .filter(|(u, a)| a.abs() == 1 && !protected.contains(*u))
            .max_by(|a, b| compare_names(a.0, b.0));
        if let Some((x, &a)) = pivot {
            let rest = e - &ParamExpr::var(x).scale(a);
            return Some((x.clone(), rest.scale(-a)));
        }
    }
    None
}

/// What is known about one component after solving it.
struct Outcome {
    min: Vec<i64>,
    max: Vec<i64>,
    values: Vec<Option<BTreeSet<i64>>>,
    hull: Hull,
    /// Survivor count and points, when the component was enumerated.
    count: Option<u128>,
    points: Option<Vec<Vec<i64>>>,
    witness: Vec<i64>,
}

fn limit_error(opts: &SolveOptions) -> impl Fn(LimitHit) -> SolveError + '_ {
    move |_| SolveError::SearchLimit(opts.node_limit)
}

fn solve_component(
    model: &Model,
    names: &[String],
    lo: &[i64],
    hi: &[i64],
    opts: &SolveOptions,
) -> Result<Option<Outcome>, SolveError> {
    let size = lo.iter().zip(hi).fold(1u128, |acc, (&l, &h)| acc.saturating_mul((h - l + 1) as u128));
    if size <= opts.enumeration_budget {
        let stats = enumerate(model, lo, hi, opts.explicit_limit, opts.node_limit).map_err(limit_error(opts))?;
        if stats.count == 0 {
            return Ok(None);
        }
        let witness = match &stats.points {
            Some(p) => p[0].clone(),
            None => model.find(lo, hi, None, opts.node_limit).map_err(limit_error(opts))?.expect("count is positive"),
        };
        return Ok(Some(Outcome {
            min: stats.min,
            max: stats.max,
            values: stats.values,
            hull: stats.hull,
            count: Some(stats.count),
            points: stats.points,
            witness,
        }));
    }

    let find = |m: &Model, lo: &[i64], hi: &[i64], first| m.find(lo, hi, first, opts.node_limit);
    let Some(witness) = find(model, lo, hi, None).map_err(limit_error(opts))? else {
        return Ok(None);
    };
    let n = model.n;
    let mut hull = Hull::new(n);
    hull.add_point(&witness);
    let (mut min, mut max) = (vec![0; n], vec![0; n]);
    let mut values: Vec<Option<BTreeSet<i64>>> = vec![None; n];
    for k in 0..n {
        let p = find(model, lo, hi, Some((k, false))).map_err(limit_error(opts))?.expect("feasible");
        min[k] = p[k];
        hull.add_point(&p);
        let p = find(model, lo, hi, Some((k, true))).map_err(limit_error(opts))?.expect("feasible");
        max[k] = p[k];
        hull.add_point(&p);
        if max[k] - min[k] < VALUE_SET_LIMIT as i64 {
            let mut set = BTreeSet::new();
            for v in min[k]..=max[k] {
                let (mut l, mut h) = (lo.to_vec(), hi.to_vec());
                l[k] = v;
                h[k] = v;
                if let Some(p) = find(model, &l, &h, None).map_err(limit_error(opts))? {
                    set.insert(v);
                    hull.add_point(&p);
                }
            }
            values[k] = Some(set);
        }
    }
    // Each candidate equation of the hull is either refuted by a point off
    // it, which raises the dimension, or proven by two failed searches.
    let index: HashMap<String, usize> = names.iter().enumerate().map(|(i, u)| (u.clone(), i)).collect();
    'refine: loop {
        for (c, r) in hull.equations().to_vec() {
            let lhs = c
                .iter()
                .zip(names)
                .filter(|(a, _)| **a != 0)
                .fold(ParamExpr::constant(-r), |acc, (&a, u)| &acc + &ParamExpr::var(u).scale(a));
            for sign in [1, -1] {
                let off = &lhs.scale(sign) - &ParamExpr::constant(1);
                let mut m = model.clone();
                m.prims.push(Prim { expr: CompiledExpr::new(&off, &index).expect("component unknowns"), eq: false, source: 0 });
                if let Some(p) = find(&m, lo, hi, None).map_err(limit_error(opts))? {
                    hull.add_point(&p);
                    continue 'refine;
                }
            }
        }
        break;
    }
    Ok(Some(Outcome { min, max, values, hull, count: None, points: None, witness }))
}

/// Reduced row echelon form in place; returns the pivot column of each row.
fn rref(rows: &mut Vec<Vec<BigRational>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let lead = rows[r][col].clone();
        for x in &mut rows[r] {
            *x /= &lead;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

fn combine(
    unknowns: Vec<String>,
    subs: &[(String, ParamExpr)],
    components: &[Vec<String>],
    outcomes: Vec<Outcome>,
    opts: &SolveOptions,
    axioms: Vec<String>,
) -> SolveResult {
    // Columns: eliminated unknowns, then active ones from latest to earliest,
    // then the constant. Pivots therefore fall on eliminated unknowns first
    // and otherwise on the latest unknown of each relation.
    let mut columns: Vec<String> = subs.iter().map(|(x, _)| x.clone()).collect();
    let mut active: Vec<String> = components.iter().flatten().cloned().collect();
    active.sort_by(|a, b| compare_names(b, a));
    columns.extend(active);
    let col: HashMap<&str, usize> = columns.iter().enumerate().map(|(i, u)| (u.as_str(), i)).collect();
    let ncols = columns.len();
    let int = |v: i64| BigRational::from_integer(v.into());

    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for (x, rhs) in subs {
        let (coeffs, c) = rhs.linear_parts().expect("eliminations are linear");
        let mut row = vec![BigRational::zero(); ncols + 1];
        row[col[x.as_str()]] = int(1);
        for (u, a) in coeffs {
            row[col[u.as_str()]] -= int(a);
        }
        row[ncols] = int(-c);
        rows.push(row);
    }
    for (comp, o) in components.iter().zip(&outcomes) {
        for (c, r) in o.hull.equations() {
            let mut row = vec![BigRational::zero(); ncols + 1];
            for (u, &a) in comp.iter().zip(c) {
                row[col[u.as_str()]] = int(a);
            }
            row[ncols] = int(-r);
            rows.push(row);
        }
    }
    let pivots = rref(&mut rows, ncols);
    let mut equalities: Vec<Equality> = rows
        .iter()
        .zip(&pivots)
        .map(|(row, &p)| {
            let ints = to_integer_row(row);
            let sign = ints[p].signum();
            let rhs = (0..ncols)
                .filter(|&k| k != p && ints[k] != 0)
                .fold(ParamExpr::constant(-sign * ints[ncols]), |acc, k| {
                    &acc + &ParamExpr::var(&columns[k]).scale(-sign * ints[k])
                });
            Equality { unknown: columns[p].clone(), multiplier: sign * ints[p], rhs }
        })
        .collect();
    equalities.sort_by(|a, b| compare_names(&a.unknown, &b.unknown));

    let constant_eq: BTreeSet<&str> =
        equalities.iter().filter(|e| e.rhs.is_constant()).map(|e| e.unknown.as_str()).collect();
    let mut domains: Vec<(String, ValueSet)> = Vec::new();
    for (comp, o) in components.iter().zip(&outcomes) {
        for (k, u) in comp.iter().enumerate() {
            if constant_eq.contains(u.as_str()) {
                continue;
            }
            let v = match &o.values[k] {
                Some(set) => ValueSet::Values(set.iter().copied().collect()),
                None => ValueSet::Range(o.min[k], o.max[k]),
            };
            domains.push((u.clone(), v));
        }
    }
    domains.sort_by(|a, b| compare_names(&a.0, &b.0));

    let complete = |parts: &[(&[String], &[i64])]| {
        let mut s: Assignment = parts.iter().flat_map(|(names, vals)| names.iter().cloned().zip(vals.iter().copied())).collect();
        for (x, rhs) in subs {
            let v = rhs.eval(&s).expect("eliminations only involve active unknowns");
            s.insert(x.clone(), v);
        }
        s
    };
    let witness_parts: Vec<(&[String], &[i64])> =
        components.iter().zip(&outcomes).map(|(c, o)| (c.as_slice(), o.witness.as_slice())).collect();
    let witness = complete(&witness_parts);

    let counts: Option<Vec<u128>> = outcomes.iter().map(|o| o.count).collect();
    let survivors = match counts {
        None => Survivors::Bounded,
        Some(counts) => {
            let total = counts.iter().fold(1u128, |a, &c| a.saturating_mul(c));
            let all_points: Option<Vec<&Vec<Vec<i64>>>> = outcomes.iter().map(|o| o.points.as_ref()).collect();
            match all_points {
                Some(points) if total <= opts.explicit_limit as u128 => {
                    let mut combos: Vec<Vec<usize>> = vec![Vec::new()];
                    for p in &points {
                        combos = combos
                            .into_iter()
                            .flat_map(|c| {
                                (0..p.len()).map(move |i| {
                                    let mut c = c.clone();
                                    c.push(i);
                                    c
                                })
                            })
                            .collect();
                    }
                    let out = combos
                        .iter()
                        .map(|idx| {
                            let parts: Vec<(&[String], &[i64])> = components
                                .iter()
                                .zip(&points)
                                .zip(idx)
                                .map(|((c, p), &i)| (c.as_slice(), p[i].as_slice()))
                                .collect();
                            complete(&parts)
                        })
                        .collect();
                    Survivors::Explicit(out)
                }
                _ => Survivors::Count(total),
            }
        }
    };

    SolveResult { unknowns, equalities, domains, survivors, witness, axioms }
}

/// The first few points of the box with the first constraint each violates.
fn diagnose(
    unknowns: &[String],
    domains: &BTreeMap<String, Domain>,
    prims: &[(ParamExpr, bool, usize)],
    checks: &[NamedCheck],
    sources: &[String],
) -> Vec<String> {
    let mut out = Vec::new();
    let mut point: Vec<i64> = unknowns.iter().map(|u| domains[u].min).collect();
    while out.len() < DIAGNOSTIC_POINTS {
        let s: Assignment = unknowns.iter().cloned().zip(point.iter().copied()).collect();
        let violated = prims
            .iter()
            .find(|(e, eq, _)| e.eval(&s).is_ok_and(|v| v < 0 || (*eq && v != 0)))
            .map(|p| p.2)
            .or_else(|| checks.iter().find(|c| !(c.check)(&s)).map(|c| c.source));
        if let Some(src) = violated {
            out.push(format!("at {} fails {}", format_assignment(&s, unknowns), sources[src]));
        }
        let mut k = point.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if point[k] < domains[&unknowns[k]].max {
                point[k] += 1;
                break;
            }
            point[k] = domains[&unknowns[k]].min;
        }
    }
    out
}
