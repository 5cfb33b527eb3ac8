//! Enumeration of all solutions in Q(z).
//!
//! For each candidate degree `k` the coefficient system is solved on each
//! piece `c_j = 1, c_i = 0 (i > j)` of P^(2k+1); the pieces cover every
//! projective point exactly once. The locus where numerator and
//! denominator share a root is removed by adjoining `t Res(c) - 1`, the
//! resulting ideal is checked for zero-dimensionality with a grevlex basis,
//! and rational points are read off a lexicographic basis one variable at a
//! time. Points are mapped back to rational functions, re-verified by
//! substitution and deduplicated.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::bounds::BoundCertificate;
use crate::equation::REq;
use crate::error::Result;
use crate::groebner::{buchberger, verify_groebner, Budget, GroebnerBasis, ZeroDim};
use crate::heights::height_ratfunc;
use crate::mpoly::{MPoly, MonOrder, OrderKind};
use crate::ratfunc::RatFunc;
use crate::rational::{integer_coprime, Rat};
use crate::roots::{nonlinear_part, rational_roots};
use crate::system::{chart_resultant, coefficient_forms};
use crate::upoly::UPoly;

/// Outcome of substituting `f` into the equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    /// `f(z + 1)` or `f'(z)`.
    pub lhs: RatFunc,
    /// `R(z, f(z))`, or `None` when `Q(f1, f0)` vanishes identically.
    pub rhs: Option<RatFunc>,
}

impl Verification {
    pub fn is_valid(&self) -> bool {
        self.rhs.as_ref() == Some(&self.lhs)
    }

    /// `f` lands in the indeterminacy locus, so it is not a solution.
    pub fn undefined_composition(&self) -> bool {
        self.rhs.is_none()
    }
}

/// Exact substitution check of `f` against the equation.
pub fn verify_solution(r: &REq, f: &RatFunc) -> Verification {
    let lhs = match r.kind() {
        crate::EquationKind::Difference => f.shift(),
        crate::EquationKind::Differential => f.derivative(),
    };
    Verification { lhs, rhs: r.apply(f) }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Resolved,
    NoSolutions,
    Unresolved,
    Skipped,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Resolved => "resolved",
            Status::NoSolutions => "no-solutions",
            Status::Unresolved => "unresolved",
            Status::Skipped => "skipped",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A factor of an eliminant with no rational roots: its roots are points
/// with algebraic, non-rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual {
    pub k: usize,
    pub chart: String,
    /// Name of the variable the factor is in.
    pub variable: String,
    /// Coordinates fixed before this elimination step.
    pub fixed: Vec<(String, Rat)>,
    pub factor: UPoly,
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.factor.to_string_in(&self.variable))?;
        if !self.fixed.is_empty() {
            let fixed: Vec<String> = self
                .fixed
                .iter()
                .map(|(v, x)| format!("{v} = {x}"))
                .collect();
            write!(f, " at {}", fixed.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct ChartReport {
    /// `c<j>`: the chart where `c_j = 1` and every later coordinate is 0.
    pub id: String,
    pub status: Status,
    pub detail: Option<String>,
    pub residuals: Vec<Residual>,
    /// Rational points found, before the degree filter.
    pub points: usize,
    pub steps: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct DegreeReport {
    pub k: usize,
    pub status: Status,
    pub detail: Option<String>,
    pub charts: Vec<ChartReport>,
    pub solutions: Vec<RatFunc>,
    pub elapsed: Duration,
}

/// Exact comparison of the found solutions with the certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundChecks {
    /// Number of solutions at most the count bound. This can fail when
    /// `deg_z R = 0`: `f(z+1) = f(z)^2` has the two solutions 0 and 1
    /// while the bound evaluates to 1.
    pub count: bool,
    pub degree: bool,
    /// Every solution's height is within the height bound.
    pub height: bool,
}

#[derive(Clone, Debug)]
pub struct SolutionReport {
    pub equation: REq,
    /// Absent when the equation violates the degree hypothesis.
    pub bounds: Option<BoundCertificate>,
    /// How the found solutions compare with the bounds.
    pub checks: Option<BoundChecks>,
    pub solutions: Vec<RatFunc>,
    pub per_degree: Vec<DegreeReport>,
    pub elapsed: Duration,
}

impl SolutionReport {
    /// No degree was left unresolved or skipped.
    pub fn fully_resolved(&self) -> bool {
        self.per_degree
            .iter()
            .all(|d| matches!(d.status, Status::Resolved | Status::NoSolutions))
    }

    pub fn any_unresolved(&self) -> bool {
        self.per_degree.iter().any(|d| d.status == Status::Unresolved)
    }

    pub fn residuals(&self) -> impl Iterator<Item = &Residual> {
        self.per_degree
            .iter()
            .flat_map(|d| d.charts.iter().flat_map(|c| c.residuals.iter()))
    }

    pub fn degree(&self, k: usize) -> Option<&DegreeReport> {
        self.per_degree.iter().find(|d| d.k == k)
    }
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    /// Solve only degrees up to this value. Required when the equation
    /// violates the degree hypothesis.
    pub max_degree: Option<usize>,
    /// Buchberger pair reductions allowed per chart.
    pub chart_steps: u64,
    /// Wall-clock seconds allowed per chart, and for building each
    /// degree's resultant form.
    pub chart_seconds: f64,
    pub workers: usize,
    /// Optional wall-clock limit for the whole run.
    pub total_seconds: Option<f64>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            max_degree: None,
            chart_steps: 100_000,
            chart_seconds: 30.0,
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            total_seconds: None,
        }
    }
}

fn deadline_after(start: Instant, secs: f64, global: Option<Instant>) -> Instant {
    let own = start + Duration::from_secs_f64(secs.max(0.0));
    global.map_or(own, |g| own.min(g))
}

struct ChartOutcome {
    status: Status,
    detail: Option<String>,
    points: Vec<Vec<Rat>>,
    residuals: Vec<Residual>,
}

impl ChartOutcome {
    fn unresolved(detail: String) -> Self {
        ChartOutcome {
            status: Status::Unresolved,
            detail: Some(detail),
            points: Vec::new(),
            residuals: Vec::new(),
        }
    }

    fn empty() -> Self {
        ChartOutcome {
            status: Status::NoSolutions,
            detail: None,
            points: Vec::new(),
            residuals: Vec::new(),
        }
    }
}

/// The variables of chart `j`, where `c_j = 1` and `c_i = 0` for `i > j`:
/// `t` first when present, then `c_{j-1}` down to `c_0`, which is also the
/// lexicographic order used for elimination.
struct ChartVars {
    nvars: usize,
    /// New index of each original `c_i`; `None` for `c_j`.
    index: Vec<Option<usize>>,
    names: Vec<String>,
}

impl ChartVars {
    fn new(n: usize, j: usize, with_t: bool) -> Self {
        let mut index = vec![None; n];
        let mut names = Vec::new();
        if with_t {
            names.push("t".to_string());
        }
        for i in (0..j).rev() {
            index[i] = Some(names.len());
            names.push(format!("c{i}"));
        }
        ChartVars {
            nvars: names.len(),
            index,
            names,
        }
    }

    fn embed(&self, p: &MPoly, j: usize) -> MPoly {
        let p = restrict_to_chart(p, j);
        let map: Vec<usize> = self.index.iter().map(|i| i.unwrap_or(0)).collect();
        p.remap(self.nvars, &map)
    }
}

/// `p` with `c_j = 1` and `c_i = 0` for `i > j`.
fn restrict_to_chart(p: &MPoly, j: usize) -> MPoly {
    let mut p = p.substitute(j, &Rat::one());
    for i in j + 1..p.nvars() {
        p = p.substitute(i, &Rat::zero());
    }
    p
}

fn solve_chart(phis: &[MPoly], k: usize, j: usize, deadline: Instant, budget: &mut Budget) -> ChartOutcome {
    let n = 2 * k + 2;
    let Some(sat) = chart_resultant(k, j, Some(deadline)) else {
        return ChartOutcome::unresolved("resultant on this chart not computed within the time budget".into());
    };
    let sat_chart = restrict_to_chart(&sat, j);
    if sat_chart.is_zero() {
        return ChartOutcome::empty();
    }
    let with_t = !sat_chart.is_constant();
    let vars = ChartVars::new(n, j, with_t);
    let mut gens: Vec<MPoly> = phis
        .iter()
        .map(|p| vars.embed(p, j))
        .filter(|p| !p.is_zero())
        .collect();
    if with_t {
        let s = vars.embed(&sat, j);
        let t = MPoly::var(vars.nvars, 0);
        gens.push(&(&t * &s) - &MPoly::one(vars.nvars));
    }
    if gens.iter().any(|g| g.is_constant()) {
        return ChartOutcome::empty();
    }
    if vars.nvars == 0 {
        // Every coordinate is fixed by the chart.
        return ChartOutcome {
            status: Status::Resolved,
            detail: None,
            points: vec![chart_point(n, j, &vars, &[])],
            residuals: Vec::new(),
        };
    }
    if gens.is_empty() {
        return ChartOutcome::unresolved("system is not zero-dimensional".into());
    }

    let grevlex = MonOrder::grevlex(vars.nvars);
    let gb = match buchberger(&gens, &grevlex, budget) {
        Ok(gb) => gb,
        Err(e) => return ChartOutcome::unresolved(e.to_string()),
    };
    debug_assert!(verify_groebner(&gb), "grevlex basis fails the S-pair check");
    match gb.zero_dimensional {
        ZeroDim::Trivial => return ChartOutcome::empty(),
        ZeroDim::No => {
            return ChartOutcome::unresolved(
                "anomaly: saturated system is not zero-dimensional".into(),
            )
        }
        ZeroDim::Yes => {}
    }
    let order: Vec<usize> = (0..vars.nvars).collect();
    let mut residuals = Vec::new();
    let mut assignments = Vec::new();
    let res = extract(
        &gb.polys,
        &order,
        &vars.names,
        Vec::new(),
        budget,
        &mut assignments,
        &mut residuals,
    );
    if let Err(e) = res {
        return ChartOutcome::unresolved(e);
    }
    let chart = format!("c{j}");
    let residuals = residuals
        .into_iter()
        .map(|mut r: Residual| {
            r.k = k;
            r.chart = chart.clone();
            r
        })
        .collect();
    let points: Vec<Vec<Rat>> = assignments
        .iter()
        .map(|a| chart_point(n, j, &vars, a))
        .collect();
    ChartOutcome {
        status: Status::Resolved,
        detail: None,
        points,
        residuals,
    }
}

/// Coefficient tuple from a chart assignment indexed by chart variable.
fn chart_point(n: usize, j: usize, vars: &ChartVars, assignment: &[(usize, Rat)]) -> Vec<Rat> {
    let mut c = vec![Rat::zero(); n];
    c[j] = Rat::one();
    for (v, x) in assignment {
        if let Some(i) = vars.index.iter().position(|&ix| ix == Some(*v)) {
            c[i] = x.clone();
        }
    }
    c
}

/// Solves a zero-dimensional system whose lexicographic basis over
/// `order` (most significant first) may still need computing, collecting
/// every rational point and every root-free eliminant factor.
#[allow(clippy::too_many_arguments)]
fn extract(
    gens: &[MPoly],
    order: &[usize],
    names: &[String],
    fixed: Vec<(usize, Rat)>,
    budget: &mut Budget,
    points: &mut Vec<Vec<(usize, Rat)>>,
    residuals: &mut Vec<Residual>,
) -> std::result::Result<(), String> {
    let Some(&last) = order.last() else {
        if gens.iter().all(MPoly::is_zero) {
            points.push(fixed);
        }
        return Ok(());
    };
    let gens: Vec<MPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if gens.is_empty() {
        return Err("anomaly: positive-dimensional fibre".into());
    }
    let lex = MonOrder::with_vars(OrderKind::Lex, order.to_vec());
    let gb: GroebnerBasis = buchberger(&gens, &lex, budget).map_err(|e| e.to_string())?;
    debug_assert!(verify_groebner(&gb), "lex basis fails the S-pair check");
    match gb.zero_dimensional {
        ZeroDim::Trivial => return Ok(()),
        ZeroDim::No => return Err("anomaly: positive-dimensional fibre".into()),
        ZeroDim::Yes => {}
    }
    let eliminant = gb
        .polys
        .iter()
        .find_map(|p| p.as_univariate(last).filter(|u| !u.is_constant()))
        .ok_or_else(|| "anomaly: no univariate eliminant".to_string())?;
    let roots = rational_roots(&eliminant);
    if let Some(rest) = nonlinear_part(&eliminant, &roots) {
        residuals.push(Residual {
            k: 0,
            chart: String::new(),
            variable: names[last].clone(),
            fixed: fixed
                .iter()
                .map(|(v, x)| (names[*v].clone(), x.clone()))
                .collect(),
            factor: rest,
        });
    }
    let rest_order = &order[..order.len() - 1];
    for x in roots {
        let sub: Vec<MPoly> = gb.polys.iter().map(|p| p.substitute(last, &x)).collect();
        if sub.iter().any(|p| p.is_constant() && !p.is_zero()) {
            continue;
        }
        let mut fx = fixed.clone();
        fx.push((last, x));
        extract(&sub, rest_order, names, fx, budget, points, residuals)?;
    }
    Ok(())
}

/// Rational points of a zero-dimensional ideal and the root-free factors
/// met along the way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroDimSolution {
    /// Full coordinate vectors, indexed like the basis variables.
    pub points: Vec<Vec<Rat>>,
    /// Residual variables are named `x0, x1, ...`.
    pub residuals: Vec<Residual>,
}

/// Triangular extraction on a zero-dimensional basis: eliminant in the
/// least significant variable of the basis order, its rational roots,
/// back-substitution, repeat. Any basis order is accepted; lexicographic
/// bases are recomputed as needed.
pub fn solve_zero_dim(gb: &GroebnerBasis, budget: &mut Budget) -> std::result::Result<ZeroDimSolution, String> {
    match gb.zero_dimensional {
        ZeroDim::Trivial => {
            return Ok(ZeroDimSolution { points: Vec::new(), residuals: Vec::new() });
        }
        ZeroDim::No => return Err("ideal is not zero-dimensional".into()),
        ZeroDim::Yes => {}
    }
    let n = gb.polys.first().map_or(0, MPoly::nvars);
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let mut assignments = Vec::new();
    let mut residuals = Vec::new();
    extract(&gb.polys, &gb.order.vars, &names, Vec::new(), budget, &mut assignments, &mut residuals)?;
    let points = assignments
        .into_iter()
        .map(|a| {
            let mut p = vec![Rat::zero(); n];
            for (v, x) in a {
                p[v] = x;
            }
            p
        })
        .collect();
    Ok(ZeroDimSolution { points, residuals })
}

/// Solutions of exact degree `k`, with per-chart status.
pub fn extract_solutions(r: &REq, k: usize, opts: &SolveOptions) -> DegreeReport {
    extract_solutions_until(r, k, opts, None)
}

fn extract_solutions_until(
    r: &REq,
    k: usize,
    opts: &SolveOptions,
    global: Option<Instant>,
) -> DegreeReport {
    let start = Instant::now();
    let unresolved = |detail: String| DegreeReport {
        k,
        status: Status::Unresolved,
        detail: Some(detail),
        charts: Vec::new(),
        solutions: Vec::new(),
        elapsed: start.elapsed(),
    };
    if global.is_some_and(|g| start >= g) {
        return unresolved("time budget for the run exhausted".into());
    }
    let phis: Vec<MPoly> = coefficient_forms(r, k).into_iter().filter(|p| !p.is_zero()).collect();

    let charts: Vec<(ChartReport, Vec<Vec<Rat>>)> = (0..=2 * k + 1)
        .rev()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&j| {
            let t0 = Instant::now();
            let deadline = deadline_after(t0, opts.chart_seconds, global);
            let mut budget = Budget::new(opts.chart_steps, Some(deadline));
            let out = if t0 >= deadline {
                ChartOutcome::unresolved("time budget for the run exhausted".into())
            } else {
                solve_chart(&phis, k, j, deadline, &mut budget)
            };
            let report = ChartReport {
                id: format!("c{j}"),
                status: out.status,
                detail: out.detail,
                residuals: out.residuals,
                points: out.points.len(),
                steps: opts.chart_steps - budget.steps_left(),
                elapsed: t0.elapsed(),
            };
            (report, out.points)
        })
        .collect();

    let mut found = BTreeSet::new();
    for c in charts.iter().flat_map(|(_, pts)| pts) {
        let Ok(f) = RatFunc::from_tuple(c) else { continue };
        if f.degree() == k && verify_solution(r, &f).is_valid() {
            found.insert(f);
        }
    }
    let charts: Vec<ChartReport> = charts
        .into_iter()
        .map(|(mut c, _)| {
            if c.status == Status::Resolved && c.points == 0 && c.residuals.is_empty() {
                c.status = Status::NoSolutions;
            }
            c
        })
        .collect();
    let status = if charts.iter().any(|c| c.status == Status::Unresolved) {
        Status::Unresolved
    } else if found.is_empty() && charts.iter().all(|c| c.residuals.is_empty()) {
        Status::NoSolutions
    } else {
        Status::Resolved
    };
    DegreeReport {
        k,
        status,
        detail: None,
        charts,
        solutions: found.into_iter().collect(),
        elapsed: start.elapsed(),
    }
}

/// Runs every admissible degree and aggregates the results.
///
/// Fails with `HypothesisViolated` when the equation's degree is below the
/// kind's threshold and no `max_degree` is given.
pub fn solve_all(r: &REq, opts: &SolveOptions) -> Result<SolutionReport> {
    let start = Instant::now();
    let global = opts.total_seconds.map(|s| start + Duration::from_secs_f64(s));
    let bounds = BoundCertificate::for_equation(r);
    let (top, bound_top) = match (&bounds, opts.max_degree) {
        (Ok(b), Some(m)) => (m.min(b.degree_bound), b.degree_bound),
        (Ok(b), None) => (b.degree_bound, b.degree_bound),
        (Err(_), Some(m)) => (m, m),
        (Err(e), None) => return Err(e.clone()),
    };
    let bounds = bounds.ok();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers.max(1))
        .build()
        .expect("thread pool");
    let mut per_degree: Vec<DegreeReport> = pool.install(|| {
        (0..=top)
            .collect::<Vec<_>>()
            .par_iter()
            .map(|&k| extract_solutions_until(r, k, opts, global))
            .collect()
    });
    per_degree.extend((top + 1..=bound_top).map(|k| DegreeReport {
        k,
        status: Status::Skipped,
        detail: Some("above the requested maximum degree".into()),
        charts: Vec::new(),
        solutions: Vec::new(),
        elapsed: Duration::ZERO,
    }));

    let mut solutions: Vec<RatFunc> = per_degree
        .iter()
        .flat_map(|d| d.solutions.iter().cloned())
        .collect();
    solutions.sort();
    solutions.dedup();

    let checks = bounds.as_ref().map(|b| BoundChecks {
        count: num_bigint::BigUint::from(solutions.len()) <= b.count_bound,
        degree: solutions.iter().all(|f| f.degree() <= b.degree_bound),
        height: solutions
            .iter()
            .all(|f| b.height_bound.admits(&height_ratfunc(f).max_abs)),
    });

    Ok(SolutionReport {
        equation: r.clone(),
        bounds,
        checks,
        solutions,
        per_degree,
        elapsed: start.elapsed(),
    })
}

/// Whether the integer-coprime coefficient tuple of `f` lies in
/// `[-bound, bound]`.
pub fn in_box(f: &RatFunc, bound: i64) -> bool {
    let ints = integer_coprime(&f.tuple(f.degree())).expect("denominator is nonzero");
    ints.iter().all(|c| c.magnitude() <= &num_bigint::BigUint::from(bound.unsigned_abs()))
}

/// All solutions of degree at most `kmax` whose coefficient tuple lies in
/// `[-bound, bound]`, by exhaustive substitution.
pub fn brute_force_oracle(r: &REq, kmax: usize, bound: i64) -> Vec<RatFunc> {
    let mut seen = BTreeSet::new();
    let width = (2 * bound + 1) as usize;
    for k in 0..=kmax {
        let n = 2 * k + 2;
        let total = width.pow(n as u32);
        for idx in 0..total {
            let mut rest = idx;
            let c: Vec<Rat> = (0..n)
                .map(|_| {
                    let v = (rest % width) as i64 - bound;
                    rest /= width;
                    Rat::from_integer(v.into())
                })
                .collect();
            if let Ok(f) = RatFunc::from_tuple(&c) {
                seen.insert(f);
            }
        }
    }
    seen.into_iter()
        .filter(|f| in_box(f, bound) && verify_solution(r, f).is_valid())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::parse::{parse_equation, parse_ratfunc};
    use crate::EquationKind::{Difference, Differential};

    fn opts() -> SolveOptions {
        SolveOptions {
            workers: 2,
            ..SolveOptions::default()
        }
    }

    fn strings(v: &[RatFunc]) -> Vec<String> {
        let mut s: Vec<String> = v.iter().map(|f| f.to_string()).collect();
        s.sort();
        s
    }

    #[test]
    fn verification_examples() {
        let r = parse_equation(Difference, "(w^2+w+2*z^3)/w").unwrap();
        let v = verify_solution(&r, &parse_ratfunc("z^2").unwrap());
        assert!(v.is_valid());
        assert_eq!(v.lhs.to_string(), "z^2 + 2*z + 1");
        let r = parse_equation(Difference, "w^2").unwrap();
        assert!(!verify_solution(&r, &parse_ratfunc("z").unwrap()).is_valid());
        let r = parse_equation(Difference, "(w^2+z)/w").unwrap();
        let v = verify_solution(&r, &RatFunc::zero());
        assert!(v.undefined_composition() && !v.is_valid());
    }

    #[test]
    fn square_difference() {
        let r = parse_equation(Difference, "w^2").unwrap();
        let rep = solve_all(&r, &opts()).unwrap();
        assert_eq!(strings(&rep.solutions), ["0", "1"]);
        assert!(rep.fully_resolved());
        assert_eq!(rep.per_degree.len(), 1);
        let checks = rep.checks.unwrap();
        assert!(checks.height && checks.degree && !checks.count);
    }

    #[test]
    fn cubic_differential() {
        let r = parse_equation(Differential, "w^3 - w").unwrap();
        let rep = solve_all(&r, &opts()).unwrap();
        assert_eq!(strings(&rep.solutions), ["-1", "0", "1"]);
        assert!(rep.fully_resolved());
    }

    #[test]
    fn residual_reported() {
        // constants with c^2 = 2 are solutions over Q-bar only
        let r = parse_equation(Difference, "(2*w^2 - 2)/w").unwrap();
        let d = extract_solutions(&r, 0, &opts());
        assert!(d.solutions.is_empty());
        assert_eq!(d.status, Status::Resolved);
        assert!(d.charts.iter().flat_map(|c| &c.residuals).any(|x| x.factor.deg0() == 2));
    }

    #[test]
    fn hypothesis_needs_override() {
        let r = parse_equation(Differential, "w^2").unwrap();
        assert!(matches!(solve_all(&r, &opts()), Err(Error::HypothesisViolated { .. })));
        let o = SolveOptions { max_degree: Some(0), ..opts() };
        let rep = solve_all(&r, &o).unwrap();
        assert!(rep.bounds.is_none());
        assert_eq!(strings(&rep.solutions), ["0"]);
    }

    fn zero_dim_points(gens: &[MPoly]) -> ZeroDimSolution {
        let gb = buchberger(gens, &MonOrder::lex(2), &mut Budget::unlimited()).unwrap();
        let mut sol = solve_zero_dim(&gb, &mut Budget::unlimited()).unwrap();
        sol.points.sort();
        sol
    }

    #[test]
    fn triangular_extraction() {
        let (x, y) = (MPoly::var(2, 0), MPoly::var(2, 1));
        let one = MPoly::one(2);
        let int = |v: i64| Rat::from_integer(v.into());

        let s = zero_dim_points(&[&x - &y, &(&y * &y) - &one]);
        assert_eq!(s.points, vec![vec![int(-1), int(-1)], vec![int(1), int(1)]]);
        assert!(s.residuals.is_empty());

        let two = MPoly::constant(2, int(2));
        let s = zero_dim_points(&[&(&y * &y) - &two, &x - &y]);
        assert!(s.points.is_empty());
        assert_eq!(s.residuals.len(), 1);
        assert_eq!(s.residuals[0].to_string(), "x1^2 - 2");

        let s = zero_dim_points(&[&y * &(&y - &one), &x - &(&y * &y)]);
        assert_eq!(s.points, vec![vec![int(0), int(0)], vec![int(1), int(1)]]);

        let gb = buchberger(&[&(&x * &y) - &one], &MonOrder::lex(2), &mut Budget::unlimited()).unwrap();
        assert!(solve_zero_dim(&gb, &mut Budget::unlimited()).is_err());
    }

    #[test]
    fn oracle_examples() {
        let r = parse_equation(Difference, "w^2").unwrap();
        assert_eq!(strings(&brute_force_oracle(&r, 0, 2)), ["0", "1"]);
        let r = parse_equation(Differential, "w^3 - w").unwrap();
        assert_eq!(strings(&brute_force_oracle(&r, 0, 2)), ["-1", "0", "1"]);
    }
}
