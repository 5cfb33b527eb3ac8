//! Random generators and independent oracles shared by the property tests
//! and the acceptance run. Nothing here calls the library's own checks.
#![allow(dead_code)]

use std::collections::BTreeSet;

use malmquist_core::bounds::{count_bound, per_degree_component_bound, coarse_degree_bound};
use malmquist_core::system::{coefficient_forms, phi_slot_count};
use malmquist_core::{
    buchberger, BiForm, Budget, EquationKind, MPoly, MonOrder, Monomial, Rat, RatFunc, REq, UPoly,
};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use rand::Rng;

pub type CaseResult = Result<(), String>;

// ---------- generators ----------

pub fn int_poly<R: Rng>(rng: &mut R, max_deg: usize, c: i64) -> UPoly {
    let n = rng.gen_range(0..=max_deg) + 1;
    let v: Vec<i64> = (0..n).map(|_| rng.gen_range(-c..=c)).collect();
    UPoly::from_ints(&v)
}

pub fn nonzero_poly<R: Rng>(rng: &mut R, max_deg: usize, c: i64) -> UPoly {
    loop {
        let p = int_poly(rng, max_deg, c);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn random_ratfunc<R: Rng>(rng: &mut R, max_deg: usize, c: i64) -> RatFunc {
    let f1 = int_poly(rng, max_deg, c);
    let f0 = nonzero_poly(rng, max_deg, c);
    RatFunc::reduce(&f1, &f0).expect("nonzero denominator")
}

/// A canonical equation with `deg_w R = d` exactly and `deg_z R <= max_degz`.
pub fn random_req<R: Rng>(rng: &mut R, kind: EquationKind, d: usize, max_degz: usize, c: i64) -> REq {
    loop {
        let degz = rng.gen_range(0..=max_degz);
        let form = |rng: &mut R| {
            BiForm::new(
                (0..=d)
                    .map(|_| if rng.gen_bool(0.6) { int_poly(rng, degz, c) } else { UPoly::zero() })
                    .collect(),
            )
        };
        let p = form(rng);
        let q = form(rng);
        if let Ok(r) = REq::from_forms(kind, p, q) {
            if r.d() == d {
                return r;
            }
        }
    }
}

/// Degree admissible for the kind's bounds: 2 or 3 for difference, 3 for
/// differential.
pub fn random_admissible_req<R: Rng>(rng: &mut R, kind: EquationKind, max_degz: usize, c: i64) -> REq {
    let d = match kind {
        EquationKind::Difference => rng.gen_range(2..=3),
        EquationKind::Differential => 3,
    };
    random_req(rng, kind, d, max_degz, c)
}

pub fn random_kind<R: Rng>(rng: &mut R) -> EquationKind {
    if rng.gen_bool(0.5) {
        EquationKind::Difference
    } else {
        EquationKind::Differential
    }
}

// ---------- independent height arithmetic ----------

/// `exp(h)` of a projective tuple: clear denominators, divide by the gcd,
/// take the largest absolute value.
pub fn height_int(coords: &[Rat]) -> BigUint {
    let l = coords.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: Vec<BigInt> = coords.iter().map(|c| c.numer() * (&l / c.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    assert!(!g.is_zero(), "all-zero tuple");
    ints.iter().map(|x| (x / &g).abs().to_biguint().unwrap()).max().unwrap()
}

pub fn ratfunc_height(f: &RatFunc) -> BigUint {
    let t: Vec<Rat> = f.numer().coeffs().iter().chain(f.denom().coeffs()).cloned().collect();
    height_int(&t)
}

pub fn req_height(r: &REq) -> BigUint {
    let t: Vec<Rat> = r
        .p()
        .coeffs()
        .iter()
        .chain(r.q().coeffs())
        .flat_map(|c| c.coeffs().iter().cloned())
        .collect();
    height_int(&t)
}

fn pow2(n: usize) -> BigUint {
    BigUint::one() << n
}

fn factorial(n: usize) -> BigUint {
    (1..=n as u64).map(BigUint::from).product()
}

/// `R(z, f(z))`; an identically vanishing denominator gives `1/0`.
fn composed(r: &REq, f: &RatFunc) -> (UPoly, UPoly) {
    match r.apply(f) {
        Some(g) => (g.numer().clone(), g.denom().clone()),
        None => (UPoly::one(), UPoly::zero()),
    }
}

// ---------- property checks ----------

/// `d deg f <= deg R(z, f(z)) + (2d - 1) deg_z R`.
pub fn degree_lemma(r: &REq, f: &RatFunc) -> CaseResult {
    let (n, d0) = composed(r, f);
    let deg_rf = n.deg0().max(d0.deg0());
    let (d, degz) = (r.d(), r.degz());
    if d * f.degree() <= deg_rf + (2 * d - 1) * degz {
        Ok(())
    } else {
        Err(format!("R = {r}, f = {f}: {d}*{} > {deg_rf} + {}*{degz}", f.degree(), 2 * d - 1))
    }
}

/// `h(f(z+1)) <= h(f) + deg f log 2 + log(deg f + 1)`, decided on integers.
pub fn shift_height(f: &RatFunc) -> CaseResult {
    let k = f.degree();
    let lhs = ratfunc_height(&f.shift());
    let rhs = ratfunc_height(f) * pow2(k) * BigUint::from(k + 1);
    (lhs <= rhs).then_some(()).ok_or_else(|| format!("f = {f}: {lhs} > {rhs}"))
}

/// `h(f') <= 2 h(f) + 4 deg f log 2`, decided on integers.
pub fn derivative_height(f: &RatFunc) -> CaseResult {
    let k = f.degree();
    let lhs = ratfunc_height(&f.derivative());
    let hf = ratfunc_height(f);
    let rhs = &hf * &hf * pow2(4 * k);
    (lhs <= rhs).then_some(()).ok_or_else(|| format!("f = {f}: {lhs} > {rhs}"))
}

/// `d h(f) <= h(R(z, f)) + (2d-1) h(R) + (deg Res + 4d degz + (6d-3) deg f
/// + 1) log 2 + log (2d-1)!`, exponentiated.
pub fn height_lemma(r: &REq, f: &RatFunc) -> CaseResult {
    let (d, degz, k) = (r.d(), r.degz(), f.degree());
    let (n, d0) = composed(r, f);
    let t: Vec<Rat> = n.coeffs().iter().chain(d0.coeffs()).cloned().collect();
    let h_rf = height_int(&t);
    let lhs = Pow::pow(&ratfunc_height(f), d as u32);
    let c = Pow::pow(&req_height(r), (2 * d - 1) as u32)
        * pow2(r.resultant().deg0() + 4 * d * degz + (6 * d - 3) * k + 1)
        * factorial(2 * d - 1);
    let rhs = h_rf * c;
    (lhs <= rhs).then_some(()).ok_or_else(|| format!("R = {r}, f = {f}"))
}

/// The cleared equation, expanded directly from an unreduced pair.
pub fn cleared(r: &REq, f1: &UPoly, f0: &UPoly) -> UPoly {
    let p = r.p().eval(f1, f0);
    let q = r.q().eval(f1, f0);
    match r.kind() {
        EquationKind::Difference => &(&f1.shift() * &q) - &(&f0.shift() * &p),
        EquationKind::Differential => {
            let w = &(&f1.derivative() * f0) - &(&f0.derivative() * f1);
            &(&w * &q) - &(&(f0 * f0) * &p)
        }
    }
}

/// `Phi_i(c)` equals the `z^i` coefficient of the directly expanded
/// cleared equation, slot by slot.
pub fn phi_matches_substitution(r: &REq, c: &[Rat]) -> CaseResult {
    let k = c.len() / 2 - 1;
    let f1 = UPoly::new(c[..=k].to_vec());
    let f0 = UPoly::new(c[k + 1..].to_vec());
    let direct = cleared(r, &f1, &f0);
    let phis = coefficient_forms(r, k);
    let slots = phi_slot_count(r, k);
    if phis.len() != slots {
        return Err(format!("{} forms, expected {slots}", phis.len()));
    }
    if direct.deg0() >= slots && !direct.is_zero() {
        return Err(format!("direct expansion has degree {} >= {slots}", direct.deg0()));
    }
    for (i, phi) in phis.iter().enumerate() {
        if phi.eval(c) != direct.coeff(i) {
            return Err(format!("R = {r}, c = {c:?}: slot {i} differs"));
        }
    }
    Ok(())
}

/// Whether `f1/f0` solves the equation, by direct substitution.
pub fn solves(r: &REq, f1: &UPoly, f0: &UPoly) -> bool {
    !f0.is_zero() && !r.q().eval(f1, f0).is_zero() && cleared(r, f1, f0).is_zero()
}

/// Every solution of degree `<= kmax` with integer-coprime coefficient
/// tuple in `[-bound, bound]`, by enumeration.
pub fn oracle(r: &REq, kmax: usize, bound: i64) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    let width = (2 * bound + 1) as usize;
    for k in 0..=kmax {
        let n = 2 * k + 2;
        for idx in 0..width.pow(n as u32) {
            let mut rest = idx;
            let c: Vec<i64> = (0..n)
                .map(|_| {
                    let v = (rest % width) as i64 - bound;
                    rest /= width;
                    v
                })
                .collect();
            // one representative per projective point up to sign and scale
            let g = c.iter().fold(0i64, |g, &x| g.gcd(&x));
            if g != 1 || c.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
                continue;
            }
            let f1 = UPoly::from_ints(&c[..=k]);
            let f0 = UPoly::from_ints(&c[k + 1..]);
            if solves(r, &f1, &f0) {
                let f = RatFunc::reduce(&f1, &f0).unwrap();
                if in_box(&f, bound) {
                    out.insert(f.to_string());
                }
            }
        }
    }
    out
}

pub fn in_box(f: &RatFunc, bound: i64) -> bool {
    ratfunc_height(f) <= BigUint::from(bound as u64)
}

/// The closed-form count bound equals the sum of the per-degree bounds,
/// and both equal an independent evaluation of the geometric series.
pub fn count_identity(kind: EquationKind, d: usize, degz: usize) -> CaseResult {
    let b = d + kind.offset();
    let top = match kind {
        EquationKind::Difference => 3 * degz,
        EquationKind::Differential => 5 * degz,
    };
    let series: BigUint = (0..=top).map(|k| Pow::pow(&BigUint::from(b), (b * k + degz) as u32)).sum();
    let per: BigUint = (0..=coarse_degree_bound(kind, degz))
        .map(|k| per_degree_component_bound(kind, d, degz, k))
        .sum();
    let closed = count_bound(kind, d, degz).map_err(|e| e.to_string())?;
    if closed == series && per == series {
        Ok(())
    } else {
        Err(format!("{kind} d={d} degz={degz}: closed {closed}, per-degree {per}, series {series}"))
    }
}

/// A small random ideal in three variables.
pub fn random_ideal<R: Rng>(rng: &mut R) -> Vec<MPoly> {
    let n = 3;
    let count = rng.gen_range(2..=3);
    (0..count)
        .map(|_| {
            let terms = rng.gen_range(1..=3);
            MPoly::from_terms(
                n,
                (0..terms).map(|_| {
                    let e: Vec<u16> = (0..n).map(|_| rng.gen_range(0..=1)).collect();
                    (Monomial::from_exps(&e), Rat::from_integer(rng.gen_range(-3i64..=3).into()))
                }),
            )
        })
        .filter(|p| !p.is_zero())
        .collect()
}

/// Computes a basis under `order` and checks, independently of the
/// library's own verifier, that every S-polynomial reduces to zero and
/// that every generator lies in the ideal of the basis. `Ok(false)` when
/// the budget ran out.
pub fn groebner_closed(gens: &[MPoly], order: &MonOrder) -> Result<bool, String> {
    let deadline = std::time::Instant::now() + std::time::Duration::from_secs(2);
    let Ok(gb) = buchberger(gens, order, &mut Budget::new(500, Some(deadline))) else {
        return Ok(false);
    };
    let basis = &gb.polys;
    for (i, f) in basis.iter().enumerate() {
        for g in &basis[i + 1..] {
            let s = s_poly(f, g, order);
            if !reduce(&s, basis, order).is_zero() {
                return Err(format!("S({f:?}, {g:?}) does not reduce to zero"));
            }
        }
    }
    for g in gens {
        if !reduce(g, basis, order).is_zero() {
            return Err(format!("generator {g:?} not in the ideal of the basis"));
        }
    }
    Ok(true)
}

fn lead(p: &MPoly, order: &MonOrder) -> (Monomial, Rat) {
    let (m, c) = p.leading_term(order).expect("nonzero");
    (m.clone(), c.clone())
}

fn s_poly(f: &MPoly, g: &MPoly, order: &MonOrder) -> MPoly {
    let (mf, cf) = lead(f, order);
    let (mg, cg) = lead(g, order);
    let l = mf.lcm(&mg);
    let a = f.mul_monomial(&mf.quotient_of(&l), &cf.recip());
    let b = g.mul_monomial(&mg.quotient_of(&l), &cg.recip());
    &a - &b
}

/// Full multivariate division remainder.
fn reduce(p: &MPoly, basis: &[MPoly], order: &MonOrder) -> MPoly {
    let mut p = p.clone();
    let mut rem = MPoly::zero(p.nvars());
    while !p.is_zero() {
        let (m, c) = lead(&p, order);
        match basis.iter().find(|b| lead(b, order).0.divides(&m)) {
            Some(b) => {
                let (bm, bc) = lead(b, order);
                p = &p - &b.mul_monomial(&bm.quotient_of(&m), &(&c / &bc));
            }
            None => {
                rem = &rem + &MPoly::term(m.clone(), c.clone());
                p = &p - &MPoly::term(m, c);
            }
        }
    }
    rem
}

/// Runs `case` on `n` seeded draws and stops at the first failure.
pub fn run_cases<F>(n: usize, seed: u64, mut case: F) -> CaseResult
where
    F: FnMut(&mut rand_chacha::ChaCha8Rng) -> CaseResult,
{
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for i in 0..n {
        case(&mut rng).map_err(|e| format!("case {i}: {e}"))?;
    }
    Ok(())
}
