//! Buchberger's algorithm over Q with fraction-free integer arithmetic.
//!
//! Internally every polynomial is kept primitive over Z with its terms in
//! ascending order, so the leading term is the last entry. Pairs are
//! managed with the Gebauer–Möller update, which applies both the coprime
//! leading monomial criterion and the chain criterion, and are selected by
//! the normal strategy (smallest lcm degree, then smallest index pair).

use std::cmp::Ordering;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::mpoly::{MPoly, MonOrder, Monomial};
use crate::rational::{integer_coprime, Rat};

/// Step and wall-clock limits shared by every Gröbner computation of one
/// work item.
#[derive(Clone, Debug)]
pub struct Budget {
    steps_left: u64,
    deadline: Option<Instant>,
    polls: u32,
}

impl Budget {
    pub fn new(steps: u64, deadline: Option<Instant>) -> Self {
        Budget {
            steps_left: steps,
            deadline,
            polls: 0,
        }
    }

    pub fn unlimited() -> Self {
        Self::new(u64::MAX, None)
    }

    pub fn steps_left(&self) -> u64 {
        self.steps_left
    }

    fn take_step(&mut self) -> bool {
        if self.steps_left == 0 {
            return false;
        }
        self.steps_left -= 1;
        !self.past_deadline()
    }

    fn past_deadline(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }

    /// Cheap poll for inner loops: looks at the clock every 64 calls.
    fn poll(&mut self) -> bool {
        self.polls = self.polls.wrapping_add(1);
        !self.polls.is_multiple_of(64) || !self.past_deadline()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error(
        "Groebner budget exhausted after {steps} pair reductions \
         ({basis_len} basis elements, {pairs_left} pairs pending)"
    )]
    BudgetExhausted {
        steps: u64,
        basis_len: usize,
        pairs_left: usize,
    },
}

/// Zero-dimensionality of the ideal generated by a basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroDim {
    Yes,
    No,
    /// The ideal is the whole ring (`1` is in the basis).
    Trivial,
}

/// A reduced Gröbner basis with monic elements, sorted by leading monomial
/// in decreasing order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub order: MonOrder,
    pub polys: Vec<MPoly>,
    pub zero_dimensional: ZeroDim,
}

impl GroebnerBasis {
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys
            .iter()
            .map(|p| p.leading_term(&self.order).unwrap().0.clone())
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.zero_dimensional == ZeroDim::Trivial
    }

    /// Normal form of `f` modulo the basis, up to a nonzero rational factor.
    pub fn normal_form(&self, f: &MPoly) -> MPoly {
        let basis: Vec<GPoly> = self
            .polys
            .iter()
            .map(|p| GPoly::from_mpoly(p, &self.order))
            .collect();
        let refs: Vec<&GPoly> = basis.iter().collect();
        let g = GPoly::from_mpoly(f, &self.order);
        let nf = reduce(g, &refs, &self.order, &mut Budget::unlimited()).expect("unlimited");
        nf.to_mpoly(f.nvars())
    }

    pub fn contains(&self, f: &MPoly) -> bool {
        self.normal_form(f).is_zero()
    }
}

/// Tri-state zero-dimensionality from leading monomials: `Yes` iff every
/// variable of the order has a pure power among them.
pub fn is_zero_dimensional(gb: &GroebnerBasis) -> ZeroDim {
    zero_dim_status(&gb.leading_monomials(), &gb.order)
}

fn zero_dim_status(lms: &[Monomial], order: &MonOrder) -> ZeroDim {
    if lms.iter().any(Monomial::is_one) {
        return ZeroDim::Trivial;
    }
    let all = order
        .vars
        .iter()
        .all(|&v| lms.iter().any(|m| m.pure_power_of() == Some(v)));
    if all {
        ZeroDim::Yes
    } else {
        ZeroDim::No
    }
}

#[derive(Clone, Debug)]
struct GPoly {
    /// Ascending under the order; the leading term is last.
    terms: Vec<(Monomial, BigInt)>,
}

impl GPoly {
    fn from_mpoly(p: &MPoly, order: &MonOrder) -> Self {
        let coeffs: Vec<Rat> = p.terms().map(|(_, c)| c.clone()).collect();
        let ints = integer_coprime(&coeffs).unwrap_or_default();
        let mut terms: Vec<(Monomial, BigInt)> =
            p.terms().map(|(m, _)| m.clone()).zip(ints).collect();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        GPoly { terms }
    }

    fn to_mpoly(&self, nvars: usize) -> MPoly {
        let lc = match self.terms.last() {
            Some((_, c)) => Rat::from_integer(c.clone()),
            None => return MPoly::zero(nvars),
        };
        MPoly::from_terms(
            nvars,
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), Rat::from_integer(c.clone()) / &lc)),
        )
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Monomial {
        &self.terms.last().unwrap().0
    }

    fn lc(&self) -> &BigInt {
        &self.terms.last().unwrap().1
    }

    fn make_primitive(&mut self) {
        primitive_in_place(&mut self.terms);
        if self.terms.last().is_some_and(|(_, c)| c.is_negative()) {
            for (_, c) in &mut self.terms {
                *c = -&*c;
            }
        }
    }
}

fn primitive_in_place(terms: &mut [(Monomial, BigInt)]) {
    let mut g = BigInt::zero();
    for (_, c) in terms.iter() {
        g = g.gcd(c);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for (_, c) in terms.iter_mut() {
        *c /= &g;
    }
}

/// `a * p - b * m * q` for ascending term lists where the caller has
/// already removed the cancelling leading terms.
fn combine(
    p: &[(Monomial, BigInt)],
    a: &BigInt,
    q: &[(Monomial, BigInt)],
    b: &BigInt,
    m: &Monomial,
    order: &MonOrder,
) -> Vec<(Monomial, BigInt)> {
    let mut out = Vec::with_capacity(p.len() + q.len());
    let (mut i, mut j) = (0, 0);
    let a_one = a.is_one();
    let mut qm: Option<Monomial> = q.first().map(|t| t.0.mul(m));
    while i < p.len() || j < q.len() {
        let ord = match (&qm, i < p.len()) {
            (None, _) => Ordering::Less,
            (Some(_), false) => Ordering::Greater,
            (Some(mq), true) => order.cmp(&p[i].0, mq),
        };
        match ord {
            Ordering::Less => {
                let c = if a_one { p[i].1.clone() } else { &p[i].1 * a };
                out.push((p[i].0.clone(), c));
                i += 1;
            }
            Ordering::Greater => {
                out.push((qm.take().unwrap(), -(&q[j].1 * b)));
                j += 1;
                qm = q.get(j).map(|t| t.0.mul(m));
            }
            Ordering::Equal => {
                let c = if a_one { p[i].1.clone() } else { &p[i].1 * a } - &q[j].1 * b;
                if !c.is_zero() {
                    out.push((qm.take().unwrap(), c));
                }
                i += 1;
                j += 1;
                qm = q.get(j).map(|t| t.0.mul(m));
            }
        }
    }
    out
}

/// Full reduction of `p` modulo `basis`. The result is primitive with a
/// positive leading coefficient.
fn reduce(
    p: GPoly,
    basis: &[&GPoly],
    order: &MonOrder,
    budget: &mut Budget,
) -> Result<GPoly, ()> {
    let masks: Vec<(u64, &Monomial)> = basis
        .iter()
        .map(|g| (g.lm().support_mask(), g.lm()))
        .collect();
    let mut rest = p.terms;
    // Irreducible terms, collected in descending order.
    let mut done: Vec<(Monomial, BigInt)> = Vec::new();
    let mut since_content = 0u32;
    while let Some((m, c)) = rest.pop() {
        let mask = m.support_mask();
        let hit = masks
            .iter()
            .position(|(gm, lm)| gm & !mask == 0 && lm.divides(&m));
        let Some(k) = hit else {
            done.push((m, c));
            continue;
        };
        if !budget.poll() {
            return Err(());
        }
        let g = basis[k];
        let lc_g = g.lc();
        let gc = c.gcd(lc_g);
        let a = lc_g / &gc;
        let b = &c / &gc;
        let q = g.lm().quotient_of(&m);
        let tail = &g.terms[..g.terms.len() - 1];
        rest = combine(&rest, &a, tail, &b, &q, order);
        if !a.is_one() {
            for (_, d) in &mut done {
                *d *= &a;
            }
        }
        since_content += 1;
        if since_content >= 8 {
            since_content = 0;
            let mut g = BigInt::zero();
            for (_, d) in done.iter().chain(rest.iter()) {
                g = g.gcd(d);
                if g.is_one() {
                    break;
                }
            }
            if !g.is_zero() && !g.is_one() {
                for (_, d) in done.iter_mut().chain(rest.iter_mut()) {
                    *d /= &g;
                }
            }
        }
    }
    done.reverse();
    let mut out = GPoly { terms: done };
    out.make_primitive();
    Ok(out)
}

fn s_poly(f: &GPoly, g: &GPoly, order: &MonOrder) -> GPoly {
    let lcm = f.lm().lcm(g.lm());
    let gc = f.lc().gcd(g.lc());
    let a = g.lc() / &gc;
    let b = f.lc() / &gc;
    let mf = f.lm().quotient_of(&lcm);
    let mg = g.lm().quotient_of(&lcm);
    let ftail: Vec<(Monomial, BigInt)> = f.terms[..f.terms.len() - 1]
        .iter()
        .map(|(m, c)| (m.mul(&mf), c.clone()))
        .collect();
    let terms = combine(&ftail, &a, &g.terms[..g.terms.len() - 1], &b, &mg, order);
    let mut s = GPoly { terms };
    s.make_primitive();
    s
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    deg: u32,
}

struct Engine<'a> {
    order: &'a MonOrder,
    polys: Vec<GPoly>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl<'a> Engine<'a> {
    fn pair(&self, i: usize, j: usize) -> Pair {
        let lcm = self.polys[i].lm().lcm(self.polys[j].lm());
        let deg = lcm.degree();
        Pair {
            i: i.min(j),
            j: i.max(j),
            lcm,
            deg,
        }
    }

    /// Gebauer–Möller update after appending `h`.
    fn insert(&mut self, h: GPoly) {
        let hi = self.polys.len();
        let hlm = h.lm().clone();
        self.polys.push(h);
        self.active.push(true);

        let mut cands: Vec<(Pair, bool)> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| {
                let coprime = self.polys[g].lm().coprime(&hlm);
                (self.pair(g, hi), coprime)
            })
            .collect();
        let mut kept: Vec<(Pair, bool)> = Vec::new();
        while let Some((p, coprime)) = cands.pop() {
            let dominated = !coprime
                && cands
                    .iter()
                    .chain(kept.iter())
                    .any(|(q, _)| q.lcm.divides(&p.lcm));
            if !dominated {
                kept.push((p, coprime));
            }
        }
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|(_, coprime)| !coprime)
            .map(|(p, _)| p)
            .collect();

        let polys = &self.polys;
        self.pairs.retain(|p| {
            if !hlm.divides(&p.lcm) {
                return true;
            }
            let l1 = polys[p.i].lm().lcm(&hlm);
            let l2 = polys[p.j].lm().lcm(&hlm);
            l1 == p.lcm || l2 == p.lcm
        });
        self.pairs.extend(new_pairs);

        for g in 0..hi {
            if self.active[g] && hlm.divides(self.polys[g].lm()) {
                self.active[g] = false;
            }
        }
    }

    fn select(&mut self) -> Option<Pair> {
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.deg
                    .cmp(&b.deg)
                    .then_with(|| self.order.cmp(&a.lcm, &b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn active_refs(&self) -> Vec<&GPoly> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, &a)| a)
            .map(|(p, _)| p)
            .collect()
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `order`.
pub fn buchberger(
    gens: &[MPoly],
    order: &MonOrder,
    budget: &mut Budget,
) -> Result<GroebnerBasis, GroebnerError> {
    let nvars = gens.first().map(MPoly::nvars).unwrap_or(0);
    let mut engine = Engine {
        order,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    let mut steps = 0u64;
    let trivial = || GroebnerBasis {
        order: order.clone(),
        polys: vec![MPoly::one(nvars)],
        zero_dimensional: ZeroDim::Trivial,
    };
    let exhausted = |e: &Engine, steps| GroebnerError::BudgetExhausted {
        steps,
        basis_len: e.active.iter().filter(|&&a| a).count(),
        pairs_left: e.pairs.len(),
    };

    let mut inputs: Vec<GPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| GPoly::from_mpoly(g, order))
        .collect();
    inputs.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    for g in inputs {
        let h = {
            let refs = engine.active_refs();
            reduce(g, &refs, order, budget).map_err(|_| exhausted(&engine, steps))?
        };
        if h.is_zero() {
            continue;
        }
        if h.lm().is_one() {
            return Ok(trivial());
        }
        engine.insert(h);
    }

    while let Some(pair) = engine.select() {
        if !budget.take_step() {
            engine.pairs.push(pair);
            return Err(exhausted(&engine, steps));
        }
        steps += 1;
        let s = s_poly(&engine.polys[pair.i], &engine.polys[pair.j], order);
        if s.is_zero() {
            continue;
        }
        let h = {
            let refs = engine.active_refs();
            reduce(s, &refs, order, budget).map_err(|_| exhausted(&engine, steps))?
        };
        if h.is_zero() {
            continue;
        }
        if h.lm().is_one() {
            return Ok(trivial());
        }
        engine.insert(h);
    }

    // Minimal basis: active elements have pairwise non-dividing leading
    // monomials. Inter-reduce the tails.
    let minimal: Vec<GPoly> = engine
        .polys
        .iter()
        .zip(&engine.active)
        .filter(|(_, &a)| a)
        .map(|(p, _)| p.clone())
        .collect();
    let mut out: Vec<MPoly> = minimal
        .iter()
        .map(|p| reduce_keep_lead(p, &minimal, order, nvars))
        .collect();
    out.sort_by(|a, b| {
        let la = a.leading_term(order).unwrap().0;
        let lb = b.leading_term(order).unwrap().0;
        order.cmp(lb, la)
    });
    let lms: Vec<Monomial> = out
        .iter()
        .map(|p| p.leading_term(order).unwrap().0.clone())
        .collect();
    let zd = zero_dim_status(&lms, order);
    Ok(GroebnerBasis {
        order: order.clone(),
        polys: out,
        zero_dimensional: zd,
    })
}

/// Monic fully reduced form of `p` modulo the other elements of a minimal
/// basis, computed with rational arithmetic on the tail.
fn reduce_keep_lead(p: &GPoly, minimal: &[GPoly], order: &MonOrder, nvars: usize) -> MPoly {
    let lc = Rat::from_integer(p.lc().clone());
    let mut result = MPoly::zero(nvars);
    result.add_term(p.lm().clone(), Rat::one());
    let mut rest: Vec<(Monomial, Rat)> = p.terms[..p.terms.len() - 1]
        .iter()
        .map(|(m, c)| (m.clone(), Rat::from_integer(c.clone()) / &lc))
        .collect();
    let others: Vec<&GPoly> = minimal.iter().filter(|q| q.lm() != p.lm()).collect();
    while let Some((m, c)) = rest.pop() {
        match others.iter().find(|g| g.lm().divides(&m)) {
            None => result.add_term(m, c),
            Some(g) => {
                let q = g.lm().quotient_of(&m);
                let f = &c / Rat::from_integer(g.lc().clone());
                let mut merged: Vec<(Monomial, Rat)> = Vec::with_capacity(rest.len() + g.terms.len());
                let sub: Vec<(Monomial, Rat)> = g.terms[..g.terms.len() - 1]
                    .iter()
                    .map(|(gm, gc)| (gm.mul(&q), Rat::from_integer(gc.clone()) * &f))
                    .collect();
                let (mut i, mut j) = (0, 0);
                while i < rest.len() || j < sub.len() {
                    let ord = if i == rest.len() {
                        Ordering::Greater
                    } else if j == sub.len() {
                        Ordering::Less
                    } else {
                        order.cmp(&rest[i].0, &sub[j].0)
                    };
                    match ord {
                        Ordering::Less => {
                            merged.push(rest[i].clone());
                            i += 1;
                        }
                        Ordering::Greater => {
                            merged.push((sub[j].0.clone(), -sub[j].1.clone()));
                            j += 1;
                        }
                        Ordering::Equal => {
                            let v = &rest[i].1 - &sub[j].1;
                            if !v.is_zero() {
                                merged.push((rest[i].0.clone(), v));
                            }
                            i += 1;
                            j += 1;
                        }
                    }
                }
                rest = merged;
            }
        }
    }
    result
}

/// Checks the Gröbner property directly: every S-polynomial of basis pairs
/// reduces to zero modulo the basis.
pub fn verify_groebner(gb: &GroebnerBasis) -> bool {
    let order = &gb.order;
    let basis: Vec<GPoly> = gb
        .polys
        .iter()
        .map(|p| GPoly::from_mpoly(p, order))
        .collect();
    let refs: Vec<&GPoly> = basis.iter().collect();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = s_poly(&basis[i], &basis[j], order);
            let r = reduce(s, &refs, order, &mut Budget::unlimited()).expect("unlimited");
            if !r.is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn v(n: usize, i: usize) -> MPoly {
        MPoly::var(n, i)
    }

    fn c(n: usize, k: i64) -> MPoly {
        MPoly::constant(n, rat(k))
    }

    #[test]
    fn textbook_lex_example() {
        // {x^2 - 1, xy - 1} with x > y gives {x - y, y^2 - 1}
        let (x, y) = (v(2, 0), v(2, 1));
        let gens = vec![&(&x * &x) - &c(2, 1), &(&x * &y) - &c(2, 1)];
        let gb = buchberger(&gens, &MonOrder::lex(2), &mut Budget::unlimited()).unwrap();
        assert_eq!(gb.polys, vec![&x - &y, &(&y * &y) - &c(2, 1)]);
        assert_eq!(gb.zero_dimensional, ZeroDim::Yes);
        assert!(verify_groebner(&gb));
        for g in &gens {
            assert!(gb.contains(g));
        }
    }

    #[test]
    fn already_a_basis() {
        let gens = vec![v(2, 0), v(2, 1)];
        for order in [MonOrder::lex(2), MonOrder::grevlex(2)] {
            let gb = buchberger(&gens, &order, &mut Budget::unlimited()).unwrap();
            assert_eq!(gb.polys, vec![v(2, 0), v(2, 1)]);
        }
    }

    #[test]
    fn inconsistent_system_is_trivial() {
        let gens = vec![&v(1, 0) - &c(1, 1), &v(1, 0) - &c(1, 2)];
        let gb = buchberger(&gens, &MonOrder::lex(1), &mut Budget::unlimited()).unwrap();
        assert_eq!(gb.polys, vec![MPoly::one(1)]);
        assert_eq!(is_zero_dimensional(&gb), ZeroDim::Trivial);
    }

    #[test]
    fn positive_dimensional_detected() {
        let gens = vec![&(&v(2, 0) * &v(2, 1)) - &c(2, 1)];
        let gb = buchberger(&gens, &MonOrder::grevlex(2), &mut Budget::unlimited()).unwrap();
        assert_eq!(is_zero_dimensional(&gb), ZeroDim::No);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let (x, y, z) = (v(3, 0), v(3, 1), v(3, 2));
        let gens = vec![
            &(&(&x * &x) + &(&y * &z)) - &c(3, 1),
            &(&(&y * &y) + &(&x * &z)) - &c(3, 2),
            &(&(&z * &z) + &(&x * &y)) - &c(3, 3),
        ];
        let err = buchberger(&gens, &MonOrder::lex(3), &mut Budget::new(1, None)).unwrap_err();
        assert!(matches!(err, GroebnerError::BudgetExhausted { .. }));
        let gb = buchberger(&gens, &MonOrder::lex(3), &mut Budget::unlimited()).unwrap();
        assert!(verify_groebner(&gb));
        assert_eq!(gb.zero_dimensional, ZeroDim::Yes);
    }
}
