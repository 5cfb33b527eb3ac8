//! Sparse multivariate polynomials over Q and monomial orders.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::rational::{fmt_rat, Rat};
use crate::upoly::UPoly;

const POLL_EVERY: usize = 4096;

/// Exponent vector of a monomial.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(pub SmallVec<[u16; 12]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn from_exps(e: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(e))
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming `self` divides `o`.
    pub fn quotient_of(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| b - a).collect())
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, o: &Monomial) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bit `i` is set when variable `i` (mod 64) occurs.
    pub fn support_mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |m, (i, _)| m | (1u64 << (i % 64)))
    }

    /// If the monomial is a power of a single variable, that variable.
    pub fn pure_power_of(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderKind {
    Lex,
    Grevlex,
}

/// A monomial order on a chosen subset of variables, listed from most to
/// least significant. Variables outside `vars` must not occur in
/// polynomials compared under the order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonOrder {
    pub kind: OrderKind,
    pub vars: Vec<usize>,
}

impl MonOrder {
    /// Variables `0 > 1 > ... > n-1`.
    pub fn lex(n: usize) -> Self {
        MonOrder {
            kind: OrderKind::Lex,
            vars: (0..n).collect(),
        }
    }

    pub fn grevlex(n: usize) -> Self {
        MonOrder {
            kind: OrderKind::Grevlex,
            vars: (0..n).collect(),
        }
    }

    pub fn with_vars(kind: OrderKind, vars: Vec<usize>) -> Self {
        MonOrder { kind, vars }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            OrderKind::Lex => {
                for &v in &self.vars {
                    match a.0[v].cmp(&b.0[v]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::Grevlex => {
                let da: u32 = self.vars.iter().map(|&v| a.0[v] as u32).sum();
                let db: u32 = self.vars.iter().map(|&v| b.0[v] as u32).sum();
                match da.cmp(&db) {
                    Ordering::Equal => {}
                    o => return o,
                }
                for &v in self.vars.iter().rev() {
                    match a.0[v].cmp(&b.0[v]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// A polynomial in `nvars` variables with rational coefficients; no zero
/// coefficients are stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(Monomial::var(nvars, i), Rat::one())
    }

    pub fn term(m: Monomial, c: Rat) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { nvars, terms }
    }

    pub fn from_terms(nvars: usize, it: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in it {
            assert_eq!(m.nvars(), nvars);
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_value(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// True if every term has total degree `deg` (the zero polynomial
    /// qualifies for every degree).
    pub fn is_homogeneous_of(&self, deg: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == deg)
    }

    /// Largest term under `order`.
    pub fn leading_term(&self, order: &MonOrder) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes `value` for variable `var`; the variable count is kept.
    pub fn substitute(&self, var: usize, value: &Rat) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            let mut mm = m.clone();
            mm.0[var] = 0;
            let mut cc = c.clone();
            for _ in 0..e {
                cc *= value;
            }
            out.add_term(mm, cc);
        }
        out
    }

    /// Re-indexes variables: variable `i` becomes `map[i]` in a ring with
    /// `nvars` variables.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> Self {
        let mut out = Self::zero(nvars);
        for (m, c) in &self.terms {
            let mut mm = Monomial::one(nvars);
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    mm.0[map[i]] += e;
                }
            }
            out.add_term(mm, c.clone());
        }
        out
    }

    /// Variables that occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&v| self.terms.keys().any(|m| m.0[v] > 0))
            .collect()
    }

    /// The polynomial as an element of Q[x_var] when no other variable
    /// occurs.
    pub fn as_univariate(&self, var: usize) -> Option<UPoly> {
        let mut coeffs = Vec::new();
        for (m, c) in &self.terms {
            if m.0.iter().enumerate().any(|(i, &e)| i != var && e > 0) {
                return None;
            }
            let e = m.0[var] as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, Rat::zero());
            }
            coeffs[e] = c.clone();
        }
        Some(UPoly::new(coeffs))
    }

    /// Embeds a univariate polynomial as a polynomial in variable `var`.
    pub fn from_univariate(nvars: usize, var: usize, p: &UPoly) -> Self {
        let mut out = Self::zero(nvars);
        for (e, c) in p.coeffs().iter().enumerate() {
            let mut m = Monomial::one(nvars);
            m.0[var] = e as u16;
            out.add_term(m, c.clone());
        }
        out
    }

    /// Exact quotient by `d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        self.div_exact_until(d, &|| false).expect("never cancelled")
    }

    /// [`MPoly::div_exact`] that polls `cancel` every few thousand term
    /// operations; the outer `None` means it was cancelled.
    pub fn div_exact_until(&self, d: &MPoly, cancel: &dyn Fn() -> bool) -> Option<Option<MPoly>> {
        assert!(!d.is_zero(), "division by zero polynomial");
        // BTreeMap order on exponent vectors is lex with variable 0 most
        // significant, so the last entry is the lex leading term.
        let (dm, dc) = d.terms.iter().next_back().unwrap();
        let inv = dc.recip();
        let mut rem = self.clone();
        let mut quot = MPoly::zero(self.nvars);
        let mut work = 0usize;
        while let Some((m, c)) = rem.terms.iter().next_back() {
            if !dm.divides(m) {
                return Some(None);
            }
            work += d.terms.len();
            if work >= POLL_EVERY {
                work = 0;
                if cancel() {
                    return None;
                }
            }
            let qm = dm.quotient_of(m);
            let qc = c * &inv;
            for (tm, tc) in &d.terms {
                rem.add_term(tm.mul(&qm), -(tc * &qc));
            }
            quot.add_term(qm, qc);
        }
        Some(Some(quot))
    }

    /// Product that polls `cancel` every few thousand term products.
    pub fn mul_until(&self, rhs: &MPoly, cancel: &dyn Fn() -> bool) -> Option<MPoly> {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = MPoly::zero(self.nvars);
        let mut work = 0usize;
        for (a, x) in &self.terms {
            work += rhs.terms.len();
            if work >= POLL_EVERY {
                work = 0;
                if cancel() {
                    return None;
                }
            }
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        Some(out)
    }

    /// Renders with the given variable names; terms in decreasing lex order.
    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mut factors = Vec::new();
            if !a.is_one() || m.is_one() {
                factors.push(fmt_rat(&a));
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(format!("{}^{e}", names[i])),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{i}")).collect();
        write!(f, "MPoly({})", self.to_string_with(&names))
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.mul_until(rhs, &|| false).expect("never cancelled")
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}
