//! The equation `f(z+1) = R(z, f)` or `f'(z) = R(z, f)` with
//! `R(z, X/Y) = P(X, Y) / Q(X, Y)`.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::bivariate::WPoly;
use crate::error::{Error, Result};
use crate::form::BiForm;
use crate::ratfunc::RatFunc;
use crate::rational::{integer_coprime, Rat};
use crate::resultant::resultant;
use crate::upoly::UPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EquationKind {
    /// `f(z + 1) = R(z, f(z))`
    Difference,
    /// `f'(z) = R(z, f(z))`
    Differential,
}

impl EquationKind {
    /// Minimum `deg_w(R)` for which the degree bound applies.
    pub fn min_degree(self) -> usize {
        match self {
            EquationKind::Difference => 2,
            EquationKind::Differential => 3,
        }
    }

    /// Extra degree picked up by the cleared equation: 1 for the shift,
    /// 2 for the derivative.
    pub fn offset(self) -> usize {
        match self {
            EquationKind::Difference => 1,
            EquationKind::Differential => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            EquationKind::Difference => "difference",
            EquationKind::Differential => "differential",
        }
    }
}

impl fmt::Display for EquationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for EquationKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "difference" => Ok(EquationKind::Difference),
            "differential" => Ok(EquationKind::Differential),
            other => Err(format!("unknown equation kind '{other}'")),
        }
    }
}

/// A canonicalised equation.
///
/// `P` and `Q` are coprime forms of degree `d` over Q[z]; their coefficients
/// have no common factor in Q[z], their rational coefficients are coprime
/// integers, and the first nonzero coefficient (scanning `P` then `Q`, each
/// slot from its highest power of `z`) is positive.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct REq {
    kind: EquationKind,
    p: BiForm,
    q: BiForm,
    res: UPoly,
}

impl REq {
    pub fn from_forms(kind: EquationKind, p: BiForm, q: BiForm) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if p.degree() != q.degree() {
            return Err(Error::FormDegreeMismatch(p.degree(), q.degree()));
        }
        if p.degree() == 0 {
            return Err(Error::DegreeTooLow(0));
        }
        let content = p
            .coeffs()
            .iter()
            .chain(q.coeffs())
            .fold(UPoly::zero(), |g, c| g.gcd(c));
        let strip = |f: &BiForm| f.map_coeffs(|c| c.div_exact(&content).expect("content divides"));
        let (p, q) = (strip(&p), strip(&q));

        let flat: Vec<Rat> = p
            .coeffs()
            .iter()
            .chain(q.coeffs())
            .flat_map(|c| c.coeffs().iter().cloned())
            .collect();
        let ints = integer_coprime(&flat).expect("Q is nonzero");
        let k = flat.iter().position(|c| !c.is_zero()).unwrap();
        let mut scale = Rat::from_integer(ints[k].clone()) / &flat[k];
        let first = p
            .coeffs()
            .iter()
            .chain(q.coeffs())
            .find(|c| !c.is_zero())
            .unwrap();
        if (first.lead() * &scale).is_negative() {
            scale = -scale;
        }
        let (p, q) = (p.map_coeffs(|c| c.scale(&scale)), q.map_coeffs(|c| c.scale(&scale)));

        let res = resultant(&p, &q)?;
        if res.is_zero() {
            return Err(Error::CommonFactor);
        }
        Ok(REq { kind, p, q, res })
    }

    /// Builds the equation from `R = num / den` with `num`, `den` in
    /// Q[z][w], cancelling their common factor first.
    pub fn from_rational(kind: EquationKind, num: &WPoly, den: &WPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let g = num.gcd(den);
        let n = num.div_exact(&g).expect("gcd divides");
        let m = den.div_exact(&g).expect("gcd divides");
        let d = n.degree_w().unwrap_or(0).max(m.degree_w().unwrap_or(0));
        if d == 0 {
            return Err(Error::DegreeTooLow(0));
        }
        Self::from_forms(kind, n.homogenize(d), m.homogenize(d))
    }

    pub fn with_kind(&self, kind: EquationKind) -> Self {
        REq { kind, ..self.clone() }
    }

    pub fn kind(&self) -> EquationKind {
        self.kind
    }

    pub fn p(&self) -> &BiForm {
        &self.p
    }

    pub fn q(&self) -> &BiForm {
        &self.q
    }

    /// `deg_w(R)`.
    pub fn d(&self) -> usize {
        self.p.degree()
    }

    /// `deg_z(R)`: the largest `z`-degree among the coefficients of `P`, `Q`.
    pub fn degz(&self) -> usize {
        self.p.degz().max(self.q.degz())
    }

    /// `Res(P, Q)`, nonzero by construction.
    pub fn resultant(&self) -> &UPoly {
        &self.res
    }

    /// `(P(f1, f0), Q(f1, f0))`.
    pub fn compose_parts(&self, f: &RatFunc) -> (UPoly, UPoly) {
        (self.p.compose(f), self.q.compose(f))
    }

    /// `R(z, f(z))`, or `None` when `Q(f1, f0)` vanishes identically.
    pub fn apply(&self, f: &RatFunc) -> Option<RatFunc> {
        let (n, d) = self.compose_parts(f);
        if d.is_zero() {
            return None;
        }
        Some(RatFunc::reduce(&n, &d).expect("nonzero denominator"))
    }

    /// All rational coefficients of `P` and `Q`.
    pub fn coefficient_multiset(&self) -> Vec<Rat> {
        self.p
            .coeffs()
            .iter()
            .chain(self.q.coeffs())
            .flat_map(|c| c.coeffs().iter().cloned())
            .collect()
    }

    /// Numerator `P(w, 1)` and denominator `Q(w, 1)` as elements of Q[z][w].
    pub fn dehomogenized(&self) -> (WPoly, WPoly) {
        (WPoly::from_form(&self.p), WPoly::from_form(&self.q))
    }
}

fn is_atomic_denominator(text: &str) -> bool {
    text.chars().all(|c| c.is_ascii_alphanumeric() || c == '^')
}

impl fmt::Display for REq {
    /// Canonical text of `R(z, w)`, which parses back to the same equation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.p.to_string_w();
        let den = self.q.to_string_w();
        if den == "1" {
            return f.write_str(&num);
        }
        let num = if is_atomic_denominator(&num) {
            num
        } else {
            format!("({num})")
        };
        if is_atomic_denominator(&den) {
            write!(f, "{num}/{den}")
        } else {
            write!(f, "{num}/({den})")
        }
    }
}

impl fmt::Debug for REq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "REq({}: {})", self.kind, self)
    }
}
