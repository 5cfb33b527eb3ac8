//! Polynomials in `w` with coefficients in Q[z], i.e. elements of Q[z][w].
//!
//! Used by the expression parser to reduce rational expressions in `z` and
//! `w`, and as an independent gcd oracle for homogeneous forms.

use std::ops::{Add, Mul, Neg, Sub};

use crate::form::BiForm;
use crate::rational::Rat;
use crate::upoly::UPoly;

/// `coeffs[i]` is the coefficient of `w^i`; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct WPoly {
    coeffs: Vec<UPoly>,
}

impl WPoly {
    pub fn new(mut coeffs: Vec<UPoly>) -> Self {
        while coeffs.last().is_some_and(UPoly::is_zero) {
            coeffs.pop();
        }
        WPoly { coeffs }
    }

    pub fn zero() -> Self {
        WPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_z(UPoly::one())
    }

    pub fn from_z(p: UPoly) -> Self {
        Self::new(vec![p])
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_z(UPoly::constant(c))
    }

    pub fn w() -> Self {
        Self::new(vec![UPoly::zero(), UPoly::one()])
    }

    pub fn z() -> Self {
        Self::from_z(UPoly::z())
    }

    pub fn coeffs(&self) -> &[UPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> UPoly {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `w`, or `None` for zero.
    pub fn degree_w(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> UPoly {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// The value as a constant of Q when it has no `z` or `w`.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.coeffs.len() {
            0 => Some(Rat::from_integer(0.into())),
            1 if self.coeffs[0].is_constant() => Some(self.coeffs[0].coeff(0)),
            _ => None,
        }
    }

    pub fn scale_z(&self, p: &UPoly) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * p).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Monic gcd of the Q[z] coefficients.
    pub fn content(&self) -> UPoly {
        self.coeffs
            .iter()
            .fold(UPoly::zero(), |g, c| g.gcd(c))
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        Self::new(
            self.coeffs
                .iter()
                .map(|a| a.div_exact(&c).expect("content divides"))
                .collect(),
        )
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &WPoly) -> WPoly {
        let db = b.degree_w().expect("pseudo-division by zero");
        let lb = b.lead();
        let mut r = self.clone();
        while let Some(dr) = r.degree_w() {
            if dr < db {
                break;
            }
            let lr = r.lead();
            let mut shifted = vec![UPoly::zero(); dr - db];
            shifted.extend(b.coeffs.iter().map(|c| c * &lr));
            r = &r.scale_z(&lb) - &WPoly::new(shifted);
        }
        r
    }

    /// Greatest common divisor in Q[z][w], normalised so the leading Q[z]
    /// coefficient is monic. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &WPoly) -> WPoly {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        let cont = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree_w() < b.degree_w() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.scale_z(&cont).normalized()
    }

    fn normalized(&self) -> WPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = self.lead().lead().recip();
        Self::new(self.coeffs.iter().map(|c| c.scale(&inv)).collect())
    }

    /// Exact quotient in Q[z][w], or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &WPoly) -> Option<WPoly> {
        let dd = d.degree_w().expect("division by zero");
        let ld = d.lead();
        let mut r = self.clone();
        let mut q = vec![UPoly::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(dr) = r.degree_w() {
            if dr < dd {
                return None;
            }
            let c = r.lead().div_exact(&ld)?;
            let mut shifted = vec![UPoly::zero(); dr - dd];
            shifted.extend(d.coeffs.iter().map(|x| x * &c));
            r = &r - &WPoly::new(shifted);
            q[dr - dd] = c;
        }
        Some(WPoly::new(q))
    }

    /// Homogenises to a form of degree `d >= deg_w`.
    pub fn homogenize(&self, d: usize) -> BiForm {
        assert!(self.degree_w().unwrap_or(0) <= d);
        BiForm::new((0..=d).map(|i| self.coeff(d - i)).collect())
    }

    pub fn from_form(f: &BiForm) -> WPoly {
        WPoly::new(f.dehomogenize())
    }

    /// Substitutes `w = num/den` and clears `den^deg`: returns
    /// `sum_i c_i num^i den^(deg - i)` for the given `deg >= deg_w`.
    pub fn eval_homogeneous(&self, num: &UPoly, den: &UPoly, deg: usize) -> UPoly {
        self.homogenize(deg).eval(num, den)
    }
}

impl Add for &WPoly {
    type Output = WPoly;
    fn add(self, rhs: &WPoly) -> WPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        WPoly::new((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Sub for &WPoly {
    type Output = WPoly;
    fn sub(self, rhs: &WPoly) -> WPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        WPoly::new((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl Mul for &WPoly {
    type Output = WPoly;
    fn mul(self, rhs: &WPoly) -> WPoly {
        if self.is_zero() || rhs.is_zero() {
            return WPoly::zero();
        }
        let mut out = vec![UPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        WPoly::new(out)
    }
}

impl Neg for &WPoly {
    type Output = WPoly;
    fn neg(self) -> WPoly {
        WPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Whether two forms of positive degree share a factor of positive degree
/// in `(X, Y)`, decided by gcd computations rather than resultants.
pub fn forms_share_factor(p: &BiForm, q: &BiForm) -> bool {
    // Y divides a form exactly when its X^d coefficient vanishes.
    if p.coeff(0).is_zero() && q.coeff(0).is_zero() {
        return true;
    }
    let g = WPoly::from_form(p).gcd(&WPoly::from_form(q));
    g.degree_w().is_some_and(|d| d > 0)
}
