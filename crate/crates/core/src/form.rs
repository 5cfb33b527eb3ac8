//! Homogeneous forms in `(X, Y)` with coefficients in Q[z].

use std::fmt;

use num_traits::Zero;

use crate::ratfunc::RatFunc;
use crate::upoly::UPoly;

/// `F(X, Y) = sum_i coeffs[i] X^(d-i) Y^i`, a form of degree `d` over Q[z].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiForm {
    coeffs: Vec<UPoly>,
}

impl BiForm {
    /// Builds a form from its `d + 1` coefficients. Panics on an empty vector.
    pub fn new(coeffs: Vec<UPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a form of degree d has d + 1 coefficients");
        BiForm { coeffs }
    }

    /// Convenience constructor from integer coefficient lists
    /// (`coeffs[i][j]` is the `z^j` coefficient of the `X^(d-i) Y^i` slot).
    pub fn from_ints(coeffs: &[&[i64]]) -> Self {
        Self::new(coeffs.iter().map(|c| UPoly::from_ints(c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[UPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &UPoly {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(UPoly::is_zero)
    }

    /// Maximum degree in `z` over all coefficients (0 for the zero form).
    pub fn degz(&self) -> usize {
        self.coeffs.iter().map(UPoly::deg0).max().unwrap_or(0)
    }

    pub fn map_coeffs(&self, f: impl Fn(&UPoly) -> UPoly) -> Self {
        BiForm::new(self.coeffs.iter().map(f).collect())
    }

    /// `F(x, y)` for polynomials `x`, `y` in Q[z].
    pub fn eval(&self, x: &UPoly, y: &UPoly) -> UPoly {
        let d = self.degree();
        let xp = powers(x, d);
        let yp = powers(y, d);
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .fold(UPoly::zero(), |acc, (i, a)| &acc + &(a * &(&xp[d - i] * &yp[i])))
    }

    /// `F(f1, f0)` for `f = f1 / f0`.
    pub fn compose(&self, f: &RatFunc) -> UPoly {
        self.eval(f.numer(), f.denom())
    }

    /// Product of forms.
    pub fn mul(&self, other: &BiForm) -> BiForm {
        let mut out = vec![UPoly::zero(); self.degree() + other.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        BiForm::new(out)
    }

    pub fn add(&self, other: &BiForm) -> BiForm {
        assert_eq!(self.degree(), other.degree());
        BiForm::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Dehomogenisation `F(w, 1)` as coefficients of `w^0 .. w^d`.
    pub fn dehomogenize(&self) -> Vec<UPoly> {
        self.coeffs.iter().rev().cloned().collect()
    }

    /// Renders `F(w, 1)` as a polynomial in `z` and `w`.
    pub fn to_string_w(&self) -> String {
        let mut terms: Vec<(bool, String)> = Vec::new();
        let d = self.degree();
        for (i, a) in self.coeffs.iter().enumerate() {
            let wpow = d - i;
            for (j, c) in a.coeffs().iter().enumerate().rev() {
                if c.is_zero() {
                    continue;
                }
                let mut factors = Vec::new();
                let neg = c < &Zero::zero();
                let abs = if neg { -c.clone() } else { c.clone() };
                let unit = abs == num_traits::One::one();
                if !unit || (j == 0 && wpow == 0) {
                    factors.push(crate::rational::fmt_rat(&abs));
                }
                match j {
                    0 => {}
                    1 => factors.push("z".into()),
                    _ => factors.push(format!("z^{j}")),
                }
                match wpow {
                    0 => {}
                    1 => factors.push("w".into()),
                    _ => factors.push(format!("w^{wpow}")),
                }
                terms.push((neg, factors.join("*")));
            }
        }
        if terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (neg, t)) in terms.iter().enumerate() {
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(t);
        }
        out
    }
}

fn powers(x: &UPoly, n: usize) -> Vec<UPoly> {
    let mut v = Vec::with_capacity(n + 1);
    v.push(UPoly::one());
    for i in 0..n {
        let next = &v[i] * x;
        v.push(next);
    }
    v
}

impl fmt::Debug for BiForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({c})*X^{}*Y^{}", d - i, i))
            .collect();
        write!(f, "BiForm[{}]", parts.join(" + "))
    }
}
