//! Rational functions in Q(z) in canonical (coprime, monic denominator) form.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::Rat;
use crate::upoly::UPoly;

/// `f = f1 / f0` with `gcd(f1, f0) = 1` and `f0` monic.
///
/// The zero function is `0 / 1` and has degree 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    f1: UPoly,
    f0: UPoly,
}

impl RatFunc {
    /// Cancels the common factor of `f1` and `f0` and makes `f0` monic.
    pub fn reduce(f1: &UPoly, f0: &UPoly) -> Result<Self> {
        if f0.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if f1.is_zero() {
            return Ok(Self::zero());
        }
        let g = f1.gcd(f0);
        let n = f1.div_exact(&g).expect("gcd divides numerator");
        let d = f0.div_exact(&g).expect("gcd divides denominator");
        let inv = d.lead().recip();
        Ok(RatFunc {
            f1: n.scale(&inv),
            f0: d.scale(&inv),
        })
    }

    pub fn zero() -> Self {
        RatFunc {
            f1: UPoly::zero(),
            f0: UPoly::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        RatFunc {
            f1: UPoly::constant(c),
            f0: UPoly::one(),
        }
    }

    pub fn polynomial(p: UPoly) -> Self {
        RatFunc {
            f1: p,
            f0: UPoly::one(),
        }
    }

    pub fn numer(&self) -> &UPoly {
        &self.f1
    }

    pub fn denom(&self) -> &UPoly {
        &self.f0
    }

    pub fn is_zero(&self) -> bool {
        self.f1.is_zero()
    }

    /// `max(deg f1, deg f0)`.
    pub fn degree(&self) -> usize {
        self.f1.deg0().max(self.f0.deg0())
    }

    /// Coefficient tuple `(c_0, .., c_k, c_{k+1}, .., c_{2k+1})` with the
    /// numerator in the first `k + 1` slots and the denominator in the rest.
    ///
    /// Panics if `k < self.degree()`.
    pub fn tuple(&self, k: usize) -> Vec<Rat> {
        assert!(k >= self.degree(), "layout degree below function degree");
        (0..=k)
            .map(|i| self.f1.coeff(i))
            .chain((0..=k).map(|i| self.f0.coeff(i)))
            .collect()
    }

    /// Inverse of [`RatFunc::tuple`]: reads a `2k + 2` tuple.
    pub fn from_tuple(c: &[Rat]) -> Result<Self> {
        assert!(c.len() >= 2 && c.len().is_multiple_of(2), "tuple length must be 2k + 2");
        let h = c.len() / 2;
        Self::reduce(&UPoly::new(c[..h].to_vec()), &UPoly::new(c[h..].to_vec()))
    }

    /// `f(z + 1)`.
    pub fn shift(&self) -> Self {
        Self::reduce(&self.f1.shift(), &self.f0.shift()).expect("shift keeps denominator nonzero")
    }

    /// `f'(z)` by the quotient rule.
    pub fn derivative(&self) -> Self {
        let num = &(&self.f1.derivative() * &self.f0) - &(&self.f0.derivative() * &self.f1);
        Self::reduce(&num, &(&self.f0 * &self.f0)).expect("square of nonzero is nonzero")
    }

    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.f0.eval(x);
        (!d.is_zero()).then(|| self.f1.eval(x) / d)
    }
}

fn atom(p: &UPoly) -> String {
    let s = p.to_string();
    if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 || s.contains('/') {
        format!("({s})")
    } else {
        s
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.f0 == UPoly::one() {
            write!(f, "{}", self.f1)
        } else {
            write!(f, "{}/{}", atom(&self.f1), atom(&self.f0))
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl Ord for RatFunc {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.f0.cmp(&other.f0))
            .then_with(|| self.f1.cmp(&other.f1))
    }
}

impl PartialOrd for RatFunc {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> UPoly {
        UPoly::from_ints(c)
    }

    #[test]
    fn reduce_examples() {
        let f = RatFunc::reduce(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap();
        assert_eq!((f.numer(), f.denom()), (&p(&[1, 1]), &p(&[1])));
        let f = RatFunc::reduce(&p(&[0, 2]), &p(&[2])).unwrap();
        assert_eq!((f.numer(), f.denom()), (&p(&[0, 1]), &p(&[1])));
        let f = RatFunc::reduce(&p(&[1, 2, 1]), &p(&[1, 1])).unwrap();
        assert_eq!((f.numer(), f.denom()), (&p(&[1, 1]), &p(&[1])));
        assert_eq!(RatFunc::reduce(&p(&[1]), &UPoly::zero()), Err(Error::ZeroDenominator));
    }

    #[test]
    fn zero_has_degree_zero() {
        let z = RatFunc::reduce(&UPoly::zero(), &p(&[3, 1])).unwrap();
        assert_eq!(z, RatFunc::zero());
        assert_eq!(z.degree(), 0);
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn display_and_tuple() {
        let f = RatFunc::reduce(&p(&[1, 3]), &p(&[2])).unwrap();
        assert_eq!(f.to_string(), "3/2*z + 1/2");
        let g = RatFunc::reduce(&p(&[1, 0, 1]), &p(&[-2, 1])).unwrap();
        assert_eq!(g.to_string(), "(z^2 + 1)/(z - 2)");
        assert_eq!(RatFunc::from_tuple(&g.tuple(3)).unwrap(), g);
    }

    proptest! {
        #[test]
        fn reduce_is_idempotent(n in prop::collection::vec(-5i64..=5, 0..5),
                                d in prop::collection::vec(-5i64..=5, 1..5)) {
            let (n, d) = (p(&n), p(&d));
            prop_assume!(!d.is_zero());
            let f = RatFunc::reduce(&n, &d).unwrap();
            let g = RatFunc::reduce(f.numer(), f.denom()).unwrap();
            prop_assert_eq!(&f, &g);
            prop_assert_eq!(f.numer().gcd(f.denom()), UPoly::one());
        }
    }
}
