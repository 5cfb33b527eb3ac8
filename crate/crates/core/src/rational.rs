//! Exact rationals and integer normalisation of rational tuples.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact rational number, always stored reduced with a positive
/// denominator (zero is `0/1`).
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Scales a tuple of rationals by a positive rational so that the result is
/// a tuple of coprime integers. Returns `None` if every entry is zero.
pub fn integer_coprime(coords: &[Rat]) -> Option<Vec<BigInt>> {
    if coords.iter().all(Zero::is_zero) {
        return None;
    }
    let lcm = coords
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coords
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    Some(ints.into_iter().map(|c| c / &g).collect())
}

/// Largest absolute value in a tuple of integers.
pub fn max_abs(coords: &[BigInt]) -> BigUint {
    coords
        .iter()
        .map(|c| c.abs().to_biguint().unwrap())
        .max()
        .unwrap_or_default()
}

/// Natural logarithm of a positive big integer, accurate to a few ulps even
/// beyond the `f64` exponent range.
pub fn ln_biguint(n: &BigUint) -> f64 {
    assert!(!n.is_zero(), "logarithm of zero");
    let bits = n.bits();
    if bits <= 1000 {
        return num_traits::ToPrimitive::to_f64(n).unwrap().ln();
    }
    let shift = bits - 64;
    let top = num_traits::ToPrimitive::to_f64(&(n >> shift)).unwrap();
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

pub fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
