//! Logarithmic Weil heights over Q.
//!
//! Over Q the height of a projective point is `log max |P_i|` once the
//! coordinates are scaled to coprime integers, so no places are summed.
//! Every height carries its exact integer maximum alongside the float so
//! inequalities between heights can be decided in integer arithmetic.

use num_bigint::{BigInt, BigUint};

use crate::equation::REq;
use crate::error::{Error, Result};
use crate::ratfunc::RatFunc;
use crate::rational::{integer_coprime, ln_biguint, max_abs, Rat};
use crate::upoly::UPoly;

#[derive(Clone, Debug, PartialEq)]
pub struct HeightReport {
    /// `log(max_abs)` in nats.
    pub value: f64,
    /// Largest absolute normalised coordinate; `exp(value)` exactly.
    pub max_abs: BigUint,
    /// The coordinates scaled by a positive rational to coprime integers.
    pub normalized_coords: Vec<BigInt>,
}

impl HeightReport {
    /// Height zero: every normalised coordinate is in `{-1, 0, 1}`.
    pub fn is_zero(&self) -> bool {
        self.max_abs == BigUint::from(1u32)
    }
}

pub fn height_projective(coords: &[Rat]) -> Result<HeightReport> {
    let normalized_coords = integer_coprime(coords).ok_or(Error::ZeroPoint)?;
    let max_abs = max_abs(&normalized_coords);
    Ok(HeightReport {
        value: ln_biguint(&max_abs),
        max_abs,
        normalized_coords,
    })
}

/// Height of the coefficient tuple of `f = f1 / f0` in the `2k + 2` layout
/// with `k = deg f`.
pub fn height_ratfunc(f: &RatFunc) -> HeightReport {
    height_projective(&f.tuple(f.degree())).expect("denominator is nonzero")
}

/// Projective height of a nonzero polynomial's coefficient tuple.
pub fn height_poly(p: &UPoly) -> Result<HeightReport> {
    height_projective(p.coeffs())
}

/// Height of `R` over the multiset of all rational coefficients of `P`, `Q`.
pub fn height_req(r: &REq) -> HeightReport {
    height_projective(&r.coefficient_multiset()).expect("Q is nonzero")
}
