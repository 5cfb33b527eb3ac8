//! Integral-domain abstraction and fraction-free determinants.

use crate::mpoly::MPoly;
use crate::rational::Rat;
use crate::upoly::UPoly;
use num_traits::{One, Zero};

/// An integral domain with exact division, as needed by Bareiss elimination.
pub trait Domain: Clone + PartialEq {
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact quotient; panics if `other` does not divide `self`.
    fn div_exact(&self, other: &Self) -> Self;
    /// `self * other`, or `None` if `cancel` fires first. Types whose
    /// products are cheap ignore `cancel`.
    fn mul_until(&self, other: &Self, _cancel: &dyn Fn() -> bool) -> Option<Self> {
        Some(self.mul(other))
    }
    fn div_exact_until(&self, other: &Self, _cancel: &dyn Fn() -> bool) -> Option<Self> {
        Some(self.div_exact(other))
    }
}

impl Domain for Rat {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Rat::zero()
    }
    fn one_like(&self) -> Self {
        Rat::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
}

impl Domain for UPoly {
    fn is_zero(&self) -> bool {
        UPoly::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        UPoly::zero()
    }
    fn one_like(&self) -> Self {
        UPoly::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Self {
        UPoly::div_exact(self, other).expect("inexact division in Bareiss step")
    }
}

impl Domain for MPoly {
    fn is_zero(&self) -> bool {
        MPoly::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        MPoly::zero(self.nvars())
    }
    fn one_like(&self) -> Self {
        MPoly::one(self.nvars())
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Self {
        MPoly::div_exact(self, other).expect("inexact division in Bareiss step")
    }
    fn mul_until(&self, other: &Self, cancel: &dyn Fn() -> bool) -> Option<Self> {
        MPoly::mul_until(self, other, cancel)
    }
    fn div_exact_until(&self, other: &Self, cancel: &dyn Fn() -> bool) -> Option<Self> {
        let q = MPoly::div_exact_until(self, other, cancel)?;
        Some(q.expect("inexact division in Bareiss step"))
    }
}

/// Determinant by single-step fraction-free (Bareiss) elimination.
///
/// `unit` is returned for the empty matrix.
pub fn det_bareiss<T: Domain>(m: Vec<Vec<T>>, unit: &T) -> T {
    det_bareiss_until(m, unit, &|| false).expect("never cancelled")
}

/// Bareiss elimination that polls `cancel` between entry updates and gives
/// up with `None` once it returns true.
pub fn det_bareiss_until<T: Domain>(
    mut m: Vec<Vec<T>>,
    unit: &T,
    cancel: &dyn Fn() -> bool,
) -> Option<T> {
    let n = m.len();
    if n == 0 {
        return Some(unit.clone());
    }
    debug_assert!(m.iter().all(|r| r.len() == n), "square matrix required");
    let mut negate = false;
    let mut prev = unit.clone();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Some(unit.zero_like()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                if cancel() {
                    return None;
                }
                let a = m[k][k].mul_until(&m[i][j], cancel)?;
                let b = m[i][k].mul_until(&m[k][j], cancel)?;
                let num = a.sub(&b);
                m[i][j] = if num.is_zero() {
                    num
                } else {
                    num.div_exact_until(&prev, cancel)?
                };
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Some(if negate { d.neg() } else { d })
}

/// Determinant by Laplace expansion along the first row. Exponential cost;
/// kept as an independent check on [`det_bareiss`] for small matrices.
pub fn det_cofactor_expansion<T: Domain>(m: &[Vec<T>], unit: &T) -> T {
    let n = m.len();
    if n == 0 {
        return unit.clone();
    }
    let mut acc = unit.zero_like();
    for (j, a) in m[0].iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let sub = minor(m, 0, j);
        let term = a.mul(&det_cofactor_expansion(&sub, unit));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// The matrix with row `r` and column `c` removed.
pub fn minor<T: Clone>(m: &[Vec<T>], r: usize, c: usize) -> Vec<Vec<T>> {
    m.iter()
        .enumerate()
        .filter(|&(i, _)| i != r)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|&(j, _)| j != c)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}
