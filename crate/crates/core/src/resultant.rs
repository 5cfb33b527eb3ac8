//! Sylvester matrices, resultants over Q[z] and Bezout cofactors.
//!
//! Basis convention: monomials `X^j Y^(deg - j)` are listed by decreasing
//! `j`, and the `A`-block precedes the `B`-block. Row `i < d` of the
//! Sylvester matrix holds `X^(d-1-i) Y^i * P` and row `d + i` holds
//! `X^(d-1-i) Y^i * Q`, both in the basis of forms of degree `2d - 1`.
//! Every sign below follows from this fixed layout.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::form::BiForm;
use crate::ring::{det_bareiss, minor, Domain};
use crate::upoly::UPoly;

/// The `2d x 2d` coordinate matrix of `(A, B) -> A P + B Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylMat {
    pub dim: usize,
    pub entries: Vec<Vec<UPoly>>,
}

/// Sylvester rows for two coefficient lists of equal length `d + 1`, given in
/// decreasing powers of the first variable.
pub fn sylvester_rows<T: Domain>(p: &[T], q: &[T]) -> Vec<Vec<T>> {
    assert_eq!(p.len(), q.len());
    assert!(!p.is_empty());
    let d = p.len() - 1;
    let zero = p[0].zero_like();
    let n = 2 * d;
    let mut rows = Vec::with_capacity(n);
    for src in [p, q] {
        for shift in 0..d {
            let mut row = vec![zero.clone(); n];
            for (j, c) in src.iter().enumerate() {
                row[shift + j] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

fn check_degrees(p: &BiForm, q: &BiForm) -> Result<usize> {
    if p.degree() != q.degree() {
        return Err(Error::FormDegreeMismatch(p.degree(), q.degree()));
    }
    if p.degree() == 0 {
        return Err(Error::DegreeTooLow(0));
    }
    Ok(p.degree())
}

pub fn sylvester_matrix(p: &BiForm, q: &BiForm) -> Result<SylMat> {
    let d = check_degrees(p, q)?;
    Ok(SylMat {
        dim: 2 * d,
        entries: sylvester_rows(p.coeffs(), q.coeffs()),
    })
}

impl SylMat {
    pub fn determinant(&self) -> UPoly {
        det_bareiss(self.entries.clone(), &UPoly::one())
    }
}

/// `Res(P, Q)` in Q[z]; zero exactly when `P` and `Q` share a factor of
/// positive degree in `(X, Y)`.
pub fn resultant(p: &BiForm, q: &BiForm) -> Result<UPoly> {
    Ok(sylvester_matrix(p, q)?.determinant())
}

/// Which coordinate power the cofactor identity targets: `X^(2d-1)`
/// (index 1) or `Y^(2d-1)` (index 0).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    X,
    Y,
}

impl Target {
    pub fn from_index(i: usize) -> Self {
        if i == 1 {
            Target::X
        } else {
            Target::Y
        }
    }
}

/// Forms `A, B` of degree `d - 1` with `A P + B Q = Res(P, Q) * T^(2d-1)`,
/// each coefficient an explicit `(2d-1) x (2d-1)` minor (Cramer's rule).
pub fn bezout_cofactors(p: &BiForm, q: &BiForm, target: Target) -> Result<(BiForm, BiForm)> {
    let syl = sylvester_matrix(p, q)?;
    if syl.determinant().is_zero() {
        return Err(Error::SingularSystem);
    }
    let d = p.degree();
    let n = syl.dim;
    let col = match target {
        Target::X => 0,
        Target::Y => n - 1,
    };
    let coeffs: Vec<UPoly> = (0..n)
        .into_par_iter()
        .map(|r| {
            let m = det_bareiss(minor(&syl.entries, r, col), &UPoly::one());
            if (r + col) % 2 == 0 {
                m
            } else {
                -&m
            }
        })
        .collect();
    Ok((
        BiForm::new(coeffs[..d].to_vec()),
        BiForm::new(coeffs[d..].to_vec()),
    ))
}

/// Monomial form `c * X^(deg-i) * Y^i` helper used to express identities.
pub fn monomial_form(deg: usize, i: usize, c: UPoly) -> BiForm {
    let mut v = vec![UPoly::zero(); deg + 1];
    v[i] = c;
    BiForm::new(v)
}
