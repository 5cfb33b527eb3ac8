//! The coefficient system of a degree-`k` solution.
//!
//! A candidate `f = (c_0 + ... + c_k z^k) / (c_{k+1} + ... + c_{2k+1} z^k)`
//! solves the equation exactly when every `z`-coefficient `Phi_i(c)` of the
//! cleared equation vanishes:
//!
//! - difference: `f1(z+1) Q(f1, f0) - f0(z+1) P(f1, f0)`, forms of degree `d + 1`;
//! - differential: `(f1' f0 - f0' f1) Q(f1, f0) - f0^2 P(f1, f0)`, degree `d + 2`.

use std::time::Instant;

use num_integer::binomial;
use num_traits::Zero;

use crate::equation::{EquationKind, REq};
use crate::mpoly::MPoly;
use crate::rational::Rat;
use crate::ring::det_bareiss_until;
use crate::resultant::sylvester_rows;
use crate::upoly::UPoly;

/// Polynomial in `z` whose coefficients are polynomials in the `c_i`.
#[derive(Clone, Debug)]
struct ZPoly {
    nvars: usize,
    coeffs: Vec<MPoly>,
}

impl ZPoly {
    fn zero(nvars: usize) -> Self {
        ZPoly { nvars, coeffs: Vec::new() }
    }

    fn one(nvars: usize) -> Self {
        ZPoly { nvars, coeffs: vec![MPoly::one(nvars)] }
    }

    fn from_upoly(nvars: usize, p: &UPoly) -> Self {
        ZPoly {
            nvars,
            coeffs: p.coeffs().iter().map(|c| MPoly::constant(nvars, c.clone())).collect(),
        }
    }

    fn coeff(&self, i: usize) -> MPoly {
        self.coeffs.get(i).cloned().unwrap_or_else(|| MPoly::zero(self.nvars))
    }

    fn add(&self, o: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        ZPoly {
            nvars: self.nvars,
            coeffs: (0..n).map(|i| &self.coeff(i) + &o.coeff(i)).collect(),
        }
    }

    fn sub(&self, o: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        ZPoly {
            nvars: self.nvars,
            coeffs: (0..n).map(|i| &self.coeff(i) - &o.coeff(i)).collect(),
        }
    }

    fn mul(&self, o: &ZPoly) -> ZPoly {
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return ZPoly::zero(self.nvars);
        }
        let mut out = vec![MPoly::zero(self.nvars); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        ZPoly { nvars: self.nvars, coeffs: out }
    }

    /// `p(z + 1)`.
    fn shift(&self) -> ZPoly {
        let n = self.coeffs.len();
        let coeffs = (0..n)
            .map(|j| {
                let mut acc = MPoly::zero(self.nvars);
                for (i, c) in self.coeffs.iter().enumerate().skip(j) {
                    let b = Rat::from_integer(binomial(i as u64, j as u64).into());
                    acc = &acc + &c.scale(&b);
                }
                acc
            })
            .collect();
        ZPoly { nvars: self.nvars, coeffs }
    }

    fn derivative(&self) -> ZPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(&Rat::from_integer((i as i64).into())))
            .collect();
        ZPoly { nvars: self.nvars, coeffs }
    }
}

/// `F(f1, f0) = sum_i F_i(z) f1^(d-i) f0^i` with symbolic `f1`, `f0`.
fn compose_symbolic(coeffs: &[UPoly], f1: &ZPoly, f0: &ZPoly) -> ZPoly {
    let d = coeffs.len() - 1;
    let nvars = f1.nvars;
    let mut p1 = vec![ZPoly::one(nvars)];
    let mut p0 = vec![ZPoly::one(nvars)];
    for i in 1..=d {
        p1.push(p1[i - 1].mul(f1));
        p0.push(p0[i - 1].mul(f0));
    }
    let mut acc = ZPoly::zero(nvars);
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let t = ZPoly::from_upoly(nvars, c).mul(&p1[d - i]).mul(&p0[i]);
        acc = acc.add(&t);
    }
    acc
}

/// The generic numerator and denominator of degree `k` in the
/// `2k + 2` coefficient variables.
fn generic_pair(k: usize) -> (ZPoly, ZPoly) {
    let n = 2 * k + 2;
    let f1 = ZPoly { nvars: n, coeffs: (0..=k).map(|i| MPoly::var(n, i)).collect() };
    let f0 = ZPoly { nvars: n, coeffs: (0..=k).map(|i| MPoly::var(n, k + 1 + i)).collect() };
    (f1, f0)
}

/// The forms `Phi_i` for one equation and one candidate degree.
#[derive(Clone, Debug)]
pub struct CoeffSystem {
    pub k: usize,
    pub kind: EquationKind,
    /// `Phi_0, Phi_1, ...`; zero forms are kept so index `i` is the
    /// coefficient of `z^i`.
    pub phis: Vec<MPoly>,
    /// The Sylvester form `Res(c)` of degree `2k`, or `1` when `k = 0`.
    pub res_form: MPoly,
}

impl CoeffSystem {
    pub fn nvars(&self) -> usize {
        2 * self.k + 2
    }

    /// Degree every nonzero `Phi_i` has.
    pub fn form_degree(&self, d: usize) -> usize {
        d + self.kind.offset()
    }

    pub fn nonzero_phis(&self) -> impl Iterator<Item = &MPoly> {
        self.phis.iter().filter(|p| !p.is_zero())
    }
}

/// Expected number of `Phi` slots: `(d + x) k + degz + 1`.
pub fn phi_slot_count(r: &REq, k: usize) -> usize {
    (r.d() + r.kind().offset()) * k + r.degz() + 1
}

/// The forms `Phi_i` of the equation's own kind at degree `k`.
pub fn coefficient_forms(r: &REq, k: usize) -> Vec<MPoly> {
    let (f1, f0) = generic_pair(k);
    let pf = compose_symbolic(r.p().coeffs(), &f1, &f0);
    let qf = compose_symbolic(r.q().coeffs(), &f1, &f0);
    let cleared = match r.kind() {
        EquationKind::Difference => f1.shift().mul(&qf).sub(&f0.shift().mul(&pf)),
        EquationKind::Differential => {
            let wr = f1.derivative().mul(&f0).sub(&f0.derivative().mul(&f1));
            wr.mul(&qf).sub(&f0.mul(&f0).mul(&pf))
        }
    };
    let slots = phi_slot_count(r, k);
    debug_assert!(cleared.coeffs.iter().skip(slots).all(MPoly::is_zero));
    (0..slots).map(|i| cleared.coeff(i)).collect()
}

/// Coefficient system of `f(z+1) = R(z, f)` at degree `k`.
pub fn build_difference_system(r: &REq, k: usize) -> CoeffSystem {
    let r = r.with_kind(EquationKind::Difference);
    CoeffSystem {
        k,
        kind: EquationKind::Difference,
        phis: coefficient_forms(&r, k),
        res_form: generic_resultant_form(k),
    }
}

/// Coefficient system of `f' = R(z, f)` at degree `k`.
pub fn build_differential_system(r: &REq, k: usize) -> CoeffSystem {
    let r = r.with_kind(EquationKind::Differential);
    CoeffSystem {
        k,
        kind: EquationKind::Differential,
        phis: coefficient_forms(&r, k),
        res_form: generic_resultant_form(k),
    }
}

/// Resultant condition restricted to chart `j`, where `c_j = 1` and
/// `c_i = 0` for `i > j`, in the original `2k + 2` variables.
///
/// There the denominator `f0` is monic of degree `m = j - k - 1`, and the
/// generic form equals, up to sign, `c_k^(k-m) * Res(f0, f1)` with
/// `Res(f0, f1) = det(multiplication by f1 on Q[z]/(f0))`, an `m x m`
/// determinant. The returned polynomial is that determinant, times `c_k`
/// when `m < k`; it vanishes on the chart exactly where the generic form
/// does. It is zero for `j <= k`, where `f0 = 0`. Gives up with `None` at
/// `deadline`.
pub fn chart_resultant(k: usize, j: usize, deadline: Option<Instant>) -> Option<MPoly> {
    let n = 2 * k + 2;
    if j <= k {
        return Some(MPoly::zero(n));
    }
    let m = j - k - 1;
    // f0 = z^m + b_{m-1} z^(m-1) + ... + b_0
    let b: Vec<MPoly> = (0..m).map(|i| MPoly::var(n, k + 1 + i)).collect();
    // reduce f1 modulo f0
    let mut r: Vec<MPoly> = (0..=k).map(|i| MPoly::var(n, i)).collect();
    for deg in (m..=k).rev() {
        let h = std::mem::replace(&mut r[deg], MPoly::zero(n));
        if h.is_zero() {
            continue;
        }
        for (l, bl) in b.iter().enumerate() {
            let idx = deg - m + l;
            r[idx] = &r[idx] - &(&h * bl);
        }
    }
    r.truncate(m);
    // column i holds z^i f1 mod f0
    let mut cols = Vec::with_capacity(m);
    for _ in 0..m {
        cols.push(r.clone());
        let h = r.pop().unwrap();
        r.insert(0, MPoly::zero(n));
        for (l, bl) in b.iter().enumerate() {
            r[l] = &r[l] - &(&h * bl);
        }
    }
    let rows: Vec<Vec<MPoly>> = (0..m).map(|row| cols.iter().map(|c| c[row].clone()).collect()).collect();
    let cancel = || deadline.is_some_and(|d| Instant::now() >= d);
    let det = det_bareiss_until(rows, &MPoly::one(n), &cancel)?;
    Some(if m < k { &det * &MPoly::var(n, k) } else { det })
}

/// Sylvester determinant of `c_k z^k + ... + c_0` and
/// `c_{2k+1} z^k + ... + c_{k+1}`; the constant `1` for `k = 0`.
pub fn generic_resultant_form(k: usize) -> MPoly {
    generic_resultant_form_until(k, None).expect("no deadline")
}

pub fn generic_resultant_form_until(k: usize, deadline: Option<Instant>) -> Option<MPoly> {
    let n = 2 * k + 2;
    if k == 0 {
        return Some(MPoly::one(n));
    }
    let a: Vec<MPoly> = (0..=k).rev().map(|i| MPoly::var(n, i)).collect();
    let b: Vec<MPoly> = (0..=k).rev().map(|i| MPoly::var(n, k + 1 + i)).collect();
    let rows = sylvester_rows(&a, &b);
    let cancel = || deadline.is_some_and(|d| Instant::now() >= d);
    det_bareiss_until(rows, &MPoly::one(n), &cancel)
}

/// `Phi_i` evaluated at a concrete coefficient tuple.
pub fn eval_phis(sys: &CoeffSystem, c: &[Rat]) -> Vec<Rat> {
    sys.phis.iter().map(|p| p.eval(c)).collect()
}

/// Whether all `Phi_i` vanish at `c`.
pub fn phis_vanish(sys: &CoeffSystem, c: &[Rat]) -> bool {
    sys.phis.iter().all(|p| p.eval(c).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::form::BiForm;
    use crate::mpoly::Monomial;
    use crate::rational::rat;
    use crate::resultant::resultant;

    fn w2() -> REq {
        REq::from_forms(
            EquationKind::Difference,
            BiForm::from_ints(&[&[1], &[], &[]]),
            BiForm::from_ints(&[&[], &[], &[1]]),
        )
        .unwrap()
    }

    fn mono(exps: &[u16]) -> Monomial {
        Monomial::from_exps(exps)
    }

    #[test]
    fn w2_degree_zero() {
        let sys = build_difference_system(&w2(), 0);
        assert_eq!(sys.phis.len(), 1);
        // c0 c1^2 - c1 c0^2
        let expected = MPoly::from_terms(2, [(mono(&[1, 2]), rat(1)), (mono(&[2, 1]), rat(-1))]);
        assert_eq!(sys.phis[0], expected);
        assert_eq!(sys.res_form, MPoly::one(2));
    }

    #[test]
    fn cubic_differential_degree_zero() {
        let r = REq::from_forms(
            EquationKind::Differential,
            BiForm::from_ints(&[&[1], &[], &[-1], &[]]),
            BiForm::from_ints(&[&[], &[], &[], &[1]]),
        )
        .unwrap();
        let sys = build_differential_system(&r, 0);
        // -c1^2 (c0^3 - c0 c1^2)
        let expected = MPoly::from_terms(2, [(mono(&[3, 2]), rat(-1)), (mono(&[1, 4]), rat(1))]);
        assert_eq!(sys.phis, vec![expected]);
    }

    #[test]
    fn worked_example_slot_count() {
        let r = REq::from_forms(
            EquationKind::Difference,
            BiForm::from_ints(&[&[1], &[1], &[0, 0, 0, 2]]),
            BiForm::from_ints(&[&[], &[1], &[]]),
        )
        .unwrap();
        let sys = build_difference_system(&r, 2);
        assert_eq!(sys.phis.len(), 10);
        assert_eq!(sys.nvars(), 6);
        assert!(sys.nonzero_phis().all(|p| p.is_homogeneous_of(3)));
        // f = z^2 in the k = 2 layout
        let c = [0, 0, 1, 1, 0, 0].map(rat);
        assert!(phis_vanish(&sys, &c));
        let c = [0, 1, 0, 1, 0, 0].map(rat);
        assert!(!phis_vanish(&sys, &c));
    }

    #[test]
    fn resultant_forms() {
        assert_eq!(generic_resultant_form(0), MPoly::one(2));
        // c1 c2 - c0 c3
        let expected = MPoly::from_terms(4, [(mono(&[0, 1, 1, 0]), rat(1)), (mono(&[1, 0, 0, 1]), rat(-1))]);
        assert_eq!(generic_resultant_form(1), expected);
        let r2 = generic_resultant_form(2);
        assert!(r2.is_homogeneous_of(4));
        // (z-1)(z-2) vs (z-1)(z-3) share a root; (z-1)(z-2) vs (z+1)(z-3) do not
        let shared = [2, -3, 1, 3, -4, 1].map(rat);
        assert!(r2.eval(&shared).is_zero());
        let coprime = [2, -3, 1, -3, -2, 1].map(rat);
        let expected = resultant(
            &BiForm::from_ints(&[&[1], &[-3], &[2]]),
            &BiForm::from_ints(&[&[1], &[-2], &[-3]]),
        )
        .unwrap();
        assert_eq!(r2.eval(&coprime), expected.coeff(0));
    }

    #[test]
    fn chart_resultants_match_generic_form() {
        use crate::rational::ratio;
        for k in 1..=3 {
            let generic = generic_resultant_form(k);
            let n = 2 * k + 2;
            for j in 0..n {
                let chart = chart_resultant(k, j, None).unwrap();
                for seed in 0..6i64 {
                    let mut c: Vec<Rat> = (0..n as i64).map(|i| ratio((i * 7 + seed * 3) % 5 - 2, 1 + (i + seed) % 3)).collect();
                    c[j] = rat(1);
                    for x in c.iter_mut().skip(j + 1) {
                        *x = rat(0);
                    }
                    let g = generic.eval(&c);
                    let h = chart.eval(&c);
                    assert_eq!(g.is_zero(), h.is_zero(), "k={k} j={j} c={c:?}");
                }
            }
        }
    }

    #[test]
    fn deadline_in_the_past_cancels() {
        assert!(generic_resultant_form_until(3, Some(Instant::now())).is_none());
        assert!(chart_resultant(3, 7, Some(Instant::now())).is_none());
        assert!(generic_resultant_form_until(0, Some(Instant::now())).is_some());
    }
}
