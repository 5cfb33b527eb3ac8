//! Effective bounds: solution degree, solution count, per-degree component
//! degree, and the coefficient height of any solution in Q(z).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Pow};

use crate::equation::{EquationKind, REq};
use crate::error::{Error, Result};
use crate::heights::{height_projective, height_ratfunc, height_req};
use crate::ratfunc::RatFunc;
use crate::rational::{ln_biguint, Rat};

fn check_hypothesis(kind: EquationKind, d: usize) -> Result<()> {
    if d < kind.min_degree() {
        return Err(Error::HypothesisViolated {
            kind,
            required: kind.min_degree(),
            actual: d,
        });
    }
    Ok(())
}

/// Largest possible degree of a solution: `floor((2d-1) degz / (d-1))` for
/// difference equations and `floor((2d-1) degz / (d-2))` for differential
/// ones. These never exceed `3 degz` and `5 degz` respectively.
pub fn degree_bound(kind: EquationKind, d: usize, degz: usize) -> Result<usize> {
    check_hypothesis(kind, d)?;
    let denom = d - kind.offset();
    Ok((2 * d - 1) * degz / denom)
}

/// The coarse degree bound `3 degz` (difference) or `5 degz` (differential)
/// over which the count bound sums.
pub fn coarse_degree_bound(kind: EquationKind, degz: usize) -> usize {
    match kind {
        EquationKind::Difference => 3 * degz,
        EquationKind::Differential => 5 * degz,
    }
}

/// `(d+x)^((d+x) k + degz)`: the bound on the summed degrees of the
/// components of the degree-`k` solution variety.
pub fn per_degree_component_bound(kind: EquationKind, d: usize, degz: usize, k: usize) -> BigUint {
    let base = BigUint::from(d + kind.offset());
    Pow::pow(&base, ((d + kind.offset()) * k + degz) as u32)
}

/// Bound on the number of solutions, as the closed-form geometric sum of
/// the per-degree bounds over all admissible degrees.
pub fn count_bound(kind: EquationKind, d: usize, degz: usize) -> Result<BigUint> {
    check_hypothesis(kind, d)?;
    let b = d + kind.offset();
    let base = BigUint::from(b);
    let ratio = Pow::pow(&base, b as u32);
    let terms = coarse_degree_bound(kind, degz) + 1;
    let num = Pow::pow(&base, (b * terms) as u32) - BigUint::one();
    let den = &ratio - BigUint::one();
    Ok(Pow::pow(&base, degz as u32) * num / den)
}

/// An upper bound of the form
/// `(1/divisor) * (a h(R) + b log 2 + log n! + log m)`, kept exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightBound {
    pub divisor: u32,
    pub height_r_coeff: u32,
    /// `exp(h(R))`, an integer.
    pub height_r: BigUint,
    pub log2_coeff: u64,
    pub factorial_of: u32,
    pub extra_log: Option<u64>,
    /// Degree of `Res(P, Q)` used in the constant.
    pub resultant_degree: usize,
    /// Solution degree used in the constant.
    pub solution_degree: usize,
}

impl HeightBound {
    /// `exp(divisor * H)`, an exact integer.
    pub fn exp_scaled(&self) -> BigUint {
        let fact: BigUint = (1..=self.factorial_of as u64).map(BigUint::from).product();
        let mut v = Pow::pow(&self.height_r, self.height_r_coeff)
            * (BigUint::one() << self.log2_coeff)
            * fact;
        if let Some(m) = self.extra_log {
            v *= BigUint::from(m);
        }
        v
    }

    /// The bound in nats, rounded outward.
    pub fn value(&self) -> f64 {
        let v = ln_biguint(&self.exp_scaled()) / self.divisor as f64;
        v + v.abs() * 1e-14 + f64::MIN_POSITIVE
    }

    /// Whether a height `log(max_abs)` satisfies the bound, decided exactly
    /// as `max_abs^divisor <= exp(divisor * H)`.
    pub fn admits(&self, max_abs: &BigUint) -> bool {
        Pow::pow(max_abs, self.divisor) <= self.exp_scaled()
    }

    /// Largest integer coefficient magnitude a solution can have.
    pub fn magnitude_bound(&self) -> BigUint {
        self.exp_scaled().nth_root(self.divisor)
    }

    pub fn expression(&self) -> String {
        let mut parts = vec![
            format!("{}*h(R)", self.height_r_coeff),
            format!("{}*log(2)", self.log2_coeff),
            format!("log({}!)", self.factorial_of),
        ];
        if let Some(m) = self.extra_log {
            parts.push(format!("log({m})"));
        }
        format!(
            "(1/{})*({}) with h(R) = log({})",
            self.divisor,
            parts.join(" + "),
            self.height_r
        )
    }
}

impl fmt::Display for HeightBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {:.6}", self.expression(), self.value())
    }
}

/// Height bound using the worst case `deg Res(P, Q) <= 2 d degz` and the
/// degree bound for `deg f`.
pub fn height_bound(r: &REq) -> Result<HeightBound> {
    let deg = degree_bound(r.kind(), r.d(), r.degz())?;
    height_bound_with(r, 2 * r.d() * r.degz(), deg)
}

/// Height bound using the computed degree of `Res(P, Q)`.
pub fn height_bound_instantiated(r: &REq) -> Result<HeightBound> {
    let deg = degree_bound(r.kind(), r.d(), r.degz())?;
    height_bound_with(r, r.resultant().deg0(), deg)
}

/// Height bound for solutions of degree at most `solution_degree`, given
/// `deg Res(P, Q) <= resultant_degree`.
///
/// Difference: `(d-1) h(f) <= (2d-1) h(R) + (res + 4d degz + (6d-3) D + 1
/// + D) log 2 + log (2d-1)! + log (D+1)`, combining the composition bound
/// with `h(f(z+1)) <= h(f) + D log 2 + log(D+1)`.
///
/// Differential: `(d-2) h(f) <= (2d-1) h(R) + (res + 4d degz + (6d-3) D + 1
/// + 4D) log 2 + log (2d-1)!`, using `h(f') <= 2 h(f) + 4 D log 2`.
pub fn height_bound_with(r: &REq, resultant_degree: usize, solution_degree: usize) -> Result<HeightBound> {
    let (kind, d, degz) = (r.kind(), r.d(), r.degz());
    check_hypothesis(kind, d)?;
    let big_d = solution_degree as u64;
    let base = composition_log2_coeff(d, degz, resultant_degree, solution_degree);
    let (log2_coeff, extra_log) = match kind {
        EquationKind::Difference => (base + big_d, Some(big_d + 1)),
        EquationKind::Differential => (base + 4 * big_d, None),
    };
    Ok(HeightBound {
        divisor: (d - kind.offset()) as u32,
        height_r_coeff: (2 * d - 1) as u32,
        height_r: height_req(r).max_abs,
        log2_coeff,
        factorial_of: (2 * d - 1) as u32,
        extra_log,
        resultant_degree,
        solution_degree,
    })
}

fn composition_log2_coeff(d: usize, degz: usize, res_deg: usize, deg_f: usize) -> u64 {
    (res_deg + 4 * d * degz + (6 * d - 3) * deg_f + 1) as u64
}

/// The constant `C` with `d h(f) <= h(R(z, f)) + C` for `deg f = deg_f`:
/// `(2d-1) h(R) + (deg Res + 4d degz + (6d-3) deg_f + 1) log 2 + log (2d-1)!`.
pub fn composition_constant(r: &REq, deg_f: usize) -> HeightBound {
    let d = r.d();
    HeightBound {
        divisor: 1,
        height_r_coeff: (2 * d - 1) as u32,
        height_r: height_req(r).max_abs,
        log2_coeff: composition_log2_coeff(d, r.degz(), r.resultant().deg0(), deg_f),
        factorial_of: (2 * d - 1) as u32,
        extra_log: None,
        resultant_degree: r.resultant().deg0(),
        solution_degree: deg_f,
    }
}

/// Degree of `R(z, f(z))` after cancelling the common factor of
/// `P(f1, f0)` and `Q(f1, f0)`; a composition that is identically infinite
/// counts as a constant.
pub fn composed_degree(r: &REq, f: &RatFunc) -> usize {
    let (n, d) = r.compose_parts(f);
    let g = n.gcd(&d);
    let n = n.div_exact(&g).unwrap();
    let d = d.div_exact(&g).unwrap();
    n.deg0().max(d.deg0())
}

/// `d deg f <= deg R(z, f(z)) + (2d-1) degz`.
pub fn degree_lemma_check(r: &REq, f: &RatFunc) -> bool {
    let d = r.d();
    d * f.degree() <= composed_degree(r, f) + (2 * d - 1) * r.degz()
}

/// Exact check of `d h(f) <= h(R(z, f)) + C(R, deg f)`.
pub fn height_lemma_check(r: &REq, f: &RatFunc) -> bool {
    let (n, d) = r.compose_parts(f);
    let g = n.gcd(&d);
    let n = n.div_exact(&g).unwrap();
    let d = d.div_exact(&g).unwrap();
    let tuple: Vec<Rat> = n.coeffs().iter().chain(d.coeffs()).cloned().collect();
    let m_rf = height_projective(&tuple).expect("not both zero").max_abs;
    let m_f = height_ratfunc(f).max_abs;
    let c = composition_constant(r, f.degree());
    Pow::pow(&m_f, r.d() as u32) <= m_rf * c.exp_scaled()
}

/// All bounds for one equation.
#[derive(Clone, Debug)]
pub struct BoundCertificate {
    pub kind: EquationKind,
    pub d: usize,
    pub degz: usize,
    pub degree_bound: usize,
    pub count_bound: BigUint,
    /// Bound with the worst-case resultant degree.
    pub height_bound: HeightBound,
    /// Bound with the computed resultant degree; never weaker.
    pub height_bound_instantiated: HeightBound,
    pub per_degree_bounds: BTreeMap<usize, BigUint>,
}

impl BoundCertificate {
    pub fn for_equation(r: &REq) -> Result<Self> {
        let (kind, d, degz) = (r.kind(), r.d(), r.degz());
        let degree_bound = degree_bound(kind, d, degz)?;
        Ok(BoundCertificate {
            kind,
            d,
            degz,
            degree_bound,
            count_bound: count_bound(kind, d, degz)?,
            height_bound: height_bound(r)?,
            height_bound_instantiated: height_bound_instantiated(r)?,
            per_degree_bounds: (0..=degree_bound)
                .map(|k| (k, per_degree_component_bound(kind, d, degz, k)))
                .collect(),
        })
    }
}
