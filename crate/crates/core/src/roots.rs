//! Rational roots of univariate polynomials.
//!
//! A rational root `a/b` in lowest terms of the primitive integer model
//! `a_n z^n + ... + a_0` has `b | a_n`, so `a_n * (a/b)` is an integer of
//! absolute value at most `|a_n| + max |a_i|`. Those integers are recovered
//! by lifting the simple roots modulo a small prime to a large enough power
//! of it, and every candidate is confirmed by exact evaluation. No integer
//! factorisation is needed, which matters for the large coefficients
//! lexicographic Gröbner bases produce.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rat;
use crate::upoly::UPoly;

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|i| i * i <= n).all(|i| !n.is_multiple_of(i))
}

fn mod_poly(coeffs: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    coeffs.iter().map(|c| c.mod_floor(m)).collect()
}

fn eval_mod(coeffs: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    coeffs
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
}

fn derivative(coeffs: &[BigInt]) -> Vec<BigInt> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect()
}

fn inverse_mod(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let g = a.extended_gcd(m);
    g.gcd.is_one().then(|| g.x.mod_floor(m))
}

/// Degree of `gcd(p, q)` over F_l, for small `l`.
fn gcd_degree_mod(p: &[BigInt], q: &[BigInt], l: u64) -> usize {
    let lm = BigInt::from(l);
    let to_small = |v: &[BigInt]| -> Vec<u64> {
        let mut v: Vec<u64> = v
            .iter()
            .map(|c| c.mod_floor(&lm).try_into().unwrap())
            .collect();
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    };
    let (mut a, mut b) = (to_small(p), to_small(q));
    let inv = |x: u64| -> u64 {
        let mut r = 1u64;
        let (mut base, mut e) = (x % l, l - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * base % l;
            }
            base = base * base % l;
            e >>= 1;
        }
        r
    };
    while !b.is_empty() {
        while a.len() >= b.len() && !a.is_empty() {
            let f = a[a.len() - 1] * inv(b[b.len() - 1]) % l;
            let shift = a.len() - b.len();
            for (i, &c) in b.iter().enumerate() {
                a[i + shift] = (a[i + shift] + l - f * c % l) % l;
            }
            while a.last() == Some(&0) {
                a.pop();
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// All distinct rational roots, in increasing order.
pub fn rational_roots(p: &UPoly) -> Vec<Rat> {
    assert!(!p.is_zero(), "rational_roots of the zero polynomial");
    let sf = p.squarefree();
    let n = sf.deg0();
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![-sf.coeff(0) / sf.coeff(1)];
    }
    let a = sf.primitive_integer();
    let lead = a[n].clone();
    let da = derivative(&a);

    // prime not dividing the leading coefficient, modulo which p stays squarefree
    let l = (3u64..)
        .filter(|&l| is_prime(l))
        .find(|&l| {
            !(&lead % BigInt::from(l)).is_zero() && gcd_degree_mod(&a, &da, l) == 0
        })
        .expect("some prime keeps a squarefree polynomial squarefree");
    let lb = BigInt::from(l);

    let max_c = a.iter().map(|c| c.abs()).max().unwrap();
    let bound = (lead.abs() + max_c) * 2 + 1;
    let mut modulus = lb.clone();
    let mut roots_mod: Vec<BigInt> = (0..l)
        .map(BigInt::from)
        .filter(|x| eval_mod(&a, x, &lb).is_zero())
        .collect();
    while modulus < bound {
        modulus = &modulus * &modulus;
        let am = mod_poly(&a, &modulus);
        let dam = mod_poly(&da, &modulus);
        roots_mod = roots_mod
            .into_iter()
            .map(|r| {
                let fr = eval_mod(&am, &r, &modulus);
                let dr = eval_mod(&dam, &r, &modulus);
                let inv = inverse_mod(&dr, &modulus).expect("simple root modulo l");
                (r - fr * inv).mod_floor(&modulus)
            })
            .collect();
    }

    let half = &modulus / 2;
    let mut out: Vec<Rat> = roots_mod
        .into_iter()
        .filter_map(|r| {
            let m = (&lead * r).mod_floor(&modulus);
            let m = if m > half { m - &modulus } else { m };
            let x = Rat::new(m, lead.clone());
            sf.eval(&x).is_zero().then_some(x)
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// `p` with its rational linear factors removed, made squarefree and
/// primitive; `None` when nothing nonlinear remains.
pub fn nonlinear_part(p: &UPoly, roots: &[Rat]) -> Option<UPoly> {
    let mut q = p.squarefree();
    for r in roots {
        let lin = UPoly::new(vec![-r.clone(), Rat::one()]);
        q = q.div_exact(&lin).expect("root divides");
    }
    if q.deg0() == 0 {
        return None;
    }
    let ints = q.primitive_integer();
    let mut coeffs: Vec<Rat> = ints.into_iter().map(Rat::from_integer).collect();
    if coeffs.last().is_some_and(|c| c.is_negative()) {
        coeffs.iter_mut().for_each(|c| *c = -c.clone());
    }
    Some(UPoly::new(coeffs))
}

/// Rational roots by the divisor test on the primitive integer model.
/// Exponential in the size of the coefficients; an oracle for tests.
pub fn rational_roots_by_divisors(p: &UPoly) -> Vec<Rat> {
    let a = p.primitive_integer();
    let mut out = Vec::new();
    let first = a.iter().position(|c| !c.is_zero()).unwrap();
    if first > 0 {
        out.push(Rat::zero());
    }
    let a0 = &a[first];
    let an = a.last().unwrap();
    let divisors = |n: &BigInt| -> Vec<BigInt> {
        let n = n.abs();
        let mut v = Vec::new();
        let mut i = BigInt::one();
        while &i * &i <= n {
            if (&n % &i).is_zero() {
                v.push(i.clone());
                v.push(&n / &i);
            }
            i += 1;
        }
        v
    };
    for num in divisors(a0) {
        for den in divisors(an) {
            for sign in [Sign::Plus, Sign::Minus] {
                let x = Rat::new(BigInt::from_biguint(sign, num.magnitude().clone()), den.clone());
                if p.eval(&x).is_zero() {
                    out.push(x);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}
