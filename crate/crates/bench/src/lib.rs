//! Fixtures shared by the benchmarks.

use malmquist_core::parse::parse_equation;
use malmquist_core::{BiForm, EquationKind, MPoly, REq, Rat};

pub const WORKED: &str = "(w^2 + w + 2*z^3)/w";

pub fn worked_example() -> REq {
    parse_equation(EquationKind::Difference, WORKED).expect("fixture parses")
}

pub fn square() -> REq {
    parse_equation(EquationKind::Difference, "w^2").expect("fixture parses")
}

pub fn cubic_differential() -> REq {
    parse_equation(EquationKind::Differential, "w^3 - w").expect("fixture parses")
}

/// A coprime pair of degree-`d` forms with dense linear coefficients in z.
pub fn dense_forms(d: usize) -> (BiForm, BiForm) {
    let p: Vec<Vec<i64>> = (0..=d).map(|i| vec![i as i64 + 1, (i % 3) as i64 - 1]).collect();
    let q: Vec<Vec<i64>> = (0..=d).map(|i| vec![(2 * i) as i64 - 3, 1]).collect();
    let to = |v: &Vec<Vec<i64>>| BiForm::from_ints(&v.iter().map(|c| c.as_slice()).collect::<Vec<_>>());
    (to(&p), to(&q))
}

/// Katsura-3: a standard zero-dimensional benchmark ideal in four variables.
pub fn katsura3() -> Vec<MPoly> {
    let n = 4;
    let x = |i: usize| MPoly::var(n, i);
    let c = |k: i64| MPoly::constant(n, Rat::from_integer(k.into()));
    let (x0, x1, x2, x3) = (x(0), x(1), x(2), x(3));
    vec![
        &(&(&x0 + &(&c(2) * &x1)) + &(&c(2) * &x2)) + &(&(&c(2) * &x3) - &c(1)),
        &(&(&(&x0 * &x0) + &(&c(2) * &(&x1 * &x1))) + &(&c(2) * &(&x2 * &x2))) + &(&(&c(2) * &(&x3 * &x3)) - &x0),
        &(&(&c(2) * &(&x0 * &x1)) + &(&c(2) * &(&x1 * &x2))) + &(&(&c(2) * &(&x2 * &x3)) - &x1),
        &(&(&c(2) * &(&x0 * &x2)) + &(&x1 * &x1)) + &(&(&c(2) * &(&x1 * &x3)) - &x2),
    ]
}
