use thiserror::Error;

use crate::equation::EquationKind;

/// Errors raised by the algebraic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator is identically zero")]
    ZeroDenominator,
    #[error("numerator and denominator forms share a common factor (resultant vanishes)")]
    CommonFactor,
    #[error("forms have mismatched degrees {0} and {1}")]
    FormDegreeMismatch(usize, usize),
    #[error("equation has degree {0} in w; at least 1 is required")]
    DegreeTooLow(usize),
    #[error("all projective coordinates are zero")]
    ZeroPoint,
    #[error("resultant vanishes; Bezout cofactors do not exist")]
    SingularSystem,
    #[error(
        "{kind} equations need deg_w(R) >= {required} for an effective degree bound, got {actual}; \
         supply an explicit maximum degree to search anyway"
    )]
    HypothesisViolated {
        kind: EquationKind,
        required: usize,
        actual: usize,
    },
    #[error("budget exhausted: {0}")]
    BudgetExhausted(String),
    #[error(transparent)]
    Parse(#[from] crate::parse::ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
