//! Exact enumeration and certification of rational solutions `f` in Q(z)
//! of first-order equations `f(z+1) = R(z, f(z))` and `f'(z) = R(z, f(z))`.
//!
//! The pipeline: bound the degree of any solution, build for each degree
//! `k` a homogeneous polynomial system in the `2k + 2` coefficients of `f`,
//! saturate away the locus where numerator and denominator share a root,
//! and solve the resulting zero-dimensional systems exactly with Gröbner
//! bases. Every reported solution is re-verified by substitution, and the
//! run carries explicit degree, count and height bounds.

pub mod bivariate;
pub mod bounds;
pub mod equation;
pub mod error;
pub mod form;
pub mod groebner;
pub mod heights;
pub mod mpoly;
pub mod parse;
pub mod ratfunc;
pub mod rational;
pub mod resultant;
pub mod ring;
pub mod roots;
pub mod solver;
pub mod system;
pub mod upoly;

pub use bounds::{BoundCertificate, HeightBound};
pub use equation::{EquationKind, REq};
pub use error::{Error, Result};
pub use form::BiForm;
pub use groebner::{buchberger, Budget, GroebnerBasis, ZeroDim};
pub use mpoly::{MPoly, MonOrder, Monomial, OrderKind};
pub use ratfunc::RatFunc;
pub use rational::Rat;
pub use solver::{solve_all, solve_zero_dim, verify_solution, BoundChecks, SolveOptions, SolutionReport, Status, Verification, ZeroDimSolution};
pub use system::CoeffSystem;
pub use upoly::UPoly;
