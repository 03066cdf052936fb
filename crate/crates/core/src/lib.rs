//! Exact computation of the circular integral functional on `F[α₁, α₂]`.
//!
//! The functional `ψ` integrates polynomials over the unit circle without
//! any analysis: it is the unique normalized, rotation-invariant linear
//! functional that vanishes on polynomials vanishing on the circle. On
//! `α₁^(2m) α₂^(2n)` it takes the value `Ω(m, n) = S(m, n)/4^(m+n)`, where
//! `S` are the super Catalan numbers.
//!
//! Modules:
//! - [`coeff`]: rationals and odd prime fields
//! - [`poly`]: sparse bivariate polynomials, evaluation, rotation action
//! - [`reduce`]: canonical forms modulo `α₁² + α₂² − 1`
//! - [`functional`]: `ψ` and its extension to arbitrary circles
//! - [`supercat`]: super Catalan numbers and their identities
//! - [`ffcircle`]: the finite-field circle used as an independent oracle

pub mod coeff;
pub mod ffcircle;
pub mod functional;
pub mod poly;
pub mod random;
pub mod reduce;
pub mod supercat;

pub use coeff::{rational_mod_p, Field, FieldError, Fp, PrimeField, Rational};
pub use ffcircle::{
    cross_check, enumerate_circle, legendre, psi_finite, CrossCheckReport, FiniteCircle,
};
pub use functional::{
    psi, psi_general, psi_monomial, psi_via_canonical, verify_axioms, AxiomReport, CircleSpec,
};
pub use poly::{AffinePoint, Matrix2, Monomial, Polynomial, Rotation};
pub use reduce::{canonicalize, is_ideal_member, vanishes_on_sample, CanonicalForm};
pub use supercat::{catalan, check_identities, interpret, omega, super_catalan, Interpretation};
