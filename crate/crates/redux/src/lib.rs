//! Exact computer algebra for polynomial-feasibility reductions.
//!
//! This crate builds, verifies, and cross-checks a family of constructive
//! reductions between polynomial decision problems:
//!
//! * polynomial-system feasibility (common-root existence) to the
//!   sparsifying-shift question ([`sparseshift`]),
//! * polynomial-system feasibility to affine polynomial projection
//!   ([`polyproj`]),
//! * quadratic-system feasibility in the unit ball to negativity of a
//!   biquadratic form ([`biquadratic`]),
//! * biquadratic nonnegativity to quartic hyperbolicity, real stability,
//!   and convexity ([`hyperbolic`]).
//!
//! Everything is exact: prime-field residues and arbitrary-precision
//! rationals, canonical sparse polynomials, Sturm sequences, and
//! principal-minor PSD tests. The [`verifiers`] module holds the
//! independent oracles (exhaustive search, Sturm, seeded exact sampling)
//! that the reduction tests are checked against, and [`selftest`] wires
//! the whole acceptance suite together.
//!
//! A walkthrough with runnable examples lives in the `book/` directory of
//! the repository; the CLI (`redux`) exposes every pipeline stage on JSON
//! files.

pub mod biquadratic;
pub mod error;
pub mod field;
pub mod hyperbolic;
pub mod json;
pub mod layout;
pub mod matrix;
pub mod normalizer;
pub mod poly;
pub mod polyproj;
pub mod report;
pub mod selftest;
pub mod sparseshift;
pub mod unipoly;
pub mod verifiers;

pub use error::{Error, Result};
pub use field::{CoefficientField, Scalar};
pub use layout::{Layout, VarName, VariableLayout};
pub use poly::{Monomial, PolySystem, Polynomial};
