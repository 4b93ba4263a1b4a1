//! Numerical laboratory for the degenerate elliptic operator
//! (1+|x|^α)Δ + c/|x|² on L^p(ℝ^N), with the optional confining term
//! −η|x|^β.
//!
//! The crate computes every closed-form constant of the theory, classifies
//! parameter tuples against the generation theorems, evaluates the weighted
//! Hardy / dissipativity / Yosida-form inequalities on radial test
//! profiles, reproduces the Gamma-function optimality bound for the Yosida
//! constant, and time-steps the radial parabolic problem while monitoring
//! L^p contractivity and positivity.

// Validation predicates are written as !(x > 0.0) on purpose: the negated
// form also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod classify;
pub mod error;
pub mod evolve;
pub mod forms;
pub mod params;
pub mod radial;
pub mod rational;
pub mod sharpness;
pub mod special;

pub use error::{Error, Result};
pub use params::{ConstantSet, Params};
