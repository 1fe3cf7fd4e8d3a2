//! Strict copositivity certification for third order symmetric tensors
//! in two and three dimensions.
//!
//! A symmetric tensor `A` of order 3 is *strictly copositive* when the
//! cubic form `A x^3` is positive for every nonzero `x` with nonnegative
//! coordinates. This crate decides strict copositivity along two
//! independent routes:
//!
//! * [`criteria`] — analytic sign conditions on the unique entries
//!   (discriminant test in dimension two, the `{-1,0,1}` theorems in
//!   dimension three, a copositivity test for 3x3 symmetric matrices and
//!   cube-root normalized sufficient conditions for general tensors);
//! * [`oracle`] — an exact rational grid search for nonpositive witnesses
//!   combined with Bernstein-coefficient simplicial subdivision for
//!   positivity certificates.
//!
//! The [`harness`] module cross-validates the two routes exhaustively over
//! all 59049 `{-1,0,1}` tensors, verifies a suite of ternary cubic
//! inequalities, and soundness-samples the sufficient conditions.
//!
//! All tensor entries and all evaluations are exact rationals; floating
//! point appears only where the underlying formulas are irrational (square
//! roots in the matrix test, cube roots in normalization), guarded by a
//! configurable tolerance.

pub mod criteria;
pub mod doc;
pub mod harness;
pub mod oracle;
pub mod rational;
pub mod tensor;

mod error;

pub use error::Error;
pub use rational::Rat;
