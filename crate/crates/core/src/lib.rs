//! Numerical laboratory for multiplier criteria of Jacobi and ultraspherical
//! expansions.
//!
//! * [`special_fn`]: Jacobi polynomials, h_k, generalized binomials, Gauss–Jacobi rules.
//! * [`frac_diff`]: fractional differences Δ_κ^μ with certified truncation.
//! * [`fourier_jacobi`]: analysis, synthesis, weighted norms, parity and quadratic transforms.
//! * [`multiplier_lab`]: multiplier functionals, inequality checks and norm lower bounds.
//!
//! The numeric core is generic over [`Real`] (`f32`, `f64`); the aliases below
//! fix the double-precision instantiation used by reports and the CLI.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod scalar;
pub mod fourier_jacobi;
pub mod multiplier_lab;
pub mod frac_diff;
pub mod special_fn;

pub use error::{Error, Result};
pub use scalar::Real;

pub type JacobiParamsF64 = special_fn::JacobiParams<f64>;
pub type QuadratureRuleF64 = special_fn::QuadratureRule<f64>;
pub type NormalizationTableF64 = special_fn::NormalizationTable<f64>;
pub type BinomialTableF64 = special_fn::BinomialTable<f64>;
pub type CoefficientSequenceF64 = frac_diff::CoefficientSequence<f64>;
pub type DifferenceSpecF64 = frac_diff::DifferenceSpec<f64>;
pub type GridFunctionF64 = fourier_jacobi::GridFunction<f64>;
pub type ExpansionPairF64 = fourier_jacobi::ExpansionPair<f64>;
