//! Jacobi polynomials, normalization constants, generalized binomials and
//! Gauss–Jacobi quadrature.

pub mod binomial;
pub mod cache;
pub mod gamma;
pub mod jacobi;
pub mod normalization;
pub mod params;
pub mod quadrature;

pub use binomial::{binomial_table, BinomialTable};
pub use cache::{cached_rule, cached_x_rule};
pub use gamma::{beta_fn, binomial, gamma, ln_gamma, ln_gamma_sign};
pub use jacobi::{jacobi_at_one, jacobi_poly, normalized_jacobi, JacobiRecurrence};
pub use normalization::{normalization_table, orthonormal_phi, NormalizationTable};
pub use params::{JacobiParams, ParamFlags};
pub use quadrature::{
    default_node_count, gauss_jacobi_rule, weight_mass, GaussJacobiX, QuadratureRule,
};
