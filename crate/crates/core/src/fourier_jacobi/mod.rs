//! Fourier–Jacobi analysis and synthesis on Gauss–Jacobi grids, weighted L^p
//! norms, the even/odd split about θ = π/2 and the quadratic transforms that
//! carry each part to a half-angle Jacobi system.

mod document;
mod grid;
mod norm;
mod parity;
mod transform;

pub use document::{DocumentKind, ExpansionDocument, ParamsDoc};
pub use grid::{GridFunction, Source};
pub use norm::{
    conjugate_exponent, weighted_norm, weighted_norm_estimate, NormEstimate, WeightedNormSpec,
    NORM_REFINE_TOL,
};
pub use parity::{
    even_odd_decompose, half_angle_even, half_angle_odd, parity_norm_relations, quad_transform_even,
    quad_transform_inverse, quad_transform_odd, NormRelation, ParityNormReport, DEGENERATE_REL,
};
pub use transform::{analyze, analyze_pair, synthesize, ExpansionPair};
