//! Multiplier functionals, inequality checks and multiplier-norm lower bounds.
//!
//! Everything here runs in double precision on top of the generic core.
//! Inequalities with unspecified constants are reported as both sides plus
//! their ratio; empirical constants come with a doubling-stability verdict.

mod functionals;
mod inequalities;
mod lemma45;
mod operator;
mod reconstruct;
mod report;
mod sequence;

pub use functionals::{
    bounded_variation_functional, cohen_bound, cohen_exponent, cohen_in_range, dyadic_blocks, l1_sufficiency_k,
    necessity_functional, necessity_orders, sufficiency_d, L1Variant, NecessityOrders,
};
pub use inequalities::{
    cesaro_kernel_l1, check_family, finite_chain, hausdorff_young_check, hausdorff_young_jacobi,
    hausdorff_young_ultraspherical, parseval_weighted, summed_diff_bound, sup_coefficient_bound, KernelSystem,
    ParsevalSide,
};
pub use lemma45::{direct_diff, lemma45_check, mehler_constant, mehler_diff, Lemma45Report};
pub use operator::{
    apply_multiplier, apply_multiplier_coeffs, expansion_norm, multiplier_norm_lower_bound,
    restricted_norm_equivalence, standard_family, test_function_norm, NormBound, RestrictedEquivalence, TrialKind,
    TEST_FUNCTION_MAX_DEGREE,
};
pub use reconstruct::{l1_reconstruct, Reconstruction};
pub use report::{
    estimate_constant, max_ratio, relative_change, Aggregate, Block, ConstantEstimate, FunctionalOptions,
    FunctionalReport, InequalityCheck, DEFAULT_N_MAX, STABILITY_TOL,
};
pub use sequence::{chi, smoothstep, MultiplierKind, MultiplierSequence, TestSequenceChi};
