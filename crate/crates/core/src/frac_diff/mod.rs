//! Fractional differences Δ_κ^μ m_k = Σ_j A_j^{−μ−1} m_{k+κj} of real order μ
//! and increment κ, on finite, eventually constant or rule-defined sequences.

mod closed_form;
mod difference;
mod sequence;

pub use closed_form::{exp_diff_closed_form, trig_diff_closed_form, trig_diff_closed_form_shifted};
pub use difference::{
    andersen_compose_check, difference_sequence, frac_diff, frac_diff_composed, frac_diff_range,
    frac_diff_truncated, kernel_abs_sum, parity_subsample_diff, summation_class, DiffValue,
    DifferenceSpec, Parity, Truncation, DEFAULT_MAX_TERMS, DEFAULT_TAIL_EPS,
};
pub use sequence::{
    CoefficientSequence, DecayInfo, Oscillation, Phase, PowerEnvelope, SequenceRule, Support, TrigKind,
    Trigonometric,
};
