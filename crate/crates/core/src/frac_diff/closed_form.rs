//! Closed-form action of Δ_κ^μ on trigonometric sequences.

use super::sequence::TrigKind;
use crate::scalar::Real;
use num_complex::Complex;

/// Δ_κ^μ e^{i(n+c)θ} at n = 0, i.e. e^{icθ}(1 − e^{iκθ})^μ written as
/// (2 sin(κθ/2))^μ e^{i((c + κμ/2)θ − μπ/2)}.
///
/// Valid for μ ≥ 0 and 0 ≤ κθ ≤ 2π, where 2 sin(κθ/2) ≥ 0.
pub fn exp_diff_closed_form<T: Real>(shift: T, order: T, kappa: usize, theta: T) -> Complex<T> {
    let kt = T::idx(kappa) * theta;
    let modulus = (T::two() * (kt * T::half()).sin()).max(T::zero()).powf(order);
    let phase = (shift + T::idx(kappa) * order * T::half()) * theta - order * T::FRAC_PI_2();
    Complex::from_polar(modulus, phase)
}

/// Δ_κ^μ applied to cos((n+c)θ) or sin((n+c)θ), evaluated at n = 0.
pub fn trig_diff_closed_form_shifted<T: Real>(
    kind: TrigKind,
    shift: T,
    order: T,
    kappa: usize,
    theta: T,
) -> T {
    let z = exp_diff_closed_form(shift, order, kappa, theta);
    match kind {
        TrigKind::Cos | TrigKind::Exp => z.re,
        TrigKind::Sin => z.im,
    }
}

/// Δ_κ^μ cos kθ = (2 sin(κθ/2))^μ cos((k + κμ/2)θ − μπ/2), and the sine analogue.
///
/// For κ = 2 this reads (2 sin θ)^ν cos((k+ν)θ − νπ/2). Requires θ ∈ [0, π]
/// for κ ∈ {1, 2}; `TrigKind::Exp` returns the real part.
pub fn trig_diff_closed_form<T: Real>(kind: TrigKind, k: usize, order: T, kappa: usize, theta: T) -> T {
    trig_diff_closed_form_shifted(kind, T::idx(k), order, kappa, theta)
}
