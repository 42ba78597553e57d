use crate::error::{Error, Result};
use crate::scalar::Real;

/// Order pair (α, β) of a Jacobi expansion.
///
/// The default constructor enforces α ≥ β ≥ −1/2. Anything else with
/// α, β > −1 has to go through [`JacobiParams::extended`], which sets a flag
/// that later checks can inspect.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiParams<T> {
    alpha: T,
    beta: T,
    extended: bool,
}

/// Which hypotheses of the various criteria a parameter pair satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamFlags {
    /// α ≥ β ≥ −1/2.
    pub main_regime: bool,
    /// −1/2 < β ≤ α, the range of the necessity results.
    pub strict_beta: bool,
    /// α = β.
    pub ultraspherical: bool,
    /// α ≥ β > −1.
    pub ordered: bool,
}

impl<T: Real> JacobiParams<T> {
    pub fn new(alpha: T, beta: T) -> Result<Self> {
        check_integrable(alpha, beta)?;
        let half = T::half();
        if !(alpha >= beta && beta >= -half) {
            return Err(Error::domain(format!(
                "(alpha, beta) = ({alpha}, {beta}) outside alpha >= beta >= -1/2; use JacobiParams::extended"
            )));
        }
        Ok(Self {
            alpha,
            beta,
            extended: false,
        })
    }

    /// Any pair with α, β > −1. The extended flag is set unless the pair
    /// happens to lie in the main regime.
    pub fn extended(alpha: T, beta: T) -> Result<Self> {
        check_integrable(alpha, beta)?;
        let main = alpha >= beta && beta >= -T::half();
        Ok(Self {
            alpha,
            beta,
            extended: !main,
        })
    }

    pub fn ultraspherical(alpha: T) -> Result<Self> {
        Self::new(alpha, alpha)
    }

    #[inline]
    pub fn alpha(&self) -> T {
        self.alpha
    }

    #[inline]
    pub fn beta(&self) -> T {
        self.beta
    }

    pub fn is_extended(&self) -> bool {
        self.extended
    }

    pub fn is_ultraspherical(&self) -> bool {
        self.alpha == self.beta
    }

    pub fn flags(&self) -> ParamFlags {
        let (a, b, h) = (self.alpha, self.beta, T::half());
        ParamFlags {
            main_regime: a >= b && b >= -h,
            strict_beta: b > -h && b <= a,
            ultraspherical: a == b,
            ordered: a >= b,
        }
    }

    /// (α, −1/2), the system carrying the even part after θ → θ/2.
    pub fn even_companion(&self) -> Self {
        Self::extended(self.alpha, -T::half()).expect("alpha > -1 already checked")
    }

    /// (α, 1/2), the system carrying the odd part after θ → θ/2.
    pub fn odd_companion(&self) -> Self {
        Self::extended(self.alpha, T::half()).expect("alpha > -1 already checked")
    }
}

fn check_integrable<T: Real>(alpha: T, beta: T) -> Result<()> {
    if !(alpha > -T::one() && beta > -T::one()) || !alpha.is_finite() || !beta.is_finite() {
        return Err(Error::domain(format!(
            "(alpha, beta) = ({alpha}, {beta}): weight not integrable, need alpha, beta > -1"
        )));
    }
    Ok(())
}
