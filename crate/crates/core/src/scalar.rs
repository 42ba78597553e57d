//! Scalar abstraction shared by the numeric core.
//!
//! Everything below the reporting layer is generic over [`Real`], which is
//! implemented for `f32` and `f64`.

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};
use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Sum
    + Debug
    + Display
    + LowerExp
    + Default
    + Send
    + Sync
    + 'static
{
    /// Converts an `f64` literal.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in target float type")
    }

    /// Converts an index.
    #[inline]
    fn idx(n: usize) -> Self {
        Self::from_usize(n).expect("index representable in target float type")
    }

    #[inline]
    fn f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    #[inline]
    fn half() -> Self {
        Self::lit(0.5)
    }

    #[inline]
    fn two() -> Self {
        Self::lit(2.0)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// True when `x` is an integer (within the exact representation of the type).
#[inline]
pub fn is_integer<T: Real>(x: T) -> bool {
    x == x.round()
}
