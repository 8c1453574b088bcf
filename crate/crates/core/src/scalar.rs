//! Scalar abstraction shared by every module.

use core::fmt::{Debug, Display};
use num_traits::{Float, FloatConst};

/// Real scalar usable as a coordinate, modulus or angle.
///
/// Blanket-implemented for every float that also provides the usual
/// constants, which in practice means `f32` and `f64`.
pub trait Scalar: Float + FloatConst + Debug + Display + Default + Send + Sync + 'static {
    /// Lossless-enough conversion from an `f64` literal.
    #[inline]
    fn lit(v: f64) -> Self {
        Self::from(v).expect("f64 literal representable in scalar type")
    }

    #[inline]
    fn two() -> Self {
        Self::one() + Self::one()
    }

    #[inline]
    fn tau() -> Self {
        Self::PI() + Self::PI()
    }
}

impl<T> Scalar for T where T: Float + FloatConst + Debug + Display + Default + Send + Sync + 'static {}

/// Mathematical modulo: the result always lies in `[0, m)` for `m > 0`.
#[inline]
pub(crate) fn rem_euclid<T: Scalar>(x: T, m: T) -> T {
    let r = x % m;
    let r = if r < T::zero() { r + m } else { r };
    // `r + m` may round up to exactly `m` for tiny negative `r`.
    if r >= m {
        T::zero()
    } else {
        r
    }
}

/// Wrap an angle difference into `(-π, π]`.
#[inline]
pub fn wrap_angle<T: Scalar>(d: T) -> T {
    let w = rem_euclid(d + T::PI(), T::tau()) - T::PI();
    if w == -T::PI() {
        T::PI()
    } else {
        w
    }
}
