//! Scalar abstraction for the numerical core.
//!
//! Everything downstream is generic over a real floating-point type so the
//! same code runs at `f32` or `f64`. Concrete aliases for the common `f64`
//! instantiation live at the crate root.

use std::fmt::{Debug, Display};
use std::iter::{Product, Sum};
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Real scalar used throughout the crate: an IEEE float with the usual
/// transcendental functions and literal conversion.
pub trait Scalar:
    Float
    + FromPrimitive
    + ToPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum
    + Product
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + 'static
{
}

impl<T> Scalar for T where
    T: Float
        + FromPrimitive
        + ToPrimitive
        + AddAssign
        + SubAssign
        + MulAssign
        + DivAssign
        + Sum
        + Product
        + Debug
        + Display
        + Default
        + Send
        + Sync
        + 'static
{
}

/// Converts an `f64` literal into the working scalar type.
#[inline]
pub fn real<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("finite f64 literal must convert")
}

/// Base-2 logarithm helper that maps `0` to `-inf` without panicking.
#[inline]
pub fn log2<T: Scalar>(x: T) -> T {
    x.log2()
}

/// Probabilities below this threshold are treated as exact zeros when
/// computing supports; numerical dust must not change `log |supp|`.
#[inline]
pub fn support_cutoff<T: Scalar>() -> T {
    real(1e-14)
}
