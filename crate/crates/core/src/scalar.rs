//! Floating-point scalar abstraction shared by the transform modules.

use num_traits::{Float, FloatConst, FromPrimitive};
use std::fmt::{Debug, Display};

/// Real scalar the transforms are generic over: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Converts a count or index. Every `usize` is representable (possibly rounded).
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("usize is representable as a float")
    }

    fn from_signed(n: i64) -> Self {
        Self::from_i64(n).expect("i64 is representable as a float")
    }
}

impl Real for f32 {}
impl Real for f64 {}

pub(crate) fn is_finite<T: Real>(z: &num_complex::Complex<T>) -> bool {
    z.re.is_finite() && z.im.is_finite()
}
