use num_traits::{Float, FromPrimitive};
use std::fmt::Debug;
use std::iter::Sum;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

/// Floating-point scalar used by score-valued algorithms. Implemented by
/// `f32` and `f64`; the crate-root aliases fix `f64` as the default.
pub trait Scalar:
    Float + FromPrimitive + AddAssign + SubAssign + MulAssign + DivAssign + Sum + Debug + 'static
{
    fn from_usize_(v: usize) -> Self {
        Self::from_usize(v).expect("usize fits scalar")
    }

    fn from_f64_(v: f64) -> Self {
        Self::from_f64(v).expect("f64 fits scalar")
    }
}

impl<T> Scalar for T where
    T: Float + FromPrimitive + AddAssign + SubAssign + MulAssign + DivAssign + Sum + Debug + 'static
{
}
