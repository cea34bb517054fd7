//! Scalar abstraction: every floating-point routine in this crate is generic
//! over [`Real`], implemented for `f32` and `f64`.

use std::fmt::Debug;

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar (`f32` or `f64`).
///
/// The blanket impl covers any type with the required `num_traits` bounds;
/// in practice the crate is used with `f64` (see the type aliases at the
/// crate root) and all stated tolerances assume double precision.
pub trait Real: Float + FloatConst + FromPrimitive + Debug + Send + Sync + 'static {
    /// Bring an `f64` constant into the scalar type.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("constant not representable in scalar type")
    }

    /// Bring a container size into the scalar type.
    fn of_usize(n: usize) -> Self {
        Self::from_usize(n).expect("size not representable in scalar type")
    }
}

impl<T> Real for T where T: Float + FloatConst + FromPrimitive + Debug + Send + Sync + 'static {}
