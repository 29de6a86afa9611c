//! Scalar abstraction for edge capacities and flow values.
//!
//! Min-cut membership is decided by exact equality (saturation and zero
//! flow), so only exact unsigned integer types qualify. Floating-point types
//! are deliberately not `Capacity`.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_traits::{PrimInt, Unsigned};

/// Exact, unsigned capacity type. Implemented for every primitive unsigned
/// integer.
pub trait Capacity: PrimInt + Unsigned + Debug + Display + FromStr + Default + Send + Sync + 'static {
    /// Sum of `values`, or `None` on overflow.
    fn checked_sum<I: IntoIterator<Item = Self>>(values: I) -> Option<Self> {
        values.into_iter().try_fold(Self::zero(), |acc, v| acc.checked_add(&v))
    }
}

impl<T> Capacity for T where T: PrimInt + Unsigned + Debug + Display + FromStr + Default + Send + Sync + 'static {}
