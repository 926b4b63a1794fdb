use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{FromPrimitive, Num, Signed};

/// Numeric bounds for game worths: an ordered field-like scalar.
///
/// Everything in this crate is written against this trait; the shipped
/// instantiation is the exact rational [`crate::Rational`], which keeps all
/// arithmetic free of rounding. Any ordered exact scalar satisfying the
/// bounds below works.
pub trait GameScalar:
    Clone + Ord + Num + Signed + FromPrimitive + Sum + Debug + Display
{
    /// Lift a small integer into the scalar type.
    fn from_int(value: i64) -> Self {
        Self::from_i64(value).expect("integer does not fit in the scalar type")
    }
}

impl<T> GameScalar for T where
    T: Clone + Ord + Num + Signed + FromPrimitive + Sum + Debug + Display
{
}
