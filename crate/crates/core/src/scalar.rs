//! The integer scalar used for Hodge numbers.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact signed integers: `i64`, `i128` and `BigInt` all qualify.
///
/// Hodge numbers are naturals, but intermediate values (primitive numbers of
/// invalid tables, inequality residuals) can be negative.
pub trait HodgeInt:
    Signed
    + Clone
    + Ord
    + Hash
    + Debug
    + Display
    + FromStr
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    fn from_u64_exact(v: u64) -> Self {
        Self::from_u64(v).expect("scalar type too narrow for value")
    }

    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("scalar type too narrow for value")
    }
}

impl<T> HodgeInt for T where
    T: Signed
        + Clone
        + Ord
        + Hash
        + Debug
        + Display
        + FromStr
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}
