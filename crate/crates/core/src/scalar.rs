//! Integer scalar used for Wiener sums, transmissions and deletion deltas.
//!
//! Every quantity computed by this crate is an exact integer (or a ratio of
//! integers), so the analysis code is generic over signed primitive integers
//! rather than floats. `i64` is the default; `i128` is available when sums over
//! very large graphs need the headroom.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, PrimInt, Signed, ToPrimitive};
use serde::de::DeserializeOwned;
use serde::Serialize;

/// Signed integer type that analysis results are accumulated in.
pub trait WienerScalar:
    PrimInt
    + Signed
    + Integer
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Hash
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + Serialize
    + DeserializeOwned
    + 'static
{
    /// Lossless conversion from a count or a distance; `None` on overflow.
    fn from_count(value: usize) -> Option<Self> {
        Self::from_usize(value)
    }
}

impl WienerScalar for i32 {}
impl WienerScalar for i64 {}
impl WienerScalar for i128 {}
