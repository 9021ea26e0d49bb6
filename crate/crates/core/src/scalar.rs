//! Exact scalar types.
//!
//! Every coordinate in this crate lives in an ordered field of exact
//! rationals. [`Scalar`] is the bound the generic code is written against;
//! it is implemented for `Ratio<i64>`, `Ratio<i128>` and `Ratio<BigInt>`.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, NumAssign, Signed, ToPrimitive};

/// An exact ordered field element.
pub trait Scalar:
    Clone + Ord + Hash + Debug + Display + Signed + NumAssign + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self;

    fn from_frac(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    fn is_integral(&self) -> bool;

    /// Exact conversion to `i64`; `None` when non-integral or out of range.
    fn to_i64_exact(&self) -> Option<i64>;

    fn floor_i64(&self) -> i64;

    fn ceil_i64(&self) -> i64;

    /// Lowest-terms numerator and denominator (denominator > 0).
    fn parts(&self) -> (BigInt, BigInt);

    fn to_big(&self) -> BigRational {
        let (n, d) = self.parts();
        BigRational::new(n, d)
    }
}

impl<I> Scalar for Ratio<I>
where
    I: Integer
        + Signed
        + Clone
        + Hash
        + Debug
        + Display
        + FromPrimitive
        + ToPrimitive
        + NumAssign
        + Into<BigInt>
        + Send
        + Sync
        + 'static,
{
    fn from_int(n: i64) -> Self {
        Ratio::from_integer(I::from_i64(n).expect("integer fits the scalar backend"))
    }

    fn is_integral(&self) -> bool {
        Ratio::is_integer(self)
    }

    fn to_i64_exact(&self) -> Option<i64> {
        if Ratio::is_integer(self) {
            self.numer().to_i64()
        } else {
            None
        }
    }

    fn floor_i64(&self) -> i64 {
        self.floor()
            .to_integer()
            .to_i64()
            .expect("floor fits in i64")
    }

    fn ceil_i64(&self) -> i64 {
        self.ceil().to_integer().to_i64().expect("ceil fits in i64")
    }

    fn parts(&self) -> (BigInt, BigInt) {
        (self.numer().clone().into(), self.denom().clone().into())
    }
}

/// Renders an exact value as an integer when possible, `p/q` otherwise.
pub fn render<T: Scalar>(x: &T) -> String {
    let (n, d) = x.parts();
    if d == BigInt::from(1) {
        n.to_string()
    } else {
        format!("{n}/{d}")
    }
}
