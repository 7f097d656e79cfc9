use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::geometry::Rational;

/// Exact ring used inside the dynamic program: machine integers when the
/// input allows it, rationals otherwise.
pub(crate) trait Scalar:
    Clone
    + Ord
    + Zero
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + std::fmt::Debug
{
    fn to_rational(&self) -> Rational;
}

impl Scalar for i128 {
    fn to_rational(&self) -> Rational {
        Rational::from_integer(BigInt::from(*self))
    }
}

impl Scalar for Rational {
    fn to_rational(&self) -> Rational {
        self.clone()
    }
}

/// Coordinates whose differences multiply without overflowing `i128`.
const COORD_BOUND_BITS: u64 = 60;
/// Weight sums that stay far from the `i128` limit.
const WEIGHT_BOUND_BITS: u64 = 100;

fn common_denominator<'a>(values: impl Iterator<Item = &'a Rational>) -> BigInt {
    values.fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Scales one coordinate axis to integers if the result fits the bound.
/// A positive per-axis scale leaves every orientation sign unchanged.
pub(crate) fn integer_axis(values: &[&Rational]) -> Option<Vec<i128>> {
    let scale = common_denominator(values.iter().copied());
    let limit = BigInt::one() << COORD_BOUND_BITS;
    values
        .iter()
        .map(|v| {
            let scaled = v.numer() * (&scale / v.denom());
            if scaled.abs() >= limit {
                None
            } else {
                scaled.to_i128()
            }
        })
        .collect()
}

pub(crate) fn integer_weights(values: &[&Rational]) -> Option<Vec<i128>> {
    if values.iter().any(|v| !v.is_integer()) {
        return None;
    }
    let total: BigInt = values.iter().map(|v| v.numer().abs()).sum();
    if total.bits() > WEIGHT_BOUND_BITS {
        return None;
    }
    values.iter().map(|v| v.numer().to_i128()).collect()
}
