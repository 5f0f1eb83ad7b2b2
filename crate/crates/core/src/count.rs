//! Exact non-negative counts.
//!
//! Every count in the crate is a [`Count`], a checked 128-bit integer. Arithmetic
//! that would overflow panics with a message instead of wrapping, so a reported
//! value is always exact.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Count(u128);

impl Count {
    pub const ZERO: Count = Count(0);
    pub const ONE: Count = Count(1);

    pub const fn new(value: u128) -> Self {
        Count(value)
    }

    pub const fn get(self) -> u128 {
        self.0
    }

    pub fn checked_sub(self, other: Count) -> Option<Count> {
        self.0.checked_sub(other.0).map(Count)
    }

    /// Exact division; `None` when `divisor` is zero or does not divide `self`.
    pub fn exact_div(self, divisor: Count) -> Option<Count> {
        if divisor.0 == 0 || self.0 % divisor.0 != 0 {
            None
        } else {
            Some(Count(self.0 / divisor.0))
        }
    }

    /// `self / other` as a float, for reporting ratios.
    pub fn ratio(self, other: Count) -> f64 {
        self.0 as f64 / other.0 as f64
    }
}

impl From<u64> for Count {
    fn from(v: u64) -> Self {
        Count(v as u128)
    }
}

impl From<usize> for Count {
    fn from(v: usize) -> Self {
        Count(v as u128)
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for Count {
    type Output = Count;

    fn add(self, rhs: Count) -> Count {
        Count(self.0.checked_add(rhs.0).expect("count overflow in addition"))
    }
}

impl AddAssign for Count {
    fn add_assign(&mut self, rhs: Count) {
        *self = *self + rhs;
    }
}

impl Mul for Count {
    type Output = Count;

    fn mul(self, rhs: Count) -> Count {
        Count(self.0.checked_mul(rhs.0).expect("count overflow in multiplication"))
    }
}

impl Sum for Count {
    fn sum<I: Iterator<Item = Count>>(iter: I) -> Count {
        iter.fold(Count::ZERO, |a, b| a + b)
    }
}

impl Product for Count {
    fn product<I: Iterator<Item = Count>>(iter: I) -> Count {
        iter.fold(Count::ONE, |a, b| a * b)
    }
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Count {
    if k > n {
        return Count::ZERO;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        // acc * (n - i) is divisible by (i + 1) after the multiplication.
        acc = acc
            .checked_mul(n as u128 - i)
            .expect("count overflow in binomial")
            / (i + 1);
    }
    Count(acc)
}

/// Falling factorial `n (n-1) ... (n-k+1)`.
pub fn falling(n: u64, k: u64) -> Count {
    if k > n {
        return Count::ZERO;
    }
    (0..k).map(|i| Count::from(n - i)).product()
}
