//! Arbitrary-precision natural numbers for exact counts.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Pow, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An exact non-negative count. Serialized as a decimal string so that
/// downstream JSON tooling never rounds it.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BigCount(BigUint);

impl BigCount {
    pub fn zero() -> Self {
        BigCount(BigUint::zero())
    }

    pub fn one() -> Self {
        BigCount(BigUint::one())
    }

    pub fn pow(base: u64, exp: u64) -> Self {
        BigCount(Pow::pow(BigUint::from(base), exp))
    }

    pub fn pow2(exp: u64) -> Self {
        BigCount(BigUint::one() << exp)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    /// Floor division. Panics on a zero divisor.
    pub fn div_floor(&self, divisor: &BigCount) -> BigCount {
        assert!(!divisor.is_zero(), "division by zero count");
        BigCount(&self.0 / &divisor.0)
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl From<usize> for BigCount {
    fn from(v: usize) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl From<u32> for BigCount {
    fn from(v: u32) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl From<BigUint> for BigCount {
    fn from(v: BigUint) -> Self {
        BigCount(v)
    }
}

impl From<BigCount> for BigUint {
    fn from(v: BigCount) -> Self {
        v.0
    }
}

impl Add for BigCount {
    type Output = BigCount;
    fn add(self, rhs: BigCount) -> BigCount {
        BigCount(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a BigCount> for &'a BigCount {
    type Output = BigCount;
    fn add(self, rhs: &BigCount) -> BigCount {
        BigCount(&self.0 + &rhs.0)
    }
}

impl AddAssign for BigCount {
    fn add_assign(&mut self, rhs: BigCount) {
        self.0 += rhs.0;
    }
}

impl AddAssign<&BigCount> for BigCount {
    fn add_assign(&mut self, rhs: &BigCount) {
        self.0 += &rhs.0;
    }
}

impl Mul for BigCount {
    type Output = BigCount;
    fn mul(self, rhs: BigCount) -> BigCount {
        BigCount(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a BigCount> for &'a BigCount {
    type Output = BigCount;
    fn mul(self, rhs: &BigCount) -> BigCount {
        BigCount(&self.0 * &rhs.0)
    }
}

impl Sum for BigCount {
    fn sum<I: Iterator<Item = BigCount>>(iter: I) -> Self {
        iter.fold(BigCount::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for BigCount {
    type Err = num_bigint::ParseBigIntError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BigUint::from_str(s).map(BigCount)
    }
}

impl Serialize for BigCount {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_str_radix(10))
    }
}

impl<'de> Deserialize<'de> for BigCount {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers() {
        assert_eq!(BigCount::pow2(4), BigCount::from(16u64));
        assert_eq!(BigCount::pow(3, 4), BigCount::from(81u64));
        assert_eq!(BigCount::pow2(100).to_string(), "1267650600228229401496703205376");
    }

    #[test]
    fn serializes_as_decimal_string() {
        let c = BigCount::pow2(70);
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, "\"1180591620717411303424\"");
        let back: BigCount = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn floor_division() {
        assert_eq!(BigCount::from(49u64).div_floor(&BigCount::from(16u64)), BigCount::from(3u64));
    }
}
