//! Exact rationals and small Bernoulli numbers.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::factor::factorize;
use super::functions::divisors;
use super::modular::mul_mod;
use super::primes::is_prime;
use crate::error::{Error, Result};

/// Largest index served by [`bernoulli`].
pub const BERNOULLI_CAP: u32 = 64;

/// An arbitrary-precision fraction kept in lowest terms with a positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        Self(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn as_inner(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for ExactRational {
    fn from(r: BigRational) -> Self {
        Self(r)
    }
}

impl std::ops::Add for &ExactRational {
    type Output = ExactRational;
    fn add(self, rhs: Self) -> ExactRational {
        ExactRational(&self.0 + &rhs.0)
    }
}

impl std::ops::Mul for &ExactRational {
    type Output = ExactRational;
    fn mul(self, rhs: Self) -> ExactRational {
        ExactRational(&self.0 * &rhs.0)
    }
}

/// `a/b`, or just `a` when the denominator is 1.
impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for ExactRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Self::new(n, d))
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExactRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

static BERNOULLI: OnceLock<Vec<ExactRational>> = OnceLock::new();

fn binomial_row(n: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 1..=n {
        let prev = row[k as usize - 1].clone();
        row.push(prev * BigInt::from(n - k + 1) / BigInt::from(k));
    }
    row
}

fn bernoulli_table() -> &'static [ExactRational] {
    BERNOULLI.get_or_init(|| {
        // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1, with B_0 = 1
        let mut table: Vec<BigRational> = vec![BigRational::one()];
        for m in 1..=BERNOULLI_CAP {
            let row = binomial_row(m + 1);
            let s = (0..m as usize).fold(BigRational::zero(), |acc, k| {
                acc + &table[k] * BigRational::from_integer(row[k].clone())
            });
            table.push(-s / BigRational::from_integer(BigInt::from(m + 1)));
        }
        table.into_iter().map(ExactRational).collect()
    })
}

/// `B_i` with `B_1 = -1/2`, for `i <= 64`.
pub fn bernoulli(i: u32) -> Result<ExactRational> {
    if i > BERNOULLI_CAP {
        return Err(Error::BernoulliIndex { index: i, cap: BERNOULLI_CAP });
    }
    Ok(bernoulli_table()[i as usize].clone())
}

/// Primes `p` with `(p - 1) | two_n`, ascending.
pub fn staudt_primes(two_n: u64) -> Result<Vec<u64>> {
    if two_n == 0 || two_n % 2 == 1 {
        return Err(Error::OddBernoulliArgument(two_n));
    }
    let mut primes: Vec<u64> = divisors(&factorize(two_n))
        .into_iter()
        .filter_map(|d| d.checked_add(1))
        .filter(|&p| is_prime(p))
        .collect();
    primes.sort_unstable();
    Ok(primes)
}

/// Denominator of `B_{2n}`: the product of primes `p` with `(p - 1) | 2n`.
pub fn bernoulli_denominator(two_n: u64) -> Result<BigUint> {
    Ok(staudt_primes(two_n)?.into_iter().fold(BigUint::one(), |acc, p| acc * BigUint::from(p)))
}

/// [`bernoulli_denominator`] reduced mod `m`, without forming the product.
pub fn bernoulli_denominator_mod(two_n: u64, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    Ok(staudt_primes(two_n)?.into_iter().fold(1 % m, |acc, p| mul_mod(acc, p % m, m)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(bernoulli(0).unwrap(), ExactRational::one());
        assert_eq!(bernoulli(1).unwrap(), ExactRational::new(-1, 2));
        assert_eq!(bernoulli(2).unwrap(), ExactRational::new(1, 6));
        assert_eq!(bernoulli(3).unwrap(), ExactRational::zero());
        assert_eq!(bernoulli(4).unwrap(), ExactRational::new(-1, 30));
        assert_eq!(bernoulli(12).unwrap(), ExactRational::new(-691, 2730));
        assert!(bernoulli(65).is_err());
    }

    #[test]
    fn odd_indices_vanish_and_signs_alternate() {
        for i in 1..=31u32 {
            assert!(bernoulli(2 * i + 1).unwrap().is_zero());
            let b = bernoulli(2 * i).unwrap();
            assert_eq!(b.is_negative(), i % 2 == 0, "B_{}", 2 * i);
        }
    }

    #[test]
    fn staudt_denominator() {
        assert_eq!(bernoulli_denominator(12).unwrap(), BigUint::from(2730u32));
        assert_eq!(staudt_primes(12).unwrap(), vec![2, 3, 5, 7, 13]);
        assert!(bernoulli_denominator(7).is_err());
        assert_eq!(bernoulli_denominator_mod(560, 561).unwrap(), 0);
    }

    #[test]
    fn rational_text_roundtrip() {
        let r = ExactRational::new(2, 6);
        assert_eq!(r.to_string(), "1/3");
        assert_eq!("1/3".parse::<ExactRational>().unwrap(), r);
        assert_eq!(ExactRational::new(4, 4).to_string(), "1");
        assert_eq!(ExactRational::new(0, 5), ExactRational::zero());
        assert_eq!(*ExactRational::new(3, -6).denom(), BigInt::from(2));
        assert!("1/0".parse::<ExactRational>().is_err());
    }
}
