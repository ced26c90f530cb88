//! Canonical prime factorizations and the 64-bit factoring routine.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::modular::{gcd, mul_mod, pow_mod_unchecked};
use super::primes::{is_prime, small_primes, PRIME_TABLE_LIMIT};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrimePower {
    pub prime: u64,
    pub exp: u32,
}

impl PrimePower {
    pub fn new(prime: u64, exp: u32) -> Self {
        Self { prime, exp }
    }
}

/// `n = p_1^e_1 ... p_s^e_s` with `p_1 < ... < p_s`.
///
/// The represented integer need not fit in 64 bits: family constructions
/// produce factorizations such as `561^80` that are only ever handled in
/// exponent form. [`Factorization::value`] is `None` in that case.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factorization {
    factors: Vec<PrimePower>,
    #[serde(skip)]
    value: Option<u64>,
}

impl Factorization {
    pub fn one() -> Self {
        Self { factors: Vec::new(), value: Some(1) }
    }

    /// Build from prime powers, checking the canonical-form invariants.
    pub fn from_prime_powers(mut factors: Vec<PrimePower>) -> Result<Self> {
        factors.retain(|pp| pp.exp > 0);
        for pp in &factors {
            if !is_prime(pp.prime) {
                return Err(Error::NotPrime(pp.prime));
            }
        }
        if factors.windows(2).any(|w| w[0].prime >= w[1].prime) {
            return Err(Error::UnorderedPrimes);
        }
        Ok(Self::from_sorted_unchecked(factors))
    }

    /// Caller guarantees ascending distinct primes and positive exponents.
    pub(crate) fn from_sorted_unchecked(factors: Vec<PrimePower>) -> Self {
        let value = factors.iter().try_fold(1u64, |acc, pp| {
            let pk = pp.prime.checked_pow(pp.exp)?;
            acc.checked_mul(pk)
        });
        Self { factors, value }
    }

    pub fn factors(&self) -> &[PrimePower] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|pp| pp.prime)
    }

    /// The integer itself, when it fits in 64 bits.
    pub fn value(&self) -> Option<u64> {
        self.value
    }

    pub fn to_biguint(&self) -> BigUint {
        self.factors.iter().fold(BigUint::from(1u32), |acc, pp| acc * BigUint::from(pp.prime).pow(pp.exp))
    }

    /// `n mod m` computed from the exponent form. `m` must be nonzero.
    pub fn residue(&self, m: u64) -> u64 {
        if let Some(v) = self.value {
            return v % m;
        }
        self.factors
            .iter()
            .fold(1 % m, |acc, pp| mul_mod(acc, pow_mod_unchecked(pp.prime, pp.exp as u64, m), m))
    }

    /// Number of distinct prime factors.
    pub fn omega(&self) -> usize {
        self.factors.len()
    }

    /// Number of prime factors counted with multiplicity.
    pub fn big_omega(&self) -> u64 {
        self.factors.iter().map(|pp| pp.exp as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_prime(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].exp == 1
    }

    pub fn is_composite(&self) -> bool {
        self.big_omega() >= 2
    }

    pub fn is_prime_power(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|pp| pp.exp == 1)
    }

    pub fn is_odd(&self) -> bool {
        self.factors.first().is_none_or(|pp| pp.prime != 2)
    }

    pub fn largest_prime(&self) -> Option<u64> {
        self.factors.last().map(|pp| pp.prime)
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors.iter().find(|pp| pp.prime == p).map_or(0, |pp| pp.exp)
    }

    /// `n^k` in exponent form.
    pub fn pow(&self, k: u32) -> Self {
        let factors = self.factors.iter().map(|pp| PrimePower::new(pp.prime, pp.exp * k)).collect();
        Self::from_sorted_unchecked(factors)
    }

    /// Product of two factorizations.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.factors, &other.factors);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].prime < b[j].prime) {
                out.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j].prime < a[i].prime {
                out.push(b[j]);
                j += 1;
            } else {
                out.push(PrimePower::new(a[i].prime, a[i].exp + b[j].exp));
                i += 1;
                j += 1;
            }
        }
        Self::from_sorted_unchecked(out)
    }

    /// The factorization with `p` removed entirely.
    pub fn without(&self, p: u64) -> Self {
        let factors = self.factors.iter().copied().filter(|pp| pp.prime != p).collect();
        Self::from_sorted_unchecked(factors)
    }

    /// Render with the given separator between prime powers; exponent 1 omitted.
    pub fn render(&self, sep: &str) -> String {
        if self.factors.is_empty() {
            return "1".to_string();
        }
        self.factors
            .iter()
            .map(|pp| if pp.exp == 1 { pp.prime.to_string() } else { format!("{}^{}", pp.prime, pp.exp) })
            .collect::<Vec<_>>()
            .join(sep)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("·"))
    }
}

/// Parses `3^5·11·17`, `3^5*11*17`, or `1`.
impl FromStr for Factorization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Self::one());
        }
        let bad = || Error::Parse(s.to_string());
        let mut factors = Vec::new();
        for part in s.split(['·', '*']) {
            let (p, e) = match part.split_once('^') {
                Some((p, e)) => (p, e.parse::<u32>().map_err(|_| bad())?),
                None => (part, 1),
            };
            let p = p.trim().parse::<u64>().map_err(|_| bad())?;
            if e == 0 {
                return Err(bad());
            }
            factors.push(PrimePower::new(p, e));
        }
        Self::from_prime_powers(factors)
    }
}

/// Canonical factorization of `n`. `factorize(0)` is treated as an empty product.
pub fn factorize(n: u64) -> Factorization {
    let mut factors = Vec::new();
    if n <= 1 {
        return Factorization::one();
    }
    let mut m = n;
    for &p in small_primes() {
        let p = p as u64;
        if p * p > m {
            break;
        }
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            factors.push(PrimePower::new(p, e));
        }
    }
    if m > 1 {
        if m < PRIME_TABLE_LIMIT * PRIME_TABLE_LIMIT || is_prime(m) {
            // every prime below the table limit has been removed, so a
            // cofactor below limit^2 is prime
            factors.push(PrimePower::new(m, 1));
        } else {
            let mut large = Vec::new();
            split_large(m, &mut large);
            large.sort_unstable();
            for p in large {
                match factors.last_mut() {
                    Some(last) if last.prime == p => last.exp += 1,
                    _ => factors.push(PrimePower::new(p, 1)),
                }
            }
        }
    }
    let f = Factorization::from_sorted_unchecked(factors);
    debug_assert_eq!(f.value(), Some(n));
    f
}

fn split_large(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(n);
    split_large(d, out);
    split_large(n / d, out);
}

/// Brent's cycle-finding variant of Pollard rho. `n` must be odd and composite.
fn pollard_brent(n: u64) -> u64 {
    let root = super::modular::isqrt(n);
    if root * root == n {
        return root;
    }
    for c in 1u64.. {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut ys) = (0u64, 2u64, 0u64);
        let mut q = 1u64;
        let mut g = 1u64;
        let mut r = 1u64;
        const BATCH: u64 = 128;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!()
}
