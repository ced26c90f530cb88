//! Power sums over initial segments and over reduced residue systems.

use num_bigint::BigUint;
use num_traits::Zero;

use super::factor::{factorize, Factorization};
use super::modular::{add_mod, pow_mod_unchecked};
use crate::error::{Error, Result};

/// `S_l(m) = 1^l + 2^l + ... + (m-1)^l mod m`, in time dominated by factoring `m`.
///
/// Even `l`: `-(sum of m/p over primes p | m with (p-1) | l) mod m`.
/// Odd `l`: the terms `i^l` and `(m-i)^l` cancel mod `m`, leaving only the
/// middle term `(m/2)^l` when `m` is even.
pub fn power_sum_mod(l: u64, m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::NonPositive("m - 1"));
    }
    if l == 0 {
        return Ok((m - 1) % m);
    }
    Ok(power_sum_mod_factored(l, m, &factorize(m)))
}

/// As [`power_sum_mod`] with the factorization of `m` supplied.
pub fn power_sum_mod_factored(l: u64, m: u64, fm: &Factorization) -> u64 {
    if l == 0 {
        return m - 1;
    }
    if l % 2 == 1 {
        return if m % 2 == 0 { pow_mod_unchecked(m / 2, l, m) } else { 0 };
    }
    let s = fm.primes().filter(|&p| l % (p - 1) == 0).fold(0u64, |acc, p| add_mod(acc, m / p, m));
    (m - s) % m
}

/// `phi_k(n)`, the sum of `t^k` over totatives `t` of `n`; `phi_k(1) = 0`.
pub fn totative_power_sum(n: u64, k: u32) -> BigUint {
    if n <= 1 {
        return BigUint::zero();
    }
    let bits = 64 - n.leading_zeros();
    let totatives = Totatives::new(n);
    if (k as u64 + 1) * bits as u64 <= 63 {
        // each term < n^k and there are < n of them
        let s: u64 = totatives.map(|t| t.pow(k)).sum();
        return BigUint::from(s);
    }
    totatives.fold(BigUint::zero(), |acc, t| acc + BigUint::from(t).pow(k))
}

/// The reduced residues `1 <= r < n` with `gcd(r, n) = 1`, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotativeSet {
    pub n: u64,
    pub residues: Vec<u64>,
}

impl TotativeSet {
    pub fn len(&self) -> usize {
        self.residues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty()
    }

    /// `r_1 .. r_{phi(n)/2}`; the upper half is `n - r` of these.
    pub fn lower_half(&self) -> &[u64] {
        &self.residues[..self.residues.len() / 2]
    }
}

pub fn reduced_residues(n: u64) -> TotativeSet {
    TotativeSet { n, residues: Totatives::new(n).collect() }
}

/// Streaming totatives of `n`, optionally stopping below a bound.
#[derive(Debug, Clone)]
pub struct Totatives {
    primes: Vec<u64>,
    next: u64,
    end: u64,
}

impl Totatives {
    pub fn new(n: u64) -> Self {
        Self::with_factorization(n, &factorize(n))
    }

    pub fn with_factorization(n: u64, f: &Factorization) -> Self {
        Self { primes: f.primes().collect(), next: 1, end: n }
    }

    /// Totatives below `n/2`: for `n >= 3` exactly the lower half `r_1..r_{phi(n)/2}`.
    pub fn lower_half(n: u64, f: &Factorization) -> Self {
        let mut it = Self::with_factorization(n, f);
        it.end = n.div_ceil(2);
        if n <= 2 {
            it.end = n;
        }
        it
    }
}

impl Iterator for Totatives {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        while self.next < self.end {
            let r = self.next;
            self.next += 1;
            if self.primes.iter().all(|&p| r % p != 0) {
                return Some(r);
            }
        }
        None
    }
}
