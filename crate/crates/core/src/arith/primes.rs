//! Small-prime table and deterministic primality for 64-bit integers.

use std::sync::OnceLock;

use super::modular::{mul_mod, pow_mod_unchecked};

/// Primes below this bound are held in the shared table.
pub const PRIME_TABLE_LIMIT: u64 = 1_000_000;

/// Bases for which strong-probable-prime testing is exact on all `n < 2^64`.
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();

/// All primes below [`PRIME_TABLE_LIMIT`], ascending. Built once on first use.
pub fn small_primes() -> &'static [u32] {
    PRIMES.get_or_init(|| sieve_primes(PRIME_TABLE_LIMIT as usize))
}

/// Sieve of Eratosthenes over `[0, limit)`.
pub fn sieve_primes(limit: usize) -> Vec<u32> {
    if limit < 3 {
        return Vec::new();
    }
    let mut composite = vec![false; limit];
    let mut primes = Vec::with_capacity(limit / 10);
    for i in 2..limit {
        if !composite[i] {
            primes.push(i as u32);
            let mut j = i * i;
            while j < limit {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

fn is_strong_probable_prime(n: u64, base: u64) -> bool {
    let a = base % n;
    if a == 0 {
        return true;
    }
    let mut d = n - 1;
    let s = d.trailing_zeros();
    d >>= s;
    let mut x = pow_mod_unchecked(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

/// Exact primality for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    if n < 41 * 41 {
        return true;
    }
    if n < PRIME_TABLE_LIMIT {
        return small_primes().binary_search(&(n as u32)).is_ok();
    }
    MR_BASES.iter().all(|&b| is_strong_probable_prime(n, b))
}
