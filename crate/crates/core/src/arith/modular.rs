//! Word-sized modular arithmetic.
//!
//! Products are formed in `u128`, so any modulus that fits in a `u64` is
//! safe from intermediate overflow.

use crate::error::{Error, Result};

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + b as u128) % m as u128) as u64
}

/// `base^exponent mod modulus`, with `x^0 = 1` reduced mod the modulus.
pub fn mod_pow(base: u64, exponent: u64, modulus: u64) -> Result<u64> {
    if modulus == 0 {
        return Err(Error::ZeroModulus);
    }
    Ok(pow_mod_unchecked(base, exponent, modulus))
}

/// Square-and-multiply without the zero-modulus check. Callers guarantee `m >= 1`.
#[inline]
pub(crate) fn pow_mod_unchecked(base: u64, mut exponent: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut b = base % m;
    while exponent > 0 {
        if exponent & 1 == 1 {
            result = mul_mod(result, b, m);
        }
        exponent >>= 1;
        if exponent > 0 {
            b = mul_mod(b, b, m);
        }
    }
    result
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least common multiple; `None` on overflow.
pub fn lcm(a: u64, b: u64) -> Option<u64> {
    if a == 0 || b == 0 {
        return Some(0);
    }
    (a / gcd(a, b)).checked_mul(b)
}

/// Extended Euclid: returns `(g, x, y)` with `a*x + b*y = g`.
pub fn extended_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    (old_r, old_s, old_t)
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 0 {
        return None;
    }
    if m == 1 {
        return Some(0);
    }
    let (g, x, _) = extended_gcd((a % m) as i128, m as i128);
    if g != 1 {
        return None;
    }
    Some(x.rem_euclid(m as i128) as u64)
}

/// Smallest `d >= 1` with `a^d ≡ 1 (mod m)`; `None` when `gcd(a, m) != 1`.
///
/// Strips prime factors from `lambda(m)`, which every order divides.
pub fn multiplicative_order(a: u64, m: u64) -> Option<u64> {
    if m == 0 || gcd(a, m) != 1 {
        return None;
    }
    if m == 1 {
        return Some(1);
    }
    let a = a % m;
    let lambda = super::functions::carmichael_lambda(&super::factor::factorize(m));
    let mut d = lambda;
    for q in super::factor::factorize(lambda).primes() {
        while d % q == 0 && pow_mod_unchecked(a, d / q, m) == 1 {
            d /= q;
        }
    }
    Some(d)
}

/// Floor of the integer `k`-th root of `n`.
pub fn integer_root(n: u64, k: u32) -> u64 {
    if k == 0 {
        return 1;
    }
    if k == 1 || n < 2 {
        return n;
    }
    let mut r = (n as f64).powf(1.0 / k as f64).round() as u64;
    let pow_le = |r: u64| -> bool {
        match r.checked_pow(k) {
            Some(v) => v <= n,
            None => false,
        }
    };
    while r > 0 && !pow_le(r) {
        r -= 1;
    }
    while pow_le(r + 1) {
        r += 1;
    }
    r
}

pub fn isqrt(n: u64) -> u64 {
    integer_root(n, 2)
}
