//! Weak Carmichael and Carmichael predicates.

use crate::arith::{bernoulli_denominator_mod, gcd, mod_pow, Factorization, PrimePower};
use crate::error::{Error, Result};

/// `(p - 1) | (n - 1)` for every prime `p | n`, on an odd composite `n`.
///
/// Works on exponent-form factorizations too: only `n mod (p - 1)` is needed.
pub fn is_weak_carmichael(f: &Factorization) -> bool {
    f.is_composite() && f.is_odd() && korselt_divisibility(f)
}

/// `(p - 1) | (n - 1)` for all `p | n`, with no parity or compositeness check.
pub(crate) fn korselt_divisibility(f: &Factorization) -> bool {
    f.primes().all(|p| {
        let m = p - 1;
        m == 1 || f.residue(m) == 1
    })
}

/// Squarefree weak Carmichael numbers: Korselt's criterion.
pub fn is_carmichael(f: &Factorization) -> bool {
    f.is_squarefree() && is_weak_carmichael(f)
}

/// Decides the defining congruence `sum k^(n-1) ≡ phi(n) (mod n)` over the
/// totatives `k` of `n` by direct modular exponentiation.
///
/// For odd `n` only the lower half of the totatives is visited: pairing `r`
/// with `n - r` turns the congruence into `2 * sum r^(n-1) ≡ phi(n)`.
/// Totatives are found with `gcd` alone, so this is independent of the
/// factorization-based criterion it is meant to check.
pub fn is_weak_carmichael_oracle(n: u64) -> Result<bool> {
    if n < 4 || crate::arith::is_prime(n) {
        return Err(Error::NotComposite { what: "weak Carmichael oracle", n });
    }
    let e = n - 1;
    let (sum, phi) = if n % 2 == 1 {
        let (mut s, mut count) = (0u64, 0u64);
        for r in (1..=n / 2).filter(|&r| gcd(r, n) == 1) {
            s = (s + mod_pow(r, e, n)?) % n;
            count += 1;
        }
        ((2 * s as u128 % n as u128) as u64, 2 * count)
    } else {
        let (mut s, mut count) = (0u64, 0u64);
        for r in (1..n).filter(|&r| gcd(r, n) == 1) {
            s = (s + mod_pow(r, e, n)?) % n;
            count += 1;
        }
        (s, count)
    };
    Ok(sum == phi % n)
}

/// `n` squarefree and `n` divides the denominator of `B_(n-1)`, which by von
/// Staudt–Clausen is the product of primes `p` with `(p - 1) | (n - 1)`.
pub fn is_carmichael_bernoulli(f: &Factorization) -> bool {
    let Some(n) = f.value() else { return false };
    if !f.is_composite() || n % 2 == 0 || !f.is_squarefree() {
        return false;
    }
    bernoulli_denominator_mod(n - 1, n).map(|r| r == 0).unwrap_or(false)
}

/// A weak Carmichael number that is not `m^k` (`k >= 2`) for any weak Carmichael `m`.
pub fn is_primitive_wcn(f: &Factorization) -> Result<bool> {
    if !is_weak_carmichael(f) {
        return Err(Error::NotWeakCarmichael(f.to_string()));
    }
    let g = f.factors().iter().fold(0u32, |acc, pp| gcd(acc as u64, pp.exp as u64) as u32);
    for k in 2..=g {
        if g % k != 0 {
            continue;
        }
        let root = Factorization::from_sorted_unchecked(
            f.factors().iter().map(|pp| PrimePower::new(pp.prime, pp.exp / k)).collect(),
        );
        if is_weak_carmichael(&root) {
            return Ok(false);
        }
    }
    Ok(true)
}
