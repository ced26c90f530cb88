//! Fermat liars: bases `a` coprime to `n` with `a^(n-1) ≡ 1 (mod n)`.

use serde::{Deserialize, Serialize};

use crate::arith::{euler_phi, gcd, is_prime, mod_pow, ExactRational, Factorization};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiarStats {
    pub n: u64,
    /// `F(n)`, the number of liars in `[1, n - 1]`.
    pub liars: u64,
    /// `f(n) = F(n) / phi(n)`.
    pub fraction: ExactRational,
    /// `(p, gcd(p - 1, n - 1))` for each prime `p | n`.
    pub per_prime: Vec<(u64, u64)>,
}

/// `F(n) = prod gcd(p - 1, n - 1)` over the primes dividing `n`.
pub fn fermat_liar_count(f: &Factorization) -> Result<LiarStats> {
    let n = f.value().ok_or(Error::Overflow)?;
    if n < 2 {
        return Err(Error::NonPositive("n - 1"));
    }
    let per_prime: Vec<(u64, u64)> = f.primes().map(|p| (p, gcd(p - 1, n - 1))).collect();
    let liars = per_prime.iter().map(|&(_, g)| g).product();
    let fraction = ExactRational::new(liars, euler_phi(f));
    Ok(LiarStats { n, liars, fraction, per_prime })
}

/// `a^(n-1) ≡ 1 (mod n)` for composite `n`; `false` for primes.
pub fn is_fermat_pseudoprime(n: u64, a: u64) -> Result<bool> {
    if n < 2 {
        return Err(Error::NonPositive("n - 1"));
    }
    if gcd(a, n) != 1 {
        return Err(Error::NotCoprime { base: a, n });
    }
    Ok(!is_prime(n) && mod_pow(a, n - 1, n)? == 1)
}
