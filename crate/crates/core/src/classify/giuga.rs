//! Giuga numbers, weak Giuga numbers, and Giuga's primality congruence.

use crate::arith::modular::{add_mod, pow_mod_unchecked};
use crate::arith::{euler_phi, power_sum_mod_factored, Factorization};
use crate::error::{Error, Result};

/// Squarefree composite `n` with `p | (n/p - 1)` for every prime `p | n`.
pub fn is_giuga(f: &Factorization) -> bool {
    let Some(n) = f.value() else { return false };
    f.is_composite() && f.is_squarefree() && f.primes().all(|p| (n / p - 1) % p == 0)
}

/// Composite `n` with `p^2 | (n - p)` for every prime `p | n`.
pub fn is_weak_giuga(f: &Factorization) -> bool {
    f.is_composite()
        && f.primes().all(|p| match p.checked_mul(p) {
            Some(p2) => f.residue(p2) == p,
            None => false,
        })
}

/// Composite `n` with `sum_{k=1}^{n-1} k^phi(n) ≡ -1 (mod n)`, summed term by term.
pub fn is_giuga_oracle(n: u64) -> Result<bool> {
    let f = crate::arith::factorize(n);
    if !f.is_composite() {
        return Err(Error::NotComposite { what: "giuga oracle", n });
    }
    let phi = euler_phi(&f);
    let s = (1..n).fold(0u64, |acc, k| add_mod(acc, pow_mod_unchecked(k, phi, n), n));
    Ok(s == n - 1)
}

/// A composite `n` with `S_{n-1}(n) ≡ -1 (mod n)`; none is known to exist.
pub fn is_giuga_counterexample(f: &Factorization) -> bool {
    let Some(n) = f.value() else { return false };
    f.is_composite() && power_sum_mod_factored(n - 1, n, f) == n - 1
}
