//! K-numbers and k-Lehmer numbers.

use crate::arith::{euler_phi, factorize, gcd, Factorization};
use crate::error::{Error, Result};

/// Composite `n` with `gcd(n, phi(n)) = 1`.
pub fn is_k_number(f: &Factorization) -> bool {
    match f.value() {
        Some(n) => f.is_composite() && gcd(n, euler_phi(f)) == 1,
        None => false,
    }
}

fn valuation(mut m: u64, p: u64) -> u32 {
    let mut v = 0;
    while m % p == 0 {
        m /= p;
        v += 1;
    }
    v
}

/// Smallest `k` with `phi(n) | (n - 1)^k`.
///
/// `Ok(None)` when no such `k` exists, i.e. `rad(phi(n))` does not divide
/// `n - 1`. The index is found from prime valuations, so `(n - 1)^k` is never
/// formed; an index above `k_max` is reported as
/// [`Error::LehmerBoundExceeded`] rather than folded into `None`.
pub fn lehmer_index(f: &Factorization, k_max: u32) -> Result<Option<u32>> {
    let n = f.value().ok_or(Error::Overflow)?;
    if !f.is_composite() {
        return Err(Error::NotComposite { what: "lehmer index", n });
    }
    let phi = factorize(euler_phi(f));
    let mut k = 1u32;
    for pp in phi.factors() {
        let b = valuation(n - 1, pp.prime);
        if b == 0 {
            return Ok(None);
        }
        k = k.max(pp.exp.div_ceil(b));
    }
    if k > k_max {
        return Err(Error::LehmerBoundExceeded { n, required: k, k_max });
    }
    Ok(Some(k))
}
