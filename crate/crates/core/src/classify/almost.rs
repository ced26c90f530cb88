//! Almost Carmichael numbers of order `k`.

use crate::arith::{gcd, Factorization};
use crate::error::{Error, Result};

/// For each prime `p | n`, the least `t >= 1` with `(p - 1) | t(n - 1)`.
fn korselt_defects(f: &Factorization) -> Vec<(u64, u64)> {
    f.primes()
        .map(|p| {
            let m = p - 1;
            let n_minus_one = (f.residue(m) + m - 1) % m;
            (p, m / gcd(m, n_minus_one))
        })
        .collect()
}

/// Smallest `k` in `[2, k_max]` for which `n = p_1...p_s` (odd, squarefree,
/// `s >= 2`) is an almost Carmichael number of order `k`.
///
/// That happens exactly when all but one prime satisfy `(p - 1) | (n - 1)`
/// and the remaining prime `p_j` needs the multiplier `k` to get
/// `(p_j - 1) | k(n - 1)`. Carmichael numbers have no such `p_j` and give `None`.
pub fn almost_carmichael_order(f: &Factorization, k_max: u32) -> Result<Option<u32>> {
    let shown = || f.to_string();
    if f.omega() < 2 {
        return Err(Error::PrimePower(shown()));
    }
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree(shown()));
    }
    if !f.is_odd() {
        return Err(Error::EvenInput { what: "almost Carmichael order", n: f.value().unwrap_or(0) });
    }
    let mut failing = korselt_defects(f).into_iter().filter(|&(_, t)| t > 1);
    let Some((_, t)) = failing.next() else { return Ok(None) };
    if failing.next().is_some() {
        return Ok(None);
    }
    Ok((t <= k_max as u64).then_some(t as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::factorize;

    #[test]
    fn examples() {
        assert_eq!(almost_carmichael_order(&factorize(15), 10).unwrap(), Some(2));
        assert_eq!(almost_carmichael_order(&factorize(21), 10).unwrap(), Some(3));
        assert_eq!(almost_carmichael_order(&factorize(561), 10).unwrap(), None);
        assert_eq!(almost_carmichael_order(&factorize(21), 2).unwrap(), None);
        assert!(almost_carmichael_order(&factorize(45), 10).is_err());
        assert!(almost_carmichael_order(&factorize(27), 10).is_err());
        assert!(almost_carmichael_order(&factorize(6), 10).is_err());
    }

    /// The definition read literally: a fixed j with (p_j-1) | k(n-1), no
    /// m < k with m(p_j-1) | n-1, and the rest dividing n-1.
    fn literal(n: u64, primes: &[u64], k: u64) -> bool {
        primes.iter().enumerate().any(|(j, &pj)| {
            (k * (n - 1)) % (pj - 1) == 0
                && (1..k).all(|m| (n - 1) % (m * (pj - 1)) != 0)
                && primes.iter().enumerate().all(|(i, &p)| i == j || (n - 1) % (p - 1) == 0)
        })
    }

    #[test]
    fn agrees_with_literal_definition() {
        for n in (15..20_000u64).step_by(2) {
            let f = factorize(n);
            if f.omega() < 2 || !f.is_squarefree() {
                continue;
            }
            let primes: Vec<u64> = f.primes().collect();
            let expected = (2..=12u64).find(|&k| literal(n, &primes, k)).map(|k| k as u32);
            assert_eq!(almost_carmichael_order(&f, 12).unwrap(), expected, "n = {n}");
        }
    }
}
