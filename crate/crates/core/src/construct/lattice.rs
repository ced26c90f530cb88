use crate::arith::modular::pow_mod_unchecked;
use crate::arith::{carmichael_lambda, cw_unchecked, is_prime, lcm, multiplicative_order, Factorization};
use crate::error::{Error, Result};

use super::family::{FamilyDescriptor, FamilyKind};

fn check_odd_prime_pair(p: u64, q: u64) -> Result<()> {
    if p == q || p % 2 == 0 || q % 2 == 0 || !is_prime(p) || !is_prime(q) {
        return Err(Error::BadPrimePair { p, q });
    }
    if p > q {
        return Err(Error::UnorderedPrimes);
    }
    Ok(())
}

/// For odd primes `p < q`, the pair `(u, v)` such that `p^a q^b` is a weak
/// Carmichael number exactly when `u | a` and `v | b`; `None` when `p | q - 1`
/// and no such number exists.
pub fn prime_power_pair_family(p: u64, q: u64) -> Result<Option<(u64, u64)>> {
    check_odd_prime_pair(p, q)?;
    if (q - 1) % p == 0 {
        return Ok(None);
    }
    let u = multiplicative_order(p, q - 1).expect("p coprime to q - 1");
    let v = multiplicative_order(q, p - 1).expect("q coprime to p - 1");
    Ok(Some((u, v)))
}

/// Like [`prime_power_pair_family`], but failing with the offending
/// divisibility instead of returning `None`.
pub fn prime_power_pair_descriptor(p: u64, q: u64) -> Result<FamilyDescriptor> {
    let (u, v) = prime_power_pair_family(p, q)?.ok_or(Error::PrimeDividesPredecessor { p, q })?;
    let small = |x: u64| u32::try_from(x).map_err(|_| Error::Overflow);
    let (u_exp, v_exp) = (small(u)?, small(v)?);
    Ok(FamilyDescriptor::new(
        FamilyKind::PrimePowerPair,
        vec![(p, 0), (q, 0)],
        vec![vec![(p, u_exp)], vec![(q, v_exp)]],
        format!("{p}^a {q}^b with {u} | a and {v} | b"),
        vec![("p", p), ("q", q), ("u", u), ("v", v)],
    ))
}

fn check_wong_primes(primes: &[u64]) -> Result<()> {
    if primes.len() < 2 {
        return Err(Error::TooFewPrimes);
    }
    if primes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::UnorderedPrimes);
    }
    for &p in primes {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
    }
    for &p in primes {
        for &q in primes {
            if p != q && (q - 1) % p == 0 {
                return Err(Error::PrimeDividesPredecessor { p, q });
            }
        }
    }
    Ok(())
}

/// Exponents `(e_1, ..., e_s)` such that every `p_1^(k_1 e_1) ... p_s^(k_s e_s)`,
/// `k_i >= 1`, is a weak Carmichael number.
///
/// `e_i` is `L_i = lcm_{j != i} (p_j - 1)` times the order of `p_i^(L_i)`
/// modulo `L_i`. That order is 1 in most cases; it is not for `{3, 11}`,
/// where `3^10 ≡ 9 (mod 10)`.
pub fn wong_family(primes: &[u64]) -> Result<Vec<u32>> {
    check_wong_primes(primes)?;
    primes
        .iter()
        .map(|&p| {
            let l = primes
                .iter()
                .filter(|&&q| q != p)
                .try_fold(1u64, |acc, &q| lcm(acc, q - 1))
                .ok_or(Error::Overflow)?;
            let t = multiplicative_order(pow_mod_unchecked(p, l, l), l).expect("p coprime to every q - 1");
            l.checked_mul(t).and_then(|e| u32::try_from(e).ok()).ok_or(Error::Overflow)
        })
        .collect()
}

pub fn wong_family_descriptor(primes: &[u64]) -> Result<FamilyDescriptor> {
    let exps = wong_family(primes)?;
    let base = primes.iter().map(|&p| (p, 0)).collect();
    let generators = primes.iter().zip(&exps).map(|(&p, &e)| vec![(p, e)]).collect();
    let rule: Vec<String> = primes.iter().zip(&exps).map(|(p, e)| format!("{p}^({e}k)")).collect();
    let mut fam = FamilyDescriptor::new(FamilyKind::Wong, base, generators, rule.join(" "), Vec::new());
    for (i, &e) in exps.iter().enumerate() {
        fam.parameters.insert(format!("e_{}", i + 1), e as u64);
    }
    Ok(fam)
}

fn check_k_number(f: &Factorization) -> Result<()> {
    let n = f.to_string();
    if f.is_one() || f.factors() == [crate::arith::PrimePower::new(2, 1)] {
        return Err(Error::NotKNumber(n));
    }
    if !f.is_squarefree() {
        return Err(Error::NotKNumber(n));
    }
    for p in f.primes() {
        for q in f.primes() {
            if p != q && (q - 1) % p == 0 {
                return Err(Error::NotKNumber(n));
            }
        }
    }
    Ok(())
}

/// Exponent `t * lambda(n)` with the smallest `t` making `n^(t lambda(n)) ≡ 1`
/// modulo every `p - 1`.
fn k_number_exponent(f: &Factorization) -> Result<(u64, u64)> {
    let lambda = carmichael_lambda(f);
    let c = cw_unchecked(f.factors());
    let t = multiplicative_order(pow_mod_unchecked(f.residue(c), lambda, c), c).expect("n coprime to c_w(n)");
    Ok((lambda, t))
}

/// `n^(d t lambda(n))` in exponent form for a K-number `n > 2`, where `t` is
/// the least positive integer making the result a weak Carmichael number.
///
/// `t = 1` for Carmichael numbers and most K-numbers; `n = 33` needs `t = 2`
/// because `33^10 ≡ 9 (mod 10)`.
pub fn k_number_power(f: &Factorization, d: u32) -> Result<Factorization> {
    if d == 0 {
        return Err(Error::NonPositive("d"));
    }
    check_k_number(f)?;
    let (lambda, t) = k_number_exponent(f)?;
    let e = lambda
        .checked_mul(t)
        .and_then(|x| x.checked_mul(d as u64))
        .and_then(|x| u32::try_from(x).ok())
        .ok_or(Error::Overflow)?;
    Ok(f.pow(e))
}

pub fn k_number_power_family(f: &Factorization) -> Result<FamilyDescriptor> {
    check_k_number(f)?;
    let (lambda, t) = k_number_exponent(f)?;
    let e = lambda.checked_mul(t).and_then(|x| u32::try_from(x).ok()).ok_or(Error::Overflow)?;
    let base: Vec<(u64, u32)> = f.primes().map(|p| (p, 0)).collect();
    let generator = f.primes().map(|p| (p, e)).collect();
    Ok(FamilyDescriptor::new(
        FamilyKind::KNumberPower,
        base,
        vec![generator],
        format!("n^({e}d), d >= 1"),
        vec![("n", f.value().unwrap_or(0)), ("lambda", lambda), ("t", t)],
    ))
}
