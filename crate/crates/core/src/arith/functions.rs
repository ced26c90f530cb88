//! Multiplicative functions evaluated from a factorization.
//!
//! All of these assume the factored integer fits in 64 bits; every value
//! returned is then bounded by `n` itself.

use super::factor::{Factorization, PrimePower};
use super::modular::lcm;
use crate::error::{Error, Result};

pub fn euler_phi(f: &Factorization) -> u64 {
    f.factors().iter().map(|pp| pp.prime.pow(pp.exp - 1) * (pp.prime - 1)).product()
}

fn lambda_prime_power(pp: PrimePower) -> u64 {
    let phi = pp.prime.pow(pp.exp - 1) * (pp.prime - 1);
    if pp.prime == 2 && pp.exp >= 3 {
        phi / 2
    } else {
        phi
    }
}

/// Carmichael's function: the exponent of the unit group mod `n`.
pub fn carmichael_lambda(f: &Factorization) -> u64 {
    f.factors().iter().map(|&pp| lambda_prime_power(pp)).fold(1, |acc, x| lcm(acc, x).expect("lambda(n) < n"))
}

/// `lcm(p - 1)` over the distinct primes of an odd `n >= 3`.
pub fn cw(f: &Factorization) -> Result<u64> {
    if !f.is_odd() || f.is_one() {
        return Err(Error::EvenInput { what: "c_w", n: f.value().unwrap_or(0) });
    }
    Ok(cw_unchecked(f.factors()))
}

pub(crate) fn cw_unchecked(factors: &[PrimePower]) -> u64 {
    factors.iter().fold(1, |acc, pp| lcm(acc, pp.prime - 1).expect("c_w(n) <= lambda(n)"))
}

/// Product of the distinct primes dividing `n`; `rad(1) = 1`.
pub fn radical(f: &Factorization) -> u64 {
    f.primes().product()
}

pub fn moebius(f: &Factorization) -> i8 {
    if !f.is_squarefree() {
        0
    } else if f.omega() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All positive divisors, ascending.
pub fn divisors(f: &Factorization) -> Vec<u64> {
    let mut divs = vec![1u64];
    for pp in f.factors() {
        let len = divs.len();
        let mut pk = 1u64;
        for _ in 0..pp.exp {
            pk *= pp.prime;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}
