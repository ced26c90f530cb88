//! Super Carmichael numbers: weak Carmichael numbers whose defining power-sum
//! congruence holds modulo `n^2`.
//!
//! Three evaluations of the same congruence are provided:
//!
//! - [`super_congruence_direct`]: `sum k^(n-1) ≡ phi(n) (mod n^2)` over all totatives.
//! - [`super_congruence_halved`]: pairs `r` with `n - r`, using
//!   `(n - r)^(n-1) ≡ r^(n-1) + n r^(n-2) (mod n^2)`, so only `r < n/2` is visited.
//! - [`super_congruence_staged`]: splits the halved form over the prime powers
//!   `p^e || n`, checking modulo `p^(2e)` one prime at a time with exponents
//!   reduced by Euler's theorem, and stops at the first failing prime.

use crate::arith::modular::{add_mod, mul_mod, pow_mod_unchecked};
use crate::arith::{euler_phi, factorize, Factorization, Totatives};
use crate::error::{Error, Result};

use super::weak::is_weak_carmichael;

/// Largest `n` accepted, so that `n^2` stays within a 64-bit modulus.
pub const SUPER_CARMICHAEL_MAX: u64 = 1 << 31;

fn check_range(n: u64) -> Result<()> {
    if n > SUPER_CARMICHAEL_MAX {
        return Err(Error::OutOfRange { what: "super Carmichael check", n, max: SUPER_CARMICHAEL_MAX });
    }
    Ok(())
}

fn value_in_range(f: &Factorization) -> Result<u64> {
    let n = f.value().ok_or(Error::Overflow)?;
    check_range(n)?;
    Ok(n)
}

/// Weak Carmichael and the defining congruence holds mod `n^2` (staged evaluation).
pub fn is_super_carmichael(f: &Factorization) -> Result<bool> {
    value_in_range(f)?;
    if !is_weak_carmichael(f) {
        return Ok(false);
    }
    super_congruence_staged(f)
}

/// `sum_{gcd(k,n)=1, k<n} k^(n-1) ≡ phi(n) (mod n^2)`, term by term.
pub fn super_congruence_direct(n: u64) -> Result<bool> {
    check_range(n)?;
    let f = factorize(n);
    let m = n * n;
    let sum = Totatives::with_factorization(n, &f)
        .fold(0u64, |acc, k| add_mod(acc, pow_mod_unchecked(k, n - 1, m), m));
    Ok(sum == euler_phi(&f) % m)
}

/// `2 sum r^(n-1) + n sum r^(n-2) ≡ phi(n) (mod n^2)` over `r < n/2`. `n` odd.
pub fn super_congruence_halved(n: u64) -> Result<bool> {
    check_range(n)?;
    if n % 2 == 0 || n < 3 {
        return Err(Error::EvenInput { what: "halved super congruence", n });
    }
    let f = factorize(n);
    let m = n * n;
    let (mut a, mut b) = (0u64, 0u64);
    for r in Totatives::lower_half(n, &f) {
        let r_n2 = pow_mod_unchecked(r, n - 2, m);
        a = add_mod(a, mul_mod(r_n2, r, m), m);
        b = add_mod(b, r_n2, m);
    }
    let lhs = add_mod(mul_mod(2, a, m), mul_mod(n, b, m), m);
    Ok(lhs == euler_phi(&f) % m)
}

struct Stage {
    modulus: u64,
    half_modulus: u64,
    exp_a: u64,
    exp_b: u64,
}

/// The halved congruence checked modulo `p^(2e)` for each `p^e || n`, in
/// increasing order of reduced exponent, short-circuiting on failure. `n` odd.
pub fn super_congruence_staged(f: &Factorization) -> Result<bool> {
    let n = value_in_range(f)?;
    if n % 2 == 0 || n < 3 {
        return Err(Error::EvenInput { what: "staged super congruence", n });
    }
    let phi = euler_phi(f);
    let mut stages: Vec<Stage> = f
        .factors()
        .iter()
        .map(|pp| {
            let pe = pp.prime.pow(pp.exp);
            let modulus = pe * pe;
            let phi_pe = pe / pp.prime * (pp.prime - 1);
            let phi_modulus = phi_pe * pe;
            Stage { modulus, half_modulus: pe, exp_a: (n - 1) % phi_modulus, exp_b: (n - 2) % phi_pe }
        })
        .collect();
    stages.sort_by_key(|s| s.exp_a.max(s.exp_b));
    for stage in &stages {
        let (m, h) = (stage.modulus, stage.half_modulus);
        let (mut a, mut b) = (0u64, 0u64);
        for r in Totatives::lower_half(n, f) {
            a = add_mod(a, pow_mod_unchecked(r, stage.exp_a, m), m);
            b = add_mod(b, pow_mod_unchecked(r, stage.exp_b, h), h);
        }
        // n * b mod p^(2e) only depends on b mod p^e because p^e | n
        let lhs = add_mod(mul_mod(2, a, m), mul_mod(n % m, b, m), m);
        if lhs != phi % m {
            return Ok(false);
        }
    }
    Ok(true)
}
