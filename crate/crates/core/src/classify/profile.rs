use serde::{Deserialize, Serialize};

use crate::arith::{carmichael_lambda, cw_unchecked, factorize, is_prime, ExactRational, Factorization};
use crate::error::{Error, Result};

use super::{
    almost_carmichael_order, fermat_liar_count, is_carmichael, is_giuga, is_k_number, is_weak_carmichael,
    is_weak_giuga, lehmer_index,
};

/// Everything this crate knows about one integer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumberProfile {
    pub n: u64,
    pub factorization: Factorization,
    pub is_prime: bool,
    pub is_prime_power: bool,
    pub is_weak_carmichael: bool,
    pub is_carmichael: bool,
    pub is_k_number: bool,
    pub lehmer_index: Option<u32>,
    pub giuga: bool,
    pub weak_giuga: bool,
    pub almost_order: Option<u32>,
    /// `lcm(p - 1)` over the primes of `n` (also reported for even `n`).
    pub cw: u64,
    pub lambda: u64,
    pub liar_count: u64,
    pub liar_fraction: ExactRational,
}

impl NumberProfile {
    /// Class tags in a fixed order, e.g. `["weak-carmichael", "carmichael", "k-number", "2-lehmer"]`.
    pub fn tags(&self) -> Vec<String> {
        let mut tags = Vec::new();
        if self.is_prime {
            tags.push("prime".to_string());
        }
        if self.is_prime_power && !self.is_prime {
            tags.push("prime-power".to_string());
        }
        if self.is_weak_carmichael {
            tags.push("weak-carmichael".to_string());
        }
        if self.is_carmichael {
            tags.push("carmichael".to_string());
        }
        if self.is_k_number {
            tags.push("k-number".to_string());
        }
        if let Some(k) = self.lehmer_index {
            tags.push(format!("{k}-lehmer"));
        }
        if self.giuga {
            tags.push("giuga".to_string());
        }
        if self.weak_giuga {
            tags.push("weak-giuga".to_string());
        }
        if let Some(k) = self.almost_order {
            tags.push(format!("almost-carmichael-{k}"));
        }
        tags
    }
}

/// Classify `n >= 2` from a single factorization.
pub fn profile(n: u64) -> Result<NumberProfile> {
    if n < 2 {
        return Err(Error::NonPositive("n - 1"));
    }
    let f = factorize(n);
    let composite = f.is_composite();
    let liars = fermat_liar_count(&f)?;
    let lehmer = if composite { lehmer_index(&f, u32::MAX)? } else { None };
    let almost = almost_carmichael_order(&f, u32::MAX).ok().flatten();
    Ok(NumberProfile {
        n,
        is_prime: is_prime(n),
        is_prime_power: f.is_prime_power(),
        is_weak_carmichael: is_weak_carmichael(&f),
        is_carmichael: is_carmichael(&f),
        is_k_number: is_k_number(&f),
        lehmer_index: lehmer,
        giuga: is_giuga(&f),
        weak_giuga: is_weak_giuga(&f),
        almost_order: almost,
        cw: cw_unchecked(f.factors()),
        lambda: carmichael_lambda(&f),
        liar_count: liars.liars,
        liar_fraction: liars.fraction,
        factorization: f,
    })
}
