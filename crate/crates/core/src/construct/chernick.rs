use serde::{Deserialize, Serialize};

use crate::arith::modular::{gcd, mod_inverse, pow_mod_unchecked};
use crate::arith::{divisors, factorize, is_prime, multiplicative_order, Factorization, PrimePower};
use crate::error::{Error, Result};

use super::family::{FamilyDescriptor, FamilyKind};

/// `(6m+1)(12m+1)(18m+1)` and whether all three components are prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chernick {
    pub m: u64,
    pub components: [u64; 3],
    pub component_prime: [bool; 3],
    pub n: u64,
    pub is_carmichael: bool,
}

impl Chernick {
    pub fn factorization(&self) -> Factorization {
        factorize(self.n)
    }

    /// Single-member family; `None` unless all three components are prime.
    pub fn descriptor(&self) -> Option<FamilyDescriptor> {
        if !self.is_carmichael {
            return None;
        }
        let [p, q, r] = self.components;
        Some(FamilyDescriptor::new(
            FamilyKind::Chernick,
            vec![(p, 1), (q, 1), (r, 1)],
            Vec::new(),
            "(6m+1)(12m+1)(18m+1)".to_string(),
            vec![("m", self.m)],
        ))
    }
}

fn components(m: u64) -> Result<[u64; 3]> {
    let c = |k: u64| k.checked_mul(m).and_then(|x| x.checked_add(1)).ok_or(Error::Overflow);
    Ok([c(6)?, c(12)?, c(18)?])
}

pub fn chernick(m: u64) -> Result<Chernick> {
    if m == 0 {
        return Err(Error::NonPositive("m"));
    }
    let components = components(m)?;
    let n = components.iter().try_fold(1u64, |acc, &c| acc.checked_mul(c)).ok_or(Error::Overflow)?;
    let component_prime = components.map(is_prime);
    Ok(Chernick { m, components, component_prime, n, is_carmichael: component_prime.iter().all(|&b| b) })
}

/// `residue + t * modulus`, `t >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueClass {
    pub residue: u64,
    pub modulus: u64,
}

/// Solve `m_0 (ab + ac + bc) ≡ -(a + b + c) (mod abc)`.
///
/// Returns the least residue of the solution class, or `None` when the
/// congruence has no solution.
pub fn chernick_m0(a: u64, b: u64, c: u64) -> Result<Option<ResidueClass>> {
    let bad = || Error::BadChernickTriple { a, b, c };
    if a == 0 || !(a < b && b < c) || gcd(a, b) != 1 || gcd(a, c) != 1 || gcd(b, c) != 1 {
        return Err(bad());
    }
    let modulus = a.checked_mul(b).and_then(|x| x.checked_mul(c)).ok_or(Error::Overflow)?;
    let s = ((a * b) as u128 + (a * c) as u128 + (b * c) as u128) % modulus as u128;
    let t = (a as u128 + b as u128 + c as u128) % modulus as u128;
    let rhs = (modulus as u128 - t) % modulus as u128;
    let g = gcd(s as u64, modulus);
    if rhs as u64 % g != 0 {
        return Ok(None);
    }
    let reduced = modulus / g;
    if reduced == 1 {
        return Ok(Some(ResidueClass { residue: 0, modulus: 1 }));
    }
    let inv = mod_inverse((s as u64 / g) % reduced, reduced).expect("coprime after dividing by gcd");
    let residue = ((rhs as u64 / g) as u128 * inv as u128 % reduced as u128) as u64;
    Ok(Some(ResidueClass { residue, modulus: reduced }))
}

/// `C(m; d, l) = (6m+1)(12m+1)(18m+1) w^l` with `w = 36m/d + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendedChernick {
    pub m: u64,
    pub d: u64,
    pub l: u32,
    pub w: u64,
    pub factorization: Factorization,
    /// `w^l ≡ 1 (mod 36m)`.
    pub member: bool,
    /// Order of `w` modulo `36m`: the members are exactly the multiples of it.
    pub smallest_l: Option<u64>,
}

impl ExtendedChernick {
    pub fn descriptor(&self) -> Option<FamilyDescriptor> {
        let l0 = u32::try_from(self.smallest_l?).ok()?;
        let [p, q, r] = components(self.m).ok()?;
        Some(FamilyDescriptor::new(
            FamilyKind::ExtendedChernick,
            vec![(p, 1), (q, 1), (r, 1), (self.w, 0)],
            vec![vec![(self.w, l0)]],
            format!("(6m+1)(12m+1)(18m+1) w^l with {l0} | l (w^l = 1 mod 36m)"),
            vec![("m", self.m), ("d", self.d), ("w", self.w), ("l0", l0 as u64)],
        ))
    }
}

pub fn extended_chernick(m: u64, d: u64, l: u32) -> Result<ExtendedChernick> {
    if m == 0 {
        return Err(Error::NonPositive("m"));
    }
    if l == 0 {
        return Err(Error::NonPositive("l"));
    }
    let modulus = m.checked_mul(36).ok_or(Error::Overflow)?;
    if d == 0 || modulus % d != 0 {
        return Err(Error::DivisorMismatch { d, modulus });
    }
    let comps = components(m)?;
    for c in comps {
        if !is_prime(c) {
            return Err(Error::ChernickComponent(c));
        }
    }
    let w = modulus / d + 1;
    if !is_prime(w) {
        return Err(Error::NotPrime(w));
    }
    if comps.contains(&w) {
        return Err(Error::ChernickCollision(w));
    }
    let mut factors: Vec<PrimePower> = comps.iter().map(|&c| PrimePower::new(c, 1)).collect();
    factors.push(PrimePower::new(w, l));
    factors.sort_unstable();
    let factorization = Factorization::from_sorted_unchecked(factors);
    let member = gcd(w, modulus) == 1 && pow_mod_unchecked(w, l as u64, modulus) == 1;
    Ok(ExtendedChernick { m, d, l, w, factorization, member, smallest_l: multiplicative_order(w, modulus) })
}

/// Odd primes `w = 36m/d + 1` over `d | 36m`, other than the three Chernick
/// components and coprime to `6m`, ascending.
pub fn w_set(m: u64) -> Result<Vec<u64>> {
    if m == 0 {
        return Err(Error::NonPositive("m"));
    }
    let modulus = m.checked_mul(36).ok_or(Error::Overflow)?;
    let comps = components(m)?;
    let mut out: Vec<u64> = divisors(&factorize(modulus))
        .into_iter()
        .map(|d| modulus / d + 1)
        .filter(|&w| w % 2 == 1 && is_prime(w) && !comps.contains(&w) && gcd(w, 6 * m) == 1)
        .collect();
    out.sort_unstable();
    Ok(out)
}
