use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{Factorization, PrimePower};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Chernick,
    ExtendedChernick,
    Lift,
    PrimePowerPair,
    Wong,
    KNumberPower,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Chernick => "chernick",
            FamilyKind::ExtendedChernick => "extended_chernick",
            FamilyKind::Lift => "lift",
            FamilyKind::PrimePowerPair => "prime_power_pair",
            FamilyKind::Wong => "wong",
            FamilyKind::KNumberPower => "k_number_power",
        }
    }
}

/// A lattice of exponent vectors over fixed primes.
///
/// Member `(k_1, ..., k_g)` with every `k_j >= 1` has exponent vector
/// `offset + k_1 * generators[0] + ... + k_g * generators[g-1]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDescriptor {
    pub kind: FamilyKind,
    /// Ascending.
    pub base_primes: Vec<u64>,
    pub exponent_rule: String,
    pub parameters: BTreeMap<String, u64>,
    pub offset: Vec<u32>,
    pub generators: Vec<Vec<u32>>,
}

impl FamilyDescriptor {
    pub(crate) fn new(
        kind: FamilyKind,
        primes_and_offset: Vec<(u64, u32)>,
        generators: Vec<Vec<(u64, u32)>>,
        exponent_rule: String,
        parameters: Vec<(&str, u64)>,
    ) -> Self {
        let mut base = primes_and_offset;
        base.sort_unstable();
        let base_primes: Vec<u64> = base.iter().map(|&(p, _)| p).collect();
        let offset = base.iter().map(|&(_, e)| e).collect();
        let generators = generators
            .into_iter()
            .map(|g| {
                let mut v = vec![0u32; base_primes.len()];
                for (p, e) in g {
                    let i = base_primes.binary_search(&p).expect("generator prime in base");
                    v[i] = e;
                }
                v
            })
            .collect();
        Self {
            kind,
            base_primes,
            exponent_rule,
            parameters: parameters.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            offset,
            generators,
        }
    }

    /// The member with multipliers `ks` (one per generator, each at least 1).
    pub fn member(&self, ks: &[u32]) -> Result<Factorization> {
        if ks.len() != self.generators.len() {
            return Err(Error::Parse(format!(
                "{} multipliers for {} generators",
                ks.len(),
                self.generators.len()
            )));
        }
        if ks.contains(&0) {
            return Err(Error::NonPositive("family multiplier"));
        }
        let mut exps: Vec<u32> = self.offset.clone();
        for (g, &k) in self.generators.iter().zip(ks) {
            for (e, &step) in exps.iter_mut().zip(g) {
                *e = step.checked_mul(k).and_then(|s| e.checked_add(s)).ok_or(Error::Overflow)?;
            }
        }
        let factors = self.base_primes.iter().zip(exps).map(|(&p, e)| PrimePower::new(p, e)).collect();
        Factorization::from_prime_powers(factors)
    }

    /// The member with every multiplier equal to 1.
    pub fn smallest_member(&self) -> Result<Factorization> {
        self.member(&vec![1; self.generators.len()])
    }
}

impl fmt::Display for FamilyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind.name(), self.exponent_rule)?;
        if !self.parameters.is_empty() {
            let params: Vec<String> = self.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
            write!(f, " [{}]", params.join(", "))?;
        }
        Ok(())
    }
}
