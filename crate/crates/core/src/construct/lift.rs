use crate::arith::{cw_unchecked, multiplicative_order, Factorization};
use crate::classify::is_carmichael;
use crate::error::{Error, Result};

use super::family::{FamilyDescriptor, FamilyKind};

/// For a Carmichael number `n = p_1 ... p_s`, the pairs `(p_i, d_i)` where
/// `d_i` is the order of `p_i` modulo `c_w(n / p_i)`. Every `n p_i^(m d_i)`
/// is a weak Carmichael number.
pub fn lift_carmichael(f: &Factorization) -> Result<Vec<(u64, u64)>> {
    if !is_carmichael(f) {
        return Err(Error::NotCarmichael(f.to_string()));
    }
    Ok(f.primes()
        .map(|p| {
            let rest = f.without(p);
            let modulus = cw_unchecked(rest.factors());
            (p, multiplicative_order(p, modulus).expect("p is coprime to the other p_j - 1"))
        })
        .collect())
}

/// The family `n p_i^(m d_i)`, `m >= 1`, for the `index`-th prime of `n`.
pub fn lift_family(f: &Factorization, index: usize) -> Result<FamilyDescriptor> {
    let lifts = lift_carmichael(f)?;
    let &(p, d) = lifts.get(index).ok_or(Error::OutOfRange {
        what: "prime index",
        n: index as u64,
        max: lifts.len().saturating_sub(1) as u64,
    })?;
    let d32 = u32::try_from(d).map_err(|_| Error::Overflow)?;
    let base = f.primes().map(|q| (q, 1)).collect();
    Ok(FamilyDescriptor::new(
        FamilyKind::Lift,
        base,
        vec![vec![(p, d32)]],
        format!("n * {p}^({d}m), m >= 1"),
        vec![("n", f.value().unwrap_or(0)), ("p", p), ("d", d)],
    ))
}
