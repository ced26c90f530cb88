use crate::error::Result;

use super::scan::{scan, NumberClass, ScanConfig};

/// Consecutive Carmichael numbers in `[lo, hi)` with no weak Carmichael
/// number strictly between them, ordered by the first member.
///
/// Prime powers act as separators only when `prime_powers_separate` is set;
/// with them, 2465 and 2821 are not twins since 2809 = 53^2 lies between.
pub fn twin_carmichael_pairs(
    lo: u64,
    hi: u64,
    prime_powers_separate: bool,
    jobs: Option<usize>,
) -> Result<Vec<(u64, u64)>> {
    let mut cfg = ScanConfig::new(lo, hi, NumberClass::Weak);
    cfg.exclude_prime_powers = !prime_powers_separate;
    cfg.jobs = jobs;
    let members = scan(&cfg)?;
    Ok(members
        .windows(2)
        .filter(|w| w[0].factorization.is_squarefree() && w[1].factorization.is_squarefree())
        .map(|w| (w[0].n, w[1].n))
        .collect())
}
