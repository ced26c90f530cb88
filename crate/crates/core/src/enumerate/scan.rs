use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::modular::isqrt;
use crate::arith::{sieve_primes, small_primes, Factorization, PRIME_TABLE_LIMIT};
use crate::classify::{
    is_carmichael, is_giuga, is_k_number, is_super_carmichael, is_weak_carmichael, is_weak_giuga,
};
use crate::error::{Error, Result};

use super::sieve::sieve_segment;

pub const DEFAULT_SEGMENT_SIZE: u64 = 1 << 20;

/// Segments handed to the worker pool per batch, per worker.
const SEGMENTS_PER_WORKER: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NumberClass {
    Weak,
    Carmichael,
    Giuga,
    WeakGiuga,
    KNumber,
    Super,
    /// Odd prime powers `p^e` with `e >= 2`.
    PrimePower,
}

impl NumberClass {
    pub const ALL: [NumberClass; 7] = [
        NumberClass::Weak,
        NumberClass::Carmichael,
        NumberClass::Giuga,
        NumberClass::WeakGiuga,
        NumberClass::KNumber,
        NumberClass::Super,
        NumberClass::PrimePower,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NumberClass::Weak => "weak",
            NumberClass::Carmichael => "carmichael",
            NumberClass::Giuga => "giuga",
            NumberClass::WeakGiuga => "weak-giuga",
            NumberClass::KNumber => "k-number",
            NumberClass::Super => "super",
            NumberClass::PrimePower => "prime-power",
        }
    }

    /// Membership test on a full factorization.
    pub fn contains(self, f: &Factorization) -> bool {
        match self {
            NumberClass::Weak => is_weak_carmichael(f),
            NumberClass::Carmichael => is_carmichael(f),
            NumberClass::Giuga => is_giuga(f),
            NumberClass::WeakGiuga => is_weak_giuga(f),
            NumberClass::KNumber => is_k_number(f),
            NumberClass::Super => is_super_carmichael(f).unwrap_or(false),
            NumberClass::PrimePower => f.is_prime_power() && f.is_composite() && f.is_odd(),
        }
    }
}

impl fmt::Display for NumberClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NumberClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let canonical = s.replace('_', "-");
        Self::ALL.into_iter().find(|c| c.name() == canonical).ok_or_else(|| Error::Parse(s.to_string()))
    }
}

/// A range query. Intervals are half-open: `[lo, hi)`, and the largest-prime
/// window `(c, d)` means `c <= P(n) < d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanConfig {
    pub lo: u64,
    pub hi: u64,
    pub class: NumberClass,
    pub exclude_prime_powers: bool,
    /// Exact number of distinct prime factors.
    pub factor_count: Option<usize>,
    pub max_prime_window: Option<(u64, u64)>,
    pub segment_size: u64,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl ScanConfig {
    pub fn new(lo: u64, hi: u64, class: NumberClass) -> Self {
        Self {
            lo,
            hi,
            class,
            exclude_prime_powers: false,
            factor_count: None,
            max_prime_window: None,
            segment_size: DEFAULT_SEGMENT_SIZE,
            jobs: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.lo < 1 || self.hi <= self.lo {
            return Err(Error::InvalidRange { lo: self.lo, hi: self.hi });
        }
        if self.segment_size < 2 {
            return Err(Error::SegmentSize);
        }
        if let Some((c, d)) = self.max_prime_window {
            if d <= c {
                return Err(Error::InvalidRange { lo: c, hi: d });
            }
        }
        Ok(())
    }

    fn accepts(&self, f: &Factorization) -> bool {
        if self.exclude_prime_powers && f.omega() < 2 {
            return false;
        }
        if let Some(k) = self.factor_count {
            if f.omega() != k {
                return false;
            }
        }
        if let Some((c, d)) = self.max_prime_window {
            match f.largest_prime() {
                Some(p) if c <= p && p < d => {}
                _ => return false,
            }
        }
        self.class.contains(f)
    }

    fn segments(&self) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        let mut lo = self.lo;
        while lo < self.hi {
            let hi = lo.saturating_add(self.segment_size).min(self.hi);
            out.push((lo, hi));
            lo = hi;
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanMember {
    pub n: u64,
    pub factorization: Factorization,
}

fn sieving_primes(hi: u64) -> std::borrow::Cow<'static, [u32]> {
    let root = isqrt(hi.saturating_sub(1));
    if root < PRIME_TABLE_LIMIT {
        std::borrow::Cow::Borrowed(small_primes())
    } else {
        std::borrow::Cow::Owned(sieve_primes(root as usize + 1))
    }
}

fn run_segment(cfg: &ScanConfig, primes: &[u32], (lo, hi): (u64, u64)) -> Vec<ScanMember> {
    sieve_segment(lo, hi, cfg.class, primes)
        .into_iter()
        .filter(|(_, f)| cfg.accepts(f))
        .map(|(n, factorization)| ScanMember { n, factorization })
        .collect()
}

/// Stream the members of `cfg.class` in `[lo, hi)` to `sink` in ascending
/// order, one batch at a time.
///
/// Segments within a batch run in parallel; output order depends only on the
/// configuration, never on the worker count.
pub fn scan_batches<E>(
    cfg: &ScanConfig,
    mut sink: impl FnMut(Vec<ScanMember>) -> std::result::Result<(), E>,
) -> Result<std::result::Result<(), E>> {
    cfg.validate()?;
    let primes = sieving_primes(cfg.hi);
    let segments = cfg.segments();
    let pool =
        cfg.jobs.map(|j| rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build().expect("thread pool"));
    let workers = pool.as_ref().map_or_else(rayon::current_num_threads, |p| p.current_num_threads());
    let batch = (workers * SEGMENTS_PER_WORKER).max(1);
    for chunk in segments.chunks(batch) {
        let work = || -> Vec<Vec<ScanMember>> {
            chunk.par_iter().map(|&seg| run_segment(cfg, &primes, seg)).collect()
        };
        let results = match &pool {
            Some(p) => p.install(work),
            None => work(),
        };
        let members: Vec<ScanMember> = results.into_iter().flatten().collect();
        if let Err(e) = sink(members) {
            return Ok(Err(e));
        }
    }
    Ok(Ok(()))
}

/// All members of `cfg.class` in `[lo, hi)`, ascending.
pub fn scan(cfg: &ScanConfig) -> Result<Vec<ScanMember>> {
    let mut out = Vec::new();
    scan_batches::<std::convert::Infallible>(cfg, |batch| {
        out.extend(batch);
        Ok(())
    })?
    .unwrap_or_else(|never| match never {});
    Ok(out)
}
