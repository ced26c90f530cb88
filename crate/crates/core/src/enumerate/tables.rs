//! Count tables over weak Carmichael scans.

use serde::{Deserialize, Serialize};

use crate::arith::modular::isqrt;
use crate::arith::{sieve_primes, Factorization};
use crate::error::{Error, Result};

use super::scan::{scan, NumberClass, ScanConfig, ScanMember};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TableSchema {
    Table1Summary,
    Table3,
    Table4,
    Table5,
}

impl TableSchema {
    pub fn name(self) -> &'static str {
        match self {
            TableSchema::Table1Summary => "table1_summary",
            TableSchema::Table3 => "table3",
            TableSchema::Table4 => "table4",
            TableSchema::Table5 => "table5",
        }
    }

    /// Bounds `N` this schema is reproduced at.
    pub fn supported_bounds(self) -> &'static [u64] {
        match self {
            TableSchema::Table1Summary => &[25_000],
            TableSchema::Table3 => &[1_000_000, 2_000_000, 10_000_000, 100_000_000],
            TableSchema::Table4 => &[1_000, 10_000, 100_000, 1_000_000, 2_000_000],
            TableSchema::Table5 => &[1_000, 10_000, 100_000, 1_000_000, 2_000_000, 10_000_000, 100_000_000],
        }
    }

    fn supported_text(self) -> &'static str {
        match self {
            TableSchema::Table1Summary => "25000",
            TableSchema::Table3 => "10^6, 2*10^6, 10^7, 10^8",
            TableSchema::Table4 => "10^3, 10^4, 10^5, 10^6, 2*10^6",
            TableSchema::Table5 => "10^3, 10^4, 10^5, 10^6, 2*10^6, 10^7, 10^8",
        }
    }
}

/// The member with the largest greatest prime factor; ties go to the smallest `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extremal {
    pub largest_prime: u64,
    pub witness: u64,
    pub factorization: Factorization,
}

/// One row of a count table. Fields a schema does not use stay `None`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    pub label: String,
    pub lo: Option<u64>,
    pub hi: Option<u64>,
    pub window: Option<(u64, u64)>,
    pub factor_count: Option<usize>,
    /// `C_k(N)` or `C(a, b)`.
    pub carmichael: Option<u64>,
    /// `C(N)`.
    pub carmichael_total: Option<u64>,
    /// `W_k`, `W_k'` or the total WCN count, depending on the schema.
    pub weak: Option<u64>,
    /// `W'(N)`.
    pub weak_total: Option<u64>,
    pub prime_powers: Option<u64>,
    pub other: Option<u64>,
    pub extremal: Option<Extremal>,
    pub carmichael_extremal: Option<Extremal>,
}

/// `10^k` or `a*10^k` for round numbers, decimal otherwise.
pub fn bound_label(n: u64) -> String {
    if n < 1000 && n != 1 {
        return n.to_string();
    }
    let mut k = 0;
    let mut m = n;
    while m >= 10 && m % 10 == 0 {
        m /= 10;
        k += 1;
    }
    match (m, k) {
        (_, 0) => n.to_string(),
        (1, _) => format!("10^{k}"),
        (m, _) if m < 10 => format!("{m}*10^{k}"),
        _ => n.to_string(),
    }
}

/// Odd prime powers `p^e`, `e >= 2`, in `[lo, hi)`.
pub fn prime_power_count(lo: u64, hi: u64) -> u64 {
    if hi <= lo {
        return 0;
    }
    let root = isqrt(hi - 1);
    let mut count = 0;
    for p in sieve_primes(root as usize + 1).into_iter().skip(1) {
        let p = p as u64;
        let mut q = p * p;
        loop {
            if q >= lo && q < hi {
                count += 1;
            }
            match q.checked_mul(p) {
                Some(next) if next < hi => q = next,
                _ => break,
            }
        }
    }
    count
}

fn weak_members(lo: u64, hi: u64, jobs: Option<usize>) -> Result<Vec<ScanMember>> {
    let mut cfg = ScanConfig::new(lo, hi, NumberClass::Weak);
    cfg.jobs = jobs;
    scan(&cfg)
}

fn extremal<'a>(members: impl Iterator<Item = &'a ScanMember>) -> Option<Extremal> {
    let mut best: Option<Extremal> = None;
    for m in members {
        let p = m.factorization.largest_prime()?;
        if best.as_ref().is_none_or(|b| p > b.largest_prime) {
            best = Some(Extremal { largest_prime: p, witness: m.n, factorization: m.factorization.clone() });
        }
    }
    best
}

fn count(n: usize) -> Option<u64> {
    Some(n as u64)
}

/// Reproduce one of the published count tables up to `bound`, in its row order.
pub fn count_table(bound: u64, schema: TableSchema, jobs: Option<usize>) -> Result<Vec<CountRow>> {
    if !schema.supported_bounds().contains(&bound) {
        return Err(Error::UnsupportedBound {
            schema: schema.name(),
            bound,
            supported: schema.supported_text(),
        });
    }
    match schema {
        TableSchema::Table1Summary => table1_summary(bound, jobs),
        TableSchema::Table3 => table3(bound, jobs),
        TableSchema::Table4 => table4(bound, jobs),
        TableSchema::Table5 => table5(bound, jobs),
    }
}

fn table1_summary(bound: u64, jobs: Option<usize>) -> Result<Vec<CountRow>> {
    let members = weak_members(1, bound, jobs)?;
    let cn = members.iter().filter(|m| m.factorization.is_squarefree()).count();
    let pp = members.iter().filter(|m| m.factorization.is_prime_power()).count();
    Ok(vec![CountRow {
        label: format!("WCN < {}", bound),
        lo: Some(1),
        hi: Some(bound),
        carmichael: count(cn),
        weak: count(members.len()),
        prime_powers: count(pp),
        other: count(members.len() - cn - pp),
        ..CountRow::default()
    }])
}

struct Block {
    lo: u64,
    hi: u64,
    windows: &'static [(u64, u64)],
}

const TABLE3_GROUPS: &[&[Block]] = &[
    &[
        Block { lo: 1, hi: 1_000_000, windows: &[(1, 1_000_000)] },
        Block { lo: 1_000_000, hi: 2_000_000, windows: &[(1, 2_000_000)] },
    ],
    &[Block { lo: 2_000_000, hi: 10_000_000, windows: &[(1, 1_000), (1_000, 10_000), (10_000, 10_000_000)] }],
    &[Block {
        lo: 10_000_000,
        hi: 100_000_000,
        windows: &[(1, 1_000), (1_000, 10_000), (10_000, 100_000_000)],
    }],
];

fn table3(bound: u64, jobs: Option<usize>) -> Result<Vec<CountRow>> {
    let members = weak_members(1, bound, jobs)?;
    let mut rows = Vec::new();
    for group in TABLE3_GROUPS {
        let mut total = CountRow {
            label: "total".to_string(),
            weak: Some(0),
            prime_powers: Some(0),
            carmichael: Some(0),
            ..CountRow::default()
        };
        let mut emitted = 0;
        for block in group.iter().filter(|b| b.hi <= bound) {
            let in_block: Vec<&ScanMember> =
                members.iter().filter(|m| block.lo <= m.n && m.n < block.hi).collect();
            let p = prime_power_count(block.lo, block.hi);
            let c = in_block
                .iter()
                .filter(|m| m.factorization.omega() >= 3 && m.factorization.is_squarefree())
                .count() as u64;
            for (i, &(c_lo, c_hi)) in block.windows.iter().enumerate() {
                let w2: Vec<&ScanMember> = in_block
                    .iter()
                    .copied()
                    .filter(|m| m.factorization.omega() == 2)
                    .filter(|m| m.factorization.largest_prime().is_some_and(|q| c_lo <= q && q < c_hi))
                    .collect();
                let mut row = CountRow {
                    label: format!(
                        "({},{};{},{})",
                        bound_label(block.lo),
                        bound_label(block.hi),
                        bound_label(c_lo),
                        bound_label(c_hi)
                    ),
                    lo: Some(block.lo),
                    hi: Some(block.hi),
                    window: Some((c_lo, c_hi)),
                    factor_count: Some(2),
                    weak: count(w2.len()),
                    extremal: extremal(w2.iter().copied()),
                    ..CountRow::default()
                };
                if i == 0 {
                    row.prime_powers = Some(p);
                    row.carmichael = Some(c);
                }
                *total.weak.as_mut().unwrap() += w2.len() as u64;
                rows.push(row);
            }
            *total.prime_powers.as_mut().unwrap() += p;
            *total.carmichael.as_mut().unwrap() += c;
            emitted += 1;
        }
        if emitted > 0 && (emitted > 1 || group.len() == 1) {
            let lo = group[0].lo;
            let hi = group[emitted - 1].hi;
            total.label = format!("total ({},{})", bound_label(lo), bound_label(hi));
            total.lo = Some(lo);
            total.hi = Some(hi);
            rows.push(total);
        }
    }
    Ok(rows)
}

const TABLE_BOUNDS: [u64; 7] = [1_000, 10_000, 100_000, 1_000_000, 2_000_000, 10_000_000, 100_000_000];

/// Per-`k` tallies of the members below `n`: (`C_k`, `W_k'`).
fn tally_below(members: &[ScanMember], n: u64, k: usize) -> (u64, u64) {
    let mut c = 0;
    let mut w = 0;
    for m in members.iter().take_while(|m| m.n < n) {
        if m.factorization.omega() != k {
            continue;
        }
        if m.factorization.is_squarefree() {
            c += 1;
        } else {
            w += 1;
        }
    }
    (c, w)
}

fn table4(bound: u64, jobs: Option<usize>) -> Result<Vec<CountRow>> {
    let members = weak_members(1, bound, jobs)?;
    let bounds: Vec<u64> = TABLE_BOUNDS.iter().copied().filter(|&n| n <= bound).collect();
    let mut rows = Vec::new();
    for k in 2..=5usize {
        let first = match k {
            4 => 10_000,
            5 => 100_000,
            _ => 1,
        };
        for &n in bounds.iter().filter(|&&n| n >= first) {
            let (c, w) = tally_below(&members, n, k);
            let mut row = CountRow {
                label: format!("({},{k})", bound_label(n)),
                hi: Some(n),
                factor_count: Some(k),
                weak: Some(w),
                ..CountRow::default()
            };
            if k == 2 {
                let below = || members.iter().take_while(|m| m.n < n);
                row.carmichael_total = count(below().filter(|m| m.factorization.is_squarefree()).count());
                row.weak_total = count(
                    below()
                        .filter(|m| m.factorization.omega() >= 2 && !m.factorization.is_squarefree())
                        .count(),
                );
            } else {
                row.carmichael = Some(c);
            }
            rows.push(row);
        }
    }
    let c = members.iter().filter(|m| m.factorization.is_squarefree()).count();
    let w =
        members.iter().filter(|m| m.factorization.omega() >= 2 && !m.factorization.is_squarefree()).count();
    rows.push(CountRow {
        label: format!("total up to N = {}", bound_label(bound)),
        hi: Some(bound),
        carmichael: count(c),
        carmichael_total: count(c),
        weak: count(w),
        weak_total: count(w),
        ..CountRow::default()
    });
    Ok(rows)
}

fn table5(bound: u64, jobs: Option<usize>) -> Result<Vec<CountRow>> {
    let members = weak_members(1, bound, jobs)?;
    let three: Vec<&ScanMember> = members.iter().filter(|m| m.factorization.omega() == 3).collect();
    let mut rows = Vec::new();
    for n in TABLE_BOUNDS.iter().copied().filter(|&n| n <= bound) {
        let below = || three.iter().copied().take_while(|m| m.n < n);
        let (c, w) = tally_below(&members, n, 3);
        rows.push(CountRow {
            label: bound_label(n),
            hi: Some(n),
            factor_count: Some(3),
            carmichael: Some(c),
            weak: Some(w),
            extremal: extremal(below().filter(|m| !m.factorization.is_squarefree())),
            carmichael_extremal: extremal(below().filter(|m| m.factorization.is_squarefree())),
            ..CountRow::default()
        });
    }
    Ok(rows)
}
