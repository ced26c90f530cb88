//! Acceptance suite: one line per criterion.
//!
//! Three criteria contradict the published data and are expected to fail;
//! they print FAIL with the reason. The run exits non-zero only when the set
//! of failing criteria differs from that list.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use wcn_core::arith::{bernoulli, factorize, power_sum_mod, Factorization};
use wcn_core::classify::{
    almost_carmichael_order, fermat_liar_count, is_carmichael, is_giuga, is_giuga_counterexample,
    is_super_carmichael, is_weak_carmichael, is_weak_carmichael_oracle, super_congruence_direct,
    super_congruence_halved, super_congruence_staged,
};
use wcn_core::construct::{extended_chernick, lift_carmichael, lift_family, prime_power_pair_family};
use wcn_core::enumerate::{
    count_table, scan, twin_carmichael_pairs, CountRow, NumberClass, ScanConfig, TableSchema,
};

/// Criteria whose literal statement disagrees with the arithmetic.
const KNOWN_CONFLICTS: &[(u32, &str)] = &[
    (4, "52280425 = 5^2*409*5113 is not a weak Carmichael number; the scan finds 78418081 = 7^2*313*5113"),
    (7, "n = 4 and n = 6 have f(n) = 1/2 without being almost Carmichael of order 2"),
    (11, "11 has d = 4, not 8, and 13^4 does not extend 211*421*631 (needs 13^12)"),
];

/// Table 1 as printed: value, factorization, and C (bold), P (italic) or O.
const TABLE1: &[(u64, &str, char)] = &[
    (9, "3^2", 'P'),
    (25, "5^2", 'P'),
    (27, "3^3", 'P'),
    (45, "3^2·5", 'O'),
    (49, "7^2", 'P'),
    (81, "3^4", 'P'),
    (121, "11^2", 'P'),
    (125, "5^3", 'P'),
    (169, "13^2", 'P'),
    (225, "3^2·5^2", 'O'),
    (243, "3^5", 'P'),
    (289, "17^2", 'P'),
    (325, "5^2·13", 'O'),
    (343, "7^3", 'P'),
    (361, "19^2", 'P'),
    (405, "3^4·5", 'O'),
    (529, "23^2", 'P'),
    (561, "3·11·17", 'C'),
    (625, "5^4", 'P'),
    (637, "7^2·13", 'O'),
    (729, "3^6", 'P'),
    (841, "29^2", 'P'),
    (891, "3^4·11", 'O'),
    (961, "31^2", 'P'),
    (1105, "5·13·17", 'C'),
    (1125, "3^2·5^3", 'O'),
    (1225, "5^2·7^2", 'O'),
    (1331, "11^3", 'P'),
    (1369, "37^2", 'P'),
    (1377, "3^4·17", 'O'),
    (1681, "41^2", 'P'),
    (1729, "7·13·19", 'C'),
    (1849, "43^2", 'P'),
    (2025, "3^4·5^2", 'O'),
    (2187, "3^7", 'P'),
    (2197, "13^3", 'P'),
    (2209, "47^2", 'P'),
    (2401, "7^4", 'P'),
    (2465, "5·17·29", 'C'),
    (2809, "53^2", 'P'),
    (2821, "7·13·31", 'C'),
    (3125, "5^5", 'P'),
    (3321, "3^4·41", 'O'),
    (3481, "59^2", 'P'),
    (3645, "3^6·5", 'O'),
    (3721, "61^2", 'P'),
    (3751, "11^2·31", 'O'),
    (3825, "3^2·5^2·17", 'O'),
    (4225, "5^2·13^2", 'O'),
    (4489, "67^2", 'P'),
    (4913, "17^3", 'P'),
    (4961, "11^2·41", 'O'),
    (5041, "71^2", 'P'),
    (5329, "73^2", 'P'),
    (5589, "3^5·23", 'O'),
    (5625, "3^2·5^4", 'O'),
    (6241, "79^2", 'P'),
    (6517, "7^3·19", 'O'),
    (6525, "3^2·5^2·29", 'O'),
    (6561, "3^8", 'P'),
    (6601, "7·23·41", 'C'),
    (6859, "19^3", 'P'),
    (6889, "83^2", 'P'),
    (7381, "11^2·61", 'O'),
    (7921, "89^2", 'P'),
    (8125, "5^4·13", 'O'),
    (8281, "7^2·13^2", 'O'),
    (8625, "3·5^3·23", 'O'),
    (8911, "7·19·67", 'C'),
    (9409, "97^2", 'P'),
    (9801, "3^4·11^2", 'O'),
    (10125, "3^4·5^3", 'O'),
    (10201, "101^2", 'P'),
    (10585, "5·29·73", 'C'),
    (10609, "103^2", 'P'),
    (10625, "5^4·17", 'O'),
    (11449, "107^2", 'P'),
    (11881, "109^2", 'P'),
    (12025, "5^2·13·37", 'O'),
    (12167, "23^3", 'P'),
    (12769, "113^2", 'P'),
    (13357, "19^2·37", 'O'),
    (13833, "3^2·29·53", 'O'),
    (14161, "7^2·17^2", 'O'),
    (14641, "11^4", 'P'),
    (15625, "5^6", 'P'),
    (15841, "7·31·73", 'C'),
    (15925, "5^2·7^2·13", 'O'),
    (16129, "127^2", 'P'),
    (16807, "7^5", 'P'),
    (17161, "131^2", 'P'),
    (18225, "3^6·5^2", 'O'),
    (18769, "137^2", 'P'),
    (19321, "139^2", 'P'),
    (19683, "3^9", 'P'),
    (21141, "3^6·29", 'O'),
    (22201, "149^2", 'P'),
    (22801, "151^2", 'P'),
    (23409, "3^2·5·23^2", 'O'),
    (23805, "3^2·5·23^2", 'O'),
    (24389, "29^3", 'P'),
    (24649, "157^2", 'P'),
];

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn check(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    let m = m as u128;
    let (mut r, mut b) = (1u128 % m, b as u128 % m);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r as u64
}

fn row<'a>(rows: &'a [CountRow], label: &str) -> Result<&'a CountRow, String> {
    rows.iter().find(|r| r.label == label).ok_or(format!("no row {label}"))
}

fn expect(got: Option<u64>, want: u64, what: &str) -> Result<(), String> {
    check(got == Some(want), format!("{what}: got {got:?}, want {want}"))
}

fn expect_witness(
    got: &Option<wcn_core::enumerate::Extremal>,
    n: u64,
    f: &str,
    what: &str,
) -> Result<(), String> {
    match got {
        Some(e) if e.witness == n && e.factorization.to_string() == f => Ok(()),
        Some(e) => Err(format!("{what}: got {}={}, want {n}={f}", e.witness, e.factorization)),
        None => Err(format!("{what}: none, want {n}")),
    }
}

fn table1() -> Outcome {
    let members = scan(&ScanConfig::new(1, 25_000, NumberClass::Weak)).map_err(|e| e.to_string())?;
    let (mut c, mut p, mut o) = (0, 0, 0);
    for m in &members {
        let f = &m.factorization;
        if is_carmichael(f) {
            c += 1;
        } else if f.is_prime_power() {
            p += 1;
        } else {
            o += 1;
        }
    }
    check(
        (members.len(), c, p, o) == (102, 9, 57, 36),
        format!("counts {} / {c} / {p} / {o}", members.len()),
    )?;
    check(members.len() == TABLE1.len(), "length differs from Table 1")?;
    for (m, &(n, fact, kind)) in members.iter().zip(TABLE1) {
        check(m.n == n, format!("member {} where Table 1 has {n}", m.n))?;
        let f = &m.factorization;
        let computed_kind = if is_carmichael(f) {
            'C'
        } else if f.is_prime_power() {
            'P'
        } else {
            'O'
        };
        check(computed_kind == kind, format!("{n}: kind {computed_kind}, printed {kind}"))?;
        // 23409 is printed with the factorization of 23805.
        if n != 23409 {
            check(f.to_string() == fact, format!("{n}: {f}, printed {fact}"))?;
        }
    }
    check(factorize(23409).to_string() == "3^4·17^2", "23409 erratum")?;
    Ok("102 members: 9 C, 57 P, 36 other; list matches".into())
}

fn table4() -> Outcome {
    let rows = count_table(2_000_000, TableSchema::Table4, None).map_err(|e| e.to_string())?;
    let k2 = row(&rows, "(2*10^6,2)")?;
    expect(k2.carmichael_total, 55, "C(2*10^6)")?;
    expect(k2.weak_total, 243, "W'(2*10^6)")?;
    for (k, want) in [(2, 132), (3, 89), (4, 22), (5, 0)] {
        expect(row(&rows, &format!("(2*10^6,{k})"))?.weak, want, &format!("W_{k}'(2*10^6)"))?;
    }
    expect(row(&rows, "(10^4,2)")?.carmichael_total, 7, "C(10^4)")?;
    expect(row(&rows, "(10^5,2)")?.weak, 51, "W_2'(10^5)")?;
    let status = wcn(&["table", "--schema", "4", "--to", "2000000", "--verify"]).status;
    check(status.success(), format!("table --verify: {status}"))?;
    Ok("C = 55, W' = 243, W_k' = (132, 89, 22, 0); all rows verified".into())
}

fn table3() -> Outcome {
    let rows = count_table(2_000_000, TableSchema::Table3, None).map_err(|e| e.to_string())?;
    let first = row(&rows, "(1,10^6;1,10^6)")?;
    expect(first.weak, 107, "W_2(1,10^6)")?;
    expect(first.prime_powers, 218, "P(1,10^6)")?;
    expect(first.carmichael, 43, "C(1,10^6)")?;
    expect_witness(&first.extremal, 856087, "43^2·463", "w_2")?;
    let second = row(&rows, "(10^6,2*10^6;1,2*10^6)")?;
    expect(second.weak, 25, "W_2(10^6,2*10^6)")?;
    expect(second.prime_powers, 65, "P(10^6,2*10^6)")?;
    expect(second.carmichael, 12, "C(10^6,2*10^6)")?;
    expect_witness(&second.extremal, 1610401, "13^3·733", "w_2")?;
    Ok("107/218/43 with 856087; 25/65/12 with 1610401".into())
}

fn table5() -> Outcome {
    let rows = count_table(100_000_000, TableSchema::Table5, None).map_err(|e| e.to_string())?;
    let r7 = row(&rows, "10^7")?;
    let r8 = row(&rows, "10^8")?;
    expect(r7.carmichael, 47, "C_3(10^7)")?;
    expect(r7.weak, 186, "W_3'(10^7)")?;
    expect(r8.carmichael, 84, "C_3(10^8)")?;
    expect(r8.weak, 413, "W_3'(10^8)")?;
    expect_witness(&r7.extremal, 8927425, "5^2·13^2·2113", "W_3' witness at 10^7")?;
    expect_witness(&r7.carmichael_extremal, 8134561, "37·109·2017", "C_3 witness at 10^7")?;
    expect_witness(&r8.carmichael_extremal, 67902031, "43·271·5827", "C_3 witness at 10^8")?;
    expect_witness(&r8.extremal, 52280425, "5^2·409·5113", "W_3' witness at 10^8")?;
    Ok("(47, 186), (84, 413) and all four witnesses".into())
}

fn oracle() -> Outcome {
    let mut checked = 0;
    for n in 4..=10_000u64 {
        let f = factorize(n);
        if !f.is_composite() {
            continue;
        }
        let phi = (1..n).filter(|&a| gcd(a, n) == 1).count() as u64;
        let sum = (1..n).filter(|&a| gcd(a, n) == 1).fold(0, |s, a| (s + pow_mod(a, n - 1, n)) % n);
        let direct = sum == phi % n;
        check(is_weak_carmichael(&f) == direct, format!("criterion disagrees at {n}"))?;
        let oracle = is_weak_carmichael_oracle(n).map_err(|e| e.to_string())?;
        check(oracle == direct, format!("oracle disagrees at {n}"))?;
        checked += 1;
    }
    Ok(format!("{checked} composites agree"))
}

fn liars() -> Outcome {
    for n in 2..=2000u64 {
        let brute = (1..n).filter(|&a| gcd(a, n) == 1 && pow_mod(a, n - 1, n) == 1).count() as u64;
        let got = fermat_liar_count(&factorize(n)).map_err(|e| e.to_string())?.liars;
        check(got == brute, format!("F({n}) = {got}, brute force {brute}"))?;
    }
    for (n, want) in [(561u64, 320u64), (1105, 768), (26353, 1296)] {
        let got = fermat_liar_count(&factorize(n)).map_err(|e| e.to_string())?.liars;
        check(got == want, format!("F({n}) = {got}"))?;
    }
    for p in (3..=500u64).filter(|&p| factorize(p).is_prime()) {
        let got = fermat_liar_count(&factorize(2 * p)).map_err(|e| e.to_string())?.liars;
        check(got == 1, format!("F(2*{p}) = {got}"))?;
    }
    Ok("brute force to 2000; F(561), F(1105), F(26353), F(2p) match".into())
}

fn nine_times_large_primes(f: &Factorization) -> bool {
    f.exponent_of(3) == 2 && f.factors().iter().all(|pp| pp.prime == 3 || (pp.exp == 1 && pp.prime > 3))
}

fn liar_bounds() -> Outcome {
    use std::cmp::Ordering::*;
    let mut bad = Vec::new();
    for n in 4..=100_000u64 {
        let f = factorize(n);
        if !f.is_composite() {
            continue;
        }
        let stats = fermat_liar_count(&f).map_err(|e| e.to_string())?;
        let phi = wcn_core::arith::euler_phi(&f);
        let vs = |k: u64| (k * stats.liars).cmp(&phi);
        let order = if f.is_odd() && f.is_squarefree() && f.omega() >= 2 {
            almost_carmichael_order(&f, 3).map_err(|e| e.to_string())?
        } else {
            None
        };
        let cn = is_carmichael(&f);
        let special = order == Some(3) || (is_weak_carmichael(&f) && nine_times_large_primes(&f));
        let ok = match (vs(1), vs(2), vs(3)) {
            (Greater, _, _) => false,
            (Equal, _, _) => cn,
            _ if cn => false,
            (_, Greater, _) => false,
            (_, Equal, _) => order == Some(2),
            _ if order == Some(2) => false,
            (_, _, Greater) => false,
            (_, _, Equal) => special,
            (_, _, Less) => !special,
        };
        if !ok {
            bad.push(n);
        }
    }
    check(bad.is_empty(), format!("violated at n = {bad:?}"))?;
    Ok("parts (i)-(iii) hold".into())
}

fn power_sums() -> Outcome {
    for m in 2..=300u64 {
        for l in 1..=60u64 {
            let brute = (1..m).fold(0, |s, i| (s + pow_mod(i, l, m)) % m);
            let got = power_sum_mod(l, m).map_err(|e| e.to_string())?;
            check(got == brute, format!("S_{l} mod {m}: {got}, brute force {brute}"))?;
        }
    }
    use num_bigint::BigInt;
    use num_rational::BigRational;
    for n in 2..=30u64 {
        for k in 1..=10u32 {
            let mut acc = BigRational::from_integer(BigInt::from(0));
            let mut binom = BigInt::from(1);
            for i in 0..=k {
                let b = bernoulli(i).map_err(|e| e.to_string())?.as_inner().clone();
                acc += b * BigRational::from_integer(&binom * BigInt::from(n).pow(k + 1 - i));
                binom = binom * (k + 1 - i) / (i + 1);
            }
            acc /= BigRational::from_integer(BigInt::from(k + 1));
            let brute: BigInt = (1..n).map(|i| BigInt::from(i).pow(k)).sum();
            check(acc == BigRational::from_integer(brute), format!("Faulhaber n = {n}, k = {k}"))?;
        }
    }
    for two_n in (2..=40u64).step_by(2) {
        let denom: u64 =
            (2..=two_n + 1).filter(|&p| factorize(p).is_prime() && two_n % (p - 1) == 0).product();
        let b = bernoulli(two_n as u32).map_err(|e| e.to_string())?;
        check(*b.denom() == BigInt::from(denom), format!("denominator of B_{two_n}"))?;
    }
    Ok("power sums, Faulhaber and von Staudt-Clausen agree".into())
}

fn giuga() -> Outcome {
    let found: Vec<u64> = (2..=100_000u64).filter(|&n| is_giuga(&factorize(n))).collect();
    check(found == [30, 858, 1722, 66198], format!("Giuga numbers {found:?}"))?;
    let counter: Vec<u64> = (4..=1_000_000u64).filter(|&n| is_giuga_counterexample(&factorize(n))).collect();
    check(counter.is_empty(), format!("counterexamples {counter:?}"))?;
    Ok("{30, 858, 1722, 66198}; no counterexample to 10^6".into())
}

fn super_carmichael() -> Outcome {
    let weak = scan(&ScanConfig::new(1, 100_001, NumberClass::Weak)).map_err(|e| e.to_string())?;
    for m in &weak {
        let s = is_super_carmichael(&m.factorization).map_err(|e| e.to_string())?;
        check(!s, format!("{} is super Carmichael", m.n))?;
    }
    let mut compared = 0;
    for m in weak.iter().filter(|m| m.n <= 10_000) {
        let n = m.n;
        let direct = super_congruence_direct(n).map_err(|e| e.to_string())?;
        let halved = super_congruence_halved(n).map_err(|e| e.to_string())?;
        let staged = super_congruence_staged(&m.factorization).map_err(|e| e.to_string())?;
        check(direct == halved && halved == staged, format!("routes disagree at {n}"))?;
        compared += 1;
    }
    Ok(format!("none to 10^5; three routes agree on {compared} members"))
}

fn constructors() -> Outcome {
    let mut problems = Vec::new();
    let f561 = factorize(561);
    let lifts = lift_carmichael(&f561).map_err(|e| e.to_string())?;
    if lifts != [(3, 4), (11, 8), (17, 4)] {
        problems.push(format!("lift_carmichael(561) = {lifts:?}"));
    }
    let smallest = (0..lifts.len())
        .map(|i| lift_family(&f561, i).and_then(|fam| fam.smallest_member()))
        .filter_map(|r| r.ok().and_then(|f| f.value()))
        .min();
    if smallest != Some(45441) {
        problems.push(format!("smallest lifted member {smallest:?}"));
    }
    match extended_chernick(35, 105, 4) {
        Ok(e) if e.member && is_weak_carmichael(&e.factorization) => {}
        Ok(e) => problems.push(format!(
            "extended_chernick(35, 105, 4) = {} is not a weak Carmichael number",
            e.factorization
        )),
        Err(e) => problems.push(format!("extended_chernick(35, 105, 4): {e}")),
    }
    for (p, q) in [(3u64, 5u64), (5, 13), (7, 13)] {
        let Ok(Some((u, v))) = prime_power_pair_family(p, q) else {
            problems.push(format!("no pair family for ({p}, {q})"));
            continue;
        };
        for a in 1..=8u32 {
            for b in 1..=8u32 {
                let n1 = p.pow(a) as u128 * q.pow(b) as u128 - 1;
                let brute = n1 % (p as u128 - 1) == 0 && n1 % (q as u128 - 1) == 0;
                if brute != (a as u64 % u == 0 && b as u64 % v == 0) {
                    problems.push(format!("pair rule wrong at {p}^{a} {q}^{b}"));
                }
            }
        }
    }
    check(problems.is_empty(), problems.join("; "))?;
    Ok("lift, extended Chernick and pair families verified".into())
}

fn twins() -> Outcome {
    let pairs = twin_carmichael_pairs(1, 1_000_000, false, None).map_err(|e| e.to_string())?;
    for pair in [(2465, 2821), (62745, 63973), (656601, 658801), (658801, 670033)] {
        check(pairs.contains(&pair), format!("{pair:?} missing"))?;
    }
    Ok(format!("{} pairs, all four listed present", pairs.len()))
}

fn wcn(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_wcn")).args(args).env_remove("WCN_JOBS").output().expect("wcn runs")
}

fn determinism() -> Outcome {
    let runs: &[&[&str]] = &[
        &["scan", "--from", "1", "--to", "25000"],
        &["table", "--schema", "1", "--to", "25000"],
        &["table", "--schema", "4", "--to", "2000000"],
        &["table", "--schema", "3", "--to", "2000000"],
        &["table", "--schema", "5", "--to", "100000000"],
    ];
    for args in runs {
        let mut outputs = Vec::new();
        for jobs in ["1", "4", "16"] {
            let mut full = args.to_vec();
            full.extend(["--jobs", jobs]);
            let out = wcn(&full);
            check(out.status.success(), format!("wcn {} failed", full.join(" ")))?;
            outputs.push(out.stdout);
        }
        check(
            outputs.windows(2).all(|w| w[0] == w[1]),
            format!("output of wcn {} differs across worker counts", args.join(" ")),
        )?;
    }
    Ok("identical for 1, 4 and 16 workers".into())
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "Table 1 reproduction", budget: Duration::from_secs(1), run: table1 },
        Criterion { id: 2, name: "Table 4 at 2*10^6", budget: Duration::from_secs(30), run: table4 },
        Criterion { id: 3, name: "Table 3 first blocks", budget: Duration::from_secs(30), run: table3 },
        Criterion { id: 4, name: "Table 5 at 10^7 and 10^8", budget: Duration::from_secs(600), run: table5 },
        Criterion {
            id: 5,
            name: "criterion vs congruence oracle",
            budget: Duration::from_secs(60),
            run: oracle,
        },
        Criterion { id: 6, name: "Fermat liar formula", budget: Duration::from_secs(60), run: liars },
        Criterion { id: 7, name: "liar fraction bounds", budget: Duration::from_secs(60), run: liar_bounds },
        Criterion {
            id: 8,
            name: "power sums and Bernoulli numbers",
            budget: Duration::from_secs(10),
            run: power_sums,
        },
        Criterion { id: 9, name: "Giuga suite", budget: Duration::from_secs(120), run: giuga },
        Criterion {
            id: 10,
            name: "super Carmichael",
            budget: Duration::from_secs(300),
            run: super_carmichael,
        },
        Criterion { id: 11, name: "constructors", budget: Duration::from_secs(10), run: constructors },
        Criterion { id: 12, name: "twin Carmichael pairs", budget: Duration::from_secs(30), run: twins },
        Criterion {
            id: 13,
            name: "determinism across workers",
            budget: Duration::from_secs(600),
            run: determinism,
        },
    ];
    let mut failed = Vec::new();
    for &Criterion { id, name, budget, run } in &criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > budget => Err(format!("{detail}, but took longer than {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => {
                println!("criterion {id:>2} PASS  {name}: {detail} ({:.2} s)", elapsed.as_secs_f64())
            }
            Err(why) => {
                let known = KNOWN_CONFLICTS.iter().find(|(k, _)| *k == id);
                let note = known.map_or(String::new(), |(_, reason)| format!(" [data conflict: {reason}]"));
                println!("criterion {id:>2} FAIL  {name}: {why}{note} ({:.2} s)", elapsed.as_secs_f64());
                failed.push(id);
            }
        }
    }
    let known: Vec<u32> = KNOWN_CONFLICTS.iter().map(|&(k, _)| k).collect();
    println!("{} of {} criteria pass; failing: {failed:?}", criteria.len() - failed.len(), criteria.len());
    if failed == known {
        ExitCode::SUCCESS
    } else {
        println!("failing set differs from the documented data conflicts {known:?}");
        ExitCode::FAILURE
    }
}
