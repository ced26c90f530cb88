use wcn_core::arith::{factorize, is_prime, Factorization, PrimePower};
use wcn_core::classify::{is_carmichael, is_k_number, is_weak_carmichael};
use wcn_core::construct::{
    chernick, chernick_m0, extended_chernick, k_number_power, lift_carmichael, lift_family,
    prime_power_pair_family, w_set, wong_family_descriptor,
};

/// `n - 1 mod (p - 1)` for every prime `p | n`, from the exponent form.
fn korselt(f: &Factorization) -> bool {
    f.is_composite() && f.primes().all(|p| p == 2 || f.residue(p - 1) == 1 % (p - 1))
}

#[test]
fn chernick_sweep() {
    for m in 1..=200 {
        let c = chernick(m).unwrap();
        let all_prime = c.components.iter().all(|&x| is_prime(x));
        assert_eq!(c.is_carmichael, all_prime, "m = {m}");
        assert!(!all_prime || is_carmichael(&factorize(c.n)), "m = {m}");
    }
    // The flag certifies the form only: 31 * 61 * 91 is Carmichael anyway.
    assert!(!chernick(5).unwrap().is_carmichael);
    assert!(is_carmichael(&factorize(31 * 61 * 91)));
}

#[test]
fn chernick_residue_class_gives_carmichael_only() {
    let class = chernick_m0(1, 2, 3).unwrap().unwrap();
    let mut m = class.residue.max(1);
    while m <= 200 {
        let comps = [6 * m + 1, 12 * m + 1, 18 * m + 1];
        if comps.iter().all(|&x| is_prime(x)) {
            assert!(is_carmichael(&factorize(comps.iter().product())), "m = {m}");
        }
        m += class.modulus;
    }
}

#[test]
fn extended_chernick_verdicts() {
    for m in 1..=60u64 {
        for &w in &w_set(m).unwrap() {
            let d = 36 * m / (w - 1);
            for l in 1..=12u32 {
                let Ok(e) = extended_chernick(m, d, l) else { continue };
                assert_eq!(e.member, korselt(&e.factorization), "m = {m}, d = {d}, l = {l}");
                assert_eq!(e.member, is_weak_carmichael(&e.factorization));
            }
        }
    }
}

#[test]
fn lifted_families_verify() {
    for n in (561..200_000u64).step_by(2) {
        let f = factorize(n);
        if !is_carmichael(&f) {
            continue;
        }
        let lifts = lift_carmichael(&f).unwrap();
        for (i, &(p, d)) in lifts.iter().enumerate() {
            let fam = lift_family(&f, i).unwrap();
            for k in 1..=3 {
                assert!(is_weak_carmichael(&fam.member(&[k]).unwrap()), "{n} lifted at {p}, k = {k}");
            }
            // d is the least such exponent step.
            for dd in 1..d {
                let g =
                    f.mul(&Factorization::from_prime_powers(vec![PrimePower::new(p, dd as u32)]).unwrap());
                assert!(!is_weak_carmichael(&g), "{n}: {p}^(1+{dd})");
            }
        }
    }
}

#[test]
fn prime_pair_rule_is_complete() {
    for (p, q) in [(3u64, 5u64), (5, 13), (7, 13)] {
        let (u, v) = prime_power_pair_family(p, q).unwrap().unwrap();
        for a in 1..=8u32 {
            for b in 1..=8u32 {
                let n = p.pow(a) as u128 * q.pow(b) as u128;
                let n1 = n - 1;
                let brute = n1 % (p as u128 - 1) == 0 && n1 % (q as u128 - 1) == 0;
                assert_eq!(brute, a as u64 % u == 0 && b as u64 % v == 0, "{p}^{a} {q}^{b}");
            }
        }
    }
}

#[test]
fn wong_sweep_up_to_500() {
    let primes: Vec<u64> = (3..500u64).filter(|&p| is_prime(p)).collect();
    let mut checked = 0;
    for (i, &p) in primes.iter().enumerate() {
        for &q in primes[i + 1..].iter().step_by(7) {
            let Ok(fam) = wong_family_descriptor(&[p, q]) else { continue };
            for ks in [[1, 1], [3, 2]] {
                let g = fam.member(&ks).unwrap();
                assert!(korselt(&g), "{p},{q} {ks:?}");
            }
            checked += 1;
        }
    }
    assert!(checked > 500);
}

#[test]
fn k_number_powers_up_to_500() {
    for n in 3..500u64 {
        let f = factorize(n);
        if !(is_k_number(&f) || f.is_prime()) {
            continue;
        }
        for d in 1..=3 {
            assert!(korselt(&k_number_power(&f, d).unwrap()), "{n}, d = {d}");
        }
    }
}
