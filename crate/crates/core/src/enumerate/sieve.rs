//! Segmented factoring sieve.
//!
//! For a segment `[lo, hi)` every prime `p <= sqrt(hi - 1)` is walked over its
//! multiples. Each hit strips `p` from a per-slot cofactor, records the prime
//! power in a per-slot linked list, and evaluates the class's local condition
//! for that prime; a slot that fails is marked dead and receives no further
//! work. After all sieving primes, a remaining cofactor above 1 is the single
//! large prime factor.

use crate::arith::modular::gcd;
use crate::arith::{Factorization, PrimePower};

use super::scan::NumberClass;

const NIL: u32 = u32::MAX;

#[derive(Clone, Copy)]
struct Node {
    prime: u32,
    exp: u32,
    next: u32,
}

/// Condition on `n` that does not depend on the exponent of `p`.
#[inline]
fn local_before(class: NumberClass, n: u64, p: u64) -> bool {
    match class {
        NumberClass::Weak | NumberClass::Carmichael | NumberClass::Super => (n - 1) % (p - 1) == 0,
        NumberClass::KNumber => gcd(n, p - 1) == 1,
        NumberClass::Giuga | NumberClass::WeakGiuga | NumberClass::PrimePower => true,
    }
}

/// Condition once `p^e || n` is known; `hits` counts the primes already accepted.
#[inline]
fn local_after(class: NumberClass, n: u64, p: u64, e: u32, hits: u32) -> bool {
    match class {
        NumberClass::Carmichael | NumberClass::KNumber => e == 1,
        NumberClass::Giuga | NumberClass::WeakGiuga => e == 1 && (n / p - 1) % p == 0,
        NumberClass::PrimePower => hits == 0,
        NumberClass::Weak | NumberClass::Super => true,
    }
}

fn odd_only(class: NumberClass) -> bool {
    matches!(
        class,
        NumberClass::Weak | NumberClass::Carmichael | NumberClass::Super | NumberClass::PrimePower
    )
}

/// Candidates in `[lo, hi)` that pass every local condition of `class`,
/// with their full factorizations, ascending. Primes are never returned.
pub(crate) fn sieve_segment(
    lo: u64,
    hi: u64,
    class: NumberClass,
    primes: &[u32],
) -> Vec<(u64, Factorization)> {
    let len = (hi - lo) as usize;
    let mut rem: Vec<u64> = (lo..hi).collect();
    let mut alive: Vec<bool> = (lo..hi).map(|n| n >= 4 && (!odd_only(class) || n % 2 == 1)).collect();
    let mut head = vec![NIL; len];
    let mut hits = vec![0u32; len];
    let mut nodes: Vec<Node> = Vec::new();
    let skip_even = odd_only(class);

    for &p32 in primes {
        let p = p32 as u64;
        if p * p >= hi {
            break;
        }
        if skip_even && p == 2 {
            continue;
        }
        let mut first = lo.div_ceil(p) * p;
        let step = if skip_even {
            if first % 2 == 0 {
                first += p;
            }
            2 * p
        } else {
            p
        };
        let mut m = first;
        while m < hi {
            let i = (m - lo) as usize;
            if alive[i] {
                if !local_before(class, m, p) {
                    alive[i] = false;
                } else {
                    let mut r = rem[i] / p;
                    let mut e = 1u32;
                    while r % p == 0 {
                        r /= p;
                        e += 1;
                    }
                    rem[i] = r;
                    if !local_after(class, m, p, e, hits[i]) {
                        alive[i] = false;
                    } else {
                        hits[i] += 1;
                        nodes.push(Node { prime: p32, exp: e, next: head[i] });
                        head[i] = (nodes.len() - 1) as u32;
                    }
                }
            }
            m += step;
        }
    }

    let mut out = Vec::new();
    for i in 0..len {
        if !alive[i] {
            continue;
        }
        let n = lo + i as u64;
        let r = rem[i];
        if r == n {
            continue; // no prime below sqrt(hi) divides n: n is prime
        }
        if r > 1 && (!local_before(class, n, r) || !local_after(class, n, r, 1, hits[i])) {
            continue;
        }
        let mut factors = Vec::with_capacity(hits[i] as usize + 1);
        let mut j = head[i];
        while j != NIL {
            let node = nodes[j as usize];
            factors.push(PrimePower::new(node.prime as u64, node.exp));
            j = node.next;
        }
        factors.reverse();
        if r > 1 {
            factors.push(PrimePower::new(r, 1));
        }
        if factors.len() == 1 && factors[0].exp == 1 {
            continue; // a sieving prime itself
        }
        out.push((n, Factorization::from_sorted_unchecked(factors)));
    }
    out
}
