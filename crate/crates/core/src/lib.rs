//! Weak Carmichael numbers and their relatives.
//!
//! A composite `n` is a *weak Carmichael number* when the sum of `k^(n-1)` over
//! the totatives `k` of `n` is congruent to `phi(n)` modulo `n`; equivalently,
//! when `n` is odd and `p - 1` divides `n - 1` for every prime `p | n`.
//! Carmichael numbers are exactly the squarefree ones.
//!
//! The crate is split into:
//!
//! - [`arith`]: factorization, primality, multiplicative functions, power sums
//!   and small exact Bernoulli numbers.
//! - [`classify`]: per-number predicates (weak Carmichael, Carmichael, super
//!   Carmichael, Giuga, K-numbers, k-Lehmer, almost Carmichael) and Fermat-liar
//!   statistics, each paired with a direct congruence oracle where one exists.
//! - [`enumerate`]: segmented, parallel range scans and count tables.
//! - [`construct`]: parametric families (Chernick, lifting, prime-power pairs, ...).
//!
//! ```
//! use wcn_core::arith::factorize;
//! use wcn_core::classify::{is_carmichael, is_weak_carmichael};
//!
//! let f = factorize(45);
//! assert!(is_weak_carmichael(&f));
//! assert!(!is_carmichael(&f));
//! assert!(is_carmichael(&factorize(561)));
//! ```

pub mod arith;
pub mod classify;
pub mod construct;
pub mod enumerate;
mod error;

pub use error::{Error, Result};
