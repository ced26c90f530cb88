//! Exact integer and modular primitives.

mod bernoulli;
mod factor;
mod functions;
pub mod modular;
mod power_sum;
mod primes;

pub use bernoulli::{
    bernoulli, bernoulli_denominator, bernoulli_denominator_mod, staudt_primes, ExactRational, BERNOULLI_CAP,
};
pub use factor::{factorize, Factorization, PrimePower};
pub(crate) use functions::cw_unchecked;
pub use functions::{carmichael_lambda, cw, divisors, euler_phi, moebius, radical};
pub use modular::{gcd, lcm, mod_inverse, mod_pow, multiplicative_order};
pub use power_sum::{
    power_sum_mod, power_sum_mod_factored, reduced_residues, totative_power_sum, TotativeSet, Totatives,
};
pub use primes::{is_prime, sieve_primes, small_primes, PRIME_TABLE_LIMIT};
