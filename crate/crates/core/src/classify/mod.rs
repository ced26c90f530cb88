//! Per-number predicates and statistics.
//!
//! Every class here is defined on composites; primes return `false`
//! throughout and are reported separately by [`profile`].

mod almost;
mod giuga;
mod lehmer;
mod liars;
mod profile;
mod super_carmichael;
mod weak;

pub use almost::almost_carmichael_order;
pub use giuga::{is_giuga, is_giuga_counterexample, is_giuga_oracle, is_weak_giuga};
pub use lehmer::{is_k_number, lehmer_index};
pub use liars::{fermat_liar_count, is_fermat_pseudoprime, LiarStats};
pub use profile::{profile, NumberProfile};
pub use super_carmichael::{
    is_super_carmichael, super_congruence_direct, super_congruence_halved, super_congruence_staged,
    SUPER_CARMICHAEL_MAX,
};
pub use weak::{
    is_carmichael, is_carmichael_bernoulli, is_primitive_wcn, is_weak_carmichael, is_weak_carmichael_oracle,
};
