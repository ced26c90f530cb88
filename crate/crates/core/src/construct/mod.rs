//! Parametric families of weak Carmichael numbers.
//!
//! Every constructor returns its members in exponent form as well as (when it
//! fits) a value, and every member it describes passes
//! [`is_weak_carmichael`](crate::classify::is_weak_carmichael).

mod chernick;
mod family;
mod lattice;
mod lift;

pub use chernick::{
    chernick, chernick_m0, extended_chernick, w_set, Chernick, ExtendedChernick, ResidueClass,
};
pub use family::{FamilyDescriptor, FamilyKind};
pub use lattice::{
    k_number_power, k_number_power_family, prime_power_pair_descriptor, prime_power_pair_family, wong_family,
    wong_family_descriptor,
};
pub use lift::{lift_carmichael, lift_family};
