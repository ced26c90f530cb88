use thiserror::Error;

/// Errors raised when an input violates an operation's precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 1")]
    ZeroModulus,

    #[error("{0} must be at least 1")]
    NonPositive(&'static str),

    #[error("{what} is only defined for odd n, got {n}")]
    EvenInput { what: &'static str, n: u64 },

    #[error("{what} requires a composite n, got {n}")]
    NotComposite { what: &'static str, n: u64 },

    #[error("{n} is outside the supported range of {what} (max {max})")]
    OutOfRange { what: &'static str, n: u64, max: u64 },

    #[error("bernoulli index {index} exceeds the cap {cap}")]
    BernoulliIndex { index: u32, cap: u32 },

    #[error("bernoulli denominator needs a positive even argument, got {0}")]
    OddBernoulliArgument(u64),

    #[error("base {base} is not coprime to {n}")]
    NotCoprime { base: u64, n: u64 },

    #[error("{0} is not a Carmichael number")]
    NotCarmichael(String),

    #[error("{0} is not a weak Carmichael number")]
    NotWeakCarmichael(String),

    #[error("{0} is not a K-number (gcd(n, phi(n)) != 1)")]
    NotKNumber(String),

    #[error("{0} is not squarefree")]
    NotSquarefree(String),

    #[error("{0} is a prime power")]
    PrimePower(String),

    #[error("lehmer index of {n} is {required}, above the bound {k_max}")]
    LehmerBoundExceeded { n: u64, required: u32, k_max: u32 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{a}, {b}, {c} are not pairwise coprime with a < b < c")]
    BadChernickTriple { a: u64, b: u64, c: u64 },

    #[error("{d} does not divide 36m = {modulus}")]
    DivisorMismatch { d: u64, modulus: u64 },

    #[error("chernick component {0} is not prime")]
    ChernickComponent(u64),

    #[error("w = {0} coincides with a chernick prime")]
    ChernickCollision(u64),

    #[error("primes must be distinct and odd, got {p} and {q}")]
    BadPrimePair { p: u64, q: u64 },

    #[error("{p} divides q-1 = {}", q - 1)]
    PrimeDividesPredecessor { p: u64, q: u64 },

    #[error("a prime set needs at least two primes")]
    TooFewPrimes,

    #[error("primes must be listed in strictly increasing order")]
    UnorderedPrimes,

    #[error("invalid scan range [{lo}, {hi})")]
    InvalidRange { lo: u64, hi: u64 },

    #[error("segment size must be at least 2")]
    SegmentSize,

    #[error("integer overflow: value exceeds 64 bits")]
    Overflow,

    #[error("{schema} is not reproduced at N = {bound}; supported: {supported}")]
    UnsupportedBound { schema: &'static str, bound: u64, supported: &'static str },

    #[error("cannot parse {0:?}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
