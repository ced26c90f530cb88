//! Range scans and count tables.

mod scan;
mod sieve;
mod tables;
mod twins;

pub use scan::{scan, scan_batches, NumberClass, ScanConfig, ScanMember, DEFAULT_SEGMENT_SIZE};
pub use tables::{bound_label, count_table, prime_power_count, CountRow, Extremal, TableSchema};
pub use twins::twin_carmichael_pairs;
