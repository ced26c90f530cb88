//! One output line per number, shared by `classify` and `scan`.

use serde::{Deserialize, Serialize};
use wcn_core::classify::NumberProfile;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub n: String,
    pub factorization: String,
    pub flags: Vec<String>,
    #[serde(rename = "F")]
    pub liars: u64,
    #[serde(rename = "f")]
    pub liar_fraction: String,
    pub c_w: u64,
    pub lambda: u64,
}

pub const TSV_HEADER: &str = "n\tfactorization\ttags\tF\tf\tc_w\tlambda";

impl OutputRecord {
    pub fn from_profile(p: &NumberProfile) -> Self {
        Self {
            n: p.n.to_string(),
            factorization: p.factorization.to_string(),
            flags: p.tags(),
            liars: p.liar_count,
            liar_fraction: p.liar_fraction.to_string(),
            c_w: p.cw,
            lambda: p.lambda,
        }
    }

    pub fn to_tsv(&self) -> String {
        let flags = if self.flags.is_empty() { "-".to_string() } else { self.flags.join(",") };
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.n,
            self.factorization.replace('·', "*"),
            flags,
            self.liars,
            self.liar_fraction,
            self.c_w,
            self.lambda
        )
    }

    pub fn from_tsv(line: &str) -> Option<Self> {
        let cols: Vec<&str> = line.split('\t').collect();
        let [n, fact, flags, liars, frac, cw, lambda] = cols.as_slice() else {
            return None;
        };
        let flags = if *flags == "-" { Vec::new() } else { flags.split(',').map(str::to_string).collect() };
        Some(Self {
            n: n.to_string(),
            factorization: fact.replace('*', "·"),
            flags,
            liars: liars.parse().ok()?,
            liar_fraction: frac.to_string(),
            c_w: cw.parse().ok()?,
            lambda: lambda.parse().ok()?,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    pub fn to_md(&self) -> String {
        let flags = if self.flags.is_empty() { "-".to_string() } else { self.flags.join(", ") };
        format!(
            "| {} | {} | {} | {} | {} | {} | {} |",
            self.n, self.factorization, flags, self.liars, self.liar_fraction, self.c_w, self.lambda
        )
    }
}

pub const MD_HEADER: &str = "| n | factorization | tags | F | f | c_w | λ |\n|---|---|---|---|---|---|---|";
