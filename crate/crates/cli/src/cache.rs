//! Append-only scan cache.
//!
//! Each block is a header `#wcn-cache v1 <query> <count>` followed by `count`
//! TSV record lines.

use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;

use crate::record::OutputRecord;

const MAGIC: &str = "#wcn-cache v1";

pub enum Lookup {
    Hit(Vec<OutputRecord>),
    Miss,
    /// A block for the query exists but its row count does not match.
    Corrupt {
        expected: usize,
        found: usize,
    },
}

/// Find the first block recorded for `query`.
pub fn lookup(path: &Path, query: &str) -> io::Result<Lookup> {
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(Lookup::Miss),
        Err(e) => return Err(e),
    };
    let mut lines = BufReader::new(file).lines();
    while let Some(line) = lines.next() {
        let line = line?;
        let Some(rest) = line.strip_prefix(MAGIC) else { continue };
        let Some((q, count)) = rest.trim().rsplit_once(' ') else { continue };
        if q != query {
            continue;
        }
        let expected: usize = count.parse().unwrap_or(usize::MAX);
        let mut rows = Vec::new();
        for line in lines.by_ref() {
            let line = line?;
            if line.starts_with(MAGIC) {
                break;
            }
            match OutputRecord::from_tsv(&line) {
                Some(r) => rows.push(r),
                None => break,
            }
            if rows.len() == expected {
                break;
            }
        }
        if rows.len() != expected {
            return Ok(Lookup::Corrupt { expected, found: rows.len() });
        }
        return Ok(Lookup::Hit(rows));
    }
    Ok(Lookup::Miss)
}

pub fn append(path: &Path, query: &str, rows: &[OutputRecord]) -> io::Result<()> {
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    let mut buf = format!("{MAGIC} {query} {}\n", rows.len());
    for r in rows {
        buf.push_str(&r.to_tsv());
        buf.push('\n');
    }
    file.write_all(buf.as_bytes())
}
