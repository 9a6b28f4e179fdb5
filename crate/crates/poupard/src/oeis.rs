//! Embedded OEIS snapshots and the triangle cross-checks against them.
//!
//! The snapshots are static b-files ("index value" per line) regenerated
//! offline by `scripts/gen_oeis_snapshots.py`; nothing here touches the
//! network. A008301 stores g_n(k) / 2^{n-1} and A125053 stores h_n(k),
//! both linearized row by row, left to right.

use crate::report::VerifyReport;
use crate::triangle::{solve_forward, Kind};
use num_bigint::BigInt;
use num_traits::One;

pub const A008301: &str = "A008301";
pub const A125053: &str = "A125053";

const A008301_BFILE: &str = include_str!("../data/a008301.txt");
const A125053_BFILE: &str = include_str!("../data/a125053.txt");

#[derive(Debug, Clone)]
pub struct OeisSnapshot {
    pub sequence_id: String,
    pub values: Vec<(u64, BigInt)>,
}

impl OeisSnapshot {
    pub fn load(sequence_id: &str) -> Option<OeisSnapshot> {
        let body = match sequence_id {
            A008301 => A008301_BFILE,
            A125053 => A125053_BFILE,
            _ => return None,
        };
        Some(parse_bfile(sequence_id, body))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

fn parse_bfile(sequence_id: &str, body: &str) -> OeisSnapshot {
    let mut values = Vec::new();
    let mut last_index = 0u64;
    for line in body.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let index: u64 = parts
            .next()
            .and_then(|s| s.parse().ok())
            .unwrap_or_else(|| panic!("bad b-file line in {}: {:?}", sequence_id, line));
        let value: BigInt = parts
            .next()
            .and_then(|s| s.parse().ok())
            .unwrap_or_else(|| panic!("bad b-file line in {}: {:?}", sequence_id, line));
        assert!(index > last_index, "b-file indices must strictly increase");
        last_index = index;
        values.push((index, value));
    }
    OeisSnapshot { sequence_id: sequence_id.to_string(), values }
}

/// Linearizes the matching triangle (g/2^{n-1} for A008301, h for A125053)
/// row by row and compares against the snapshot prefix, reporting every
/// term up to `n_terms`.
pub fn cross_check(sequence_id: &str, n_terms: usize) -> Result<VerifyReport, String> {
    let snapshot = OeisSnapshot::load(sequence_id)
        .ok_or_else(|| format!("unknown sequence id {:?}", sequence_id))?;
    if snapshot.len() < n_terms {
        return Err(format!(
            "snapshot {} holds {} terms, {} requested",
            sequence_id,
            snapshot.len(),
            n_terms
        ));
    }
    // terms 1..=T need rows 1..=n with n^2 >= T (rows hold 2n-1 entries)
    let mut rows_needed = 1;
    while rows_needed * rows_needed < n_terms {
        rows_needed += 1;
    }
    let computed: Vec<BigInt> = match sequence_id {
        A008301 => {
            let g = solve_forward(Kind::Tan, rows_needed);
            (1..=rows_needed)
                .flat_map(|n| {
                    let divisor = BigInt::one() << (n - 1);
                    g.row(n)
                        .iter()
                        .map(|e| e.to_integer() / &divisor)
                        .collect::<Vec<_>>()
                })
                .collect()
        }
        A125053 => {
            let h = solve_forward(Kind::Sec, rows_needed);
            (1..=rows_needed)
                .flat_map(|n| h.row(n).iter().map(|e| e.to_integer()).collect::<Vec<_>>())
                .collect()
        }
        _ => unreachable!(),
    };
    let mut report = VerifyReport::new(&format!("oeis-{}", sequence_id));
    for t in 0..n_terms {
        let (index, expected) = &snapshot.values[t];
        report.push(
            &format!("{} term", sequence_id),
            format!("index={}", index),
            computed[t].to_string(),
            expected.to_string(),
        );
        if !report.all_pass() {
            break; // report the first mismatch and stop
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snapshots_parse() {
        let a = OeisSnapshot::load(A008301).unwrap();
        assert!(a.len() >= 100);
        let first: Vec<i64> = a.values[..9]
            .iter()
            .map(|(_, v)| i64::try_from(v).unwrap())
            .collect();
        assert_eq!(first, vec![1, 0, 1, 0, 0, 1, 2, 1, 0]);

        let b = OeisSnapshot::load(A125053).unwrap();
        let first: Vec<i64> = b.values[..9]
            .iter()
            .map(|(_, v)| i64::try_from(v).unwrap())
            .collect();
        assert_eq!(first, vec![1, 1, 3, 1, 5, 15, 21, 15, 5]);

        assert!(OeisSnapshot::load("A000001").is_none());
    }

    #[test]
    fn cross_checks_pass() {
        for id in [A008301, A125053] {
            let report = cross_check(id, 100).unwrap();
            assert!(report.all_pass(), "{}", id);
            assert_eq!(report.summary.pass, 100);
        }
    }

    #[test]
    fn over_long_request_is_an_error() {
        assert!(cross_check(A008301, 100_000).is_err());
    }
}
