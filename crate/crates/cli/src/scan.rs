//! Batch tallies of (torsion group, discriminant squareness).

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use sqdisc_core::{Rat, TorsionShape};

use crate::analysis::analyze;
use crate::records::{CurveRecord, Diagnostic};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub counts: BTreeMap<(TorsionShape, bool), u64>,
    pub total: u64,
    pub proportions: BTreeMap<(TorsionShape, bool), Rat>,
    pub diagnostics: Vec<Diagnostic>,
}

#[derive(Debug, thiserror::Error)]
#[error("nothing to scan")]
pub struct EmptyScan;

#[derive(Serialize)]
struct RowJson {
    torsion: String,
    square: bool,
    count: u64,
    proportion: String,
}

#[derive(Serialize)]
struct DiagnosticJson {
    line: usize,
    message: String,
}

#[derive(Serialize)]
struct ReportJson {
    total: u64,
    rows: Vec<RowJson>,
    diagnostics: Vec<DiagnosticJson>,
}

impl ScanReport {
    pub fn to_json(&self) -> String {
        let rows = self
            .counts
            .iter()
            .map(|(&(shape, square), &count)| RowJson {
                torsion: shape.to_string(),
                square,
                count,
                proportion: self.proportions[&(shape, square)].to_string(),
            })
            .collect();
        let diagnostics = self
            .diagnostics
            .iter()
            .map(|d| DiagnosticJson { line: d.line, message: d.message.clone() })
            .collect();
        serde_json::to_string_pretty(&ReportJson { total: self.total, rows, diagnostics })
            .expect("plain data serializes")
    }

    pub fn text(&self) -> String {
        let mut out = format!("{:<8} {:<7} {:>8}  proportion\n", "torsion", "square", "count");
        for (&(shape, square), count) in &self.counts {
            out += &format!(
                "{:<8} {:<7} {:>8}  {}\n",
                shape.to_string(),
                if square { "yes" } else { "no" },
                count,
                self.proportions[&(shape, square)]
            );
        }
        out += &format!("total {}\n", self.total);
        for d in &self.diagnostics {
            out += &format!("skipped {d}\n");
        }
        out
    }
}

/// Tallies every record in parallel; per-record failures become
/// diagnostics. `diagnostics` carries over earlier (parse) problems.
pub fn run_scan(records: &[CurveRecord], diagnostics: Vec<Diagnostic>) -> Result<ScanReport, EmptyScan> {
    if records.is_empty() {
        return Err(EmptyScan);
    }
    let results: Vec<_> = records
        .par_iter()
        .map(|r| {
            analyze(&r.model())
                .map(|a| (a.torsion, a.is_square()))
                .map_err(|e| Diagnostic { line: r.source_line, message: e.to_string() })
        })
        .collect();
    let mut counts = BTreeMap::new();
    let mut diagnostics = diagnostics;
    for r in results {
        match r {
            Ok(key) => *counts.entry(key).or_insert(0u64) += 1,
            Err(d) => diagnostics.push(d),
        }
    }
    diagnostics.sort_by_key(|d| d.line);
    let total: u64 = counts.values().sum();
    let proportions = counts
        .iter()
        .map(|(&k, &c)| (k, Rat::new(c.into(), total.max(1).into())))
        .collect();
    Ok(ScanReport { counts, total, proportions, diagnostics })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::records::parse_curves;

    #[test]
    fn examples_fixture() {
        let p = parse_curves(crate::fixtures::EXAMPLES);
        let r = run_scan(&p.records, p.diagnostics).unwrap();
        let key = |s: &str, sq| (s.parse::<TorsionShape>().unwrap(), sq);
        assert_eq!(r.total, 4);
        assert_eq!(r.counts[&key("C2xC2", true)], 1);
        assert_eq!(r.counts[&key("C6", false)], 1);
        assert_eq!(r.counts[&key("C1", false)], 1);
        assert_eq!(r.counts[&key("C1", true)], 1);
        assert_eq!(r.proportions.values().fold(Rat::from_integer(0.into()), |a, b| a + b), Rat::from_integer(1.into()));
    }

    #[test]
    fn malformed_line_is_diagnosed() {
        let p = parse_curves("0 0 0 -1 0\n0 0 zero 1 0\n");
        let r = run_scan(&p.records, p.diagnostics).unwrap();
        assert_eq!(r.total, 1);
        assert_eq!(r.diagnostics.len(), 1);
        assert!(run_scan(&[], Vec::new()).is_err());
    }

    #[test]
    fn deterministic_json() {
        let p = parse_curves(crate::fixtures::TABLE_ROWS);
        let a = run_scan(&p.records, p.diagnostics.clone()).unwrap().to_json();
        let b = run_scan(&p.records, p.diagnostics).unwrap().to_json();
        assert_eq!(a, b);
    }
}
