//! Library side of the `sqdisc` command: curve-file parsing, per-curve
//! reports, batch scans and the verification suites.

pub mod analysis;
pub mod fixtures;
pub mod records;
pub mod scan;
pub mod verify;

pub use analysis::{analyze, table_row_consistent, Analysis, CurveReport};
pub use records::{parse_curve_file, parse_curves, CurveRecord, Diagnostic, ParsedCurves};
pub use scan::{run_scan, ScanReport};
pub use verify::{verify_suite, Suite, SuiteReport};
