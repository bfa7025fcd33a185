//! Bundled curve files.

/// The four worked examples.
pub const EXAMPLES: &str = include_str!("../fixtures/examples.curves");

/// One curve per table row, each followed by its expected torsion group,
/// squareness (`yes`/`no`) and mod-2 image.
pub const TABLE_ROWS: &str = include_str!("../fixtures/table_rows.curves");
