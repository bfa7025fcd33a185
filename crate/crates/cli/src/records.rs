//! Curve files: one curve per line, an optional non-numeric label, then the
//! five a-invariants `a1 a2 a3 a4 a6`. Anything after them is kept as
//! trailing tokens; `#` starts a comment.

use std::fmt;
use std::path::Path;

use sqdisc_core::{Int, LongModel, Rat};

/// A parsed line. The invariants always describe a nonsingular curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveRecord {
    pub label: Option<String>,
    pub a: [Int; 5],
    pub trailing: Vec<String>,
    pub source_line: usize,
}

impl CurveRecord {
    pub fn model(&self) -> LongModel {
        let [a1, a2, a3, a4, a6] = self.a.clone().map(Rat::from_integer);
        LongModel::new(a1, a2, a3, a4, a6).expect("records are nonsingular")
    }

    pub fn name(&self) -> String {
        match &self.label {
            Some(l) => l.clone(),
            None => format!("line {}", self.source_line),
        }
    }
}

impl fmt::Display for CurveRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.label.iter().cloned().collect();
        parts.extend(self.a.iter().map(Int::to_string));
        parts.extend(self.trailing.iter().cloned());
        f.write_str(&parts.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParsedCurves {
    pub records: Vec<CurveRecord>,
    pub diagnostics: Vec<Diagnostic>,
}

#[derive(Debug, thiserror::Error)]
pub enum RecordsError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("no valid curve records ({0} diagnostics)")]
    Empty(usize),
}

fn parse_line(line: &str, number: usize) -> Result<Option<CurveRecord>, String> {
    let content = line.split('#').next().unwrap_or("");
    let mut tokens = content.split_whitespace().peekable();
    let Some(first) = tokens.peek() else {
        return Ok(None);
    };
    let label = if first.parse::<Int>().is_err() {
        tokens.next().map(str::to_owned)
    } else {
        None
    };
    let mut a: Vec<Int> = Vec::with_capacity(5);
    for _ in 0..5 {
        let tok = tokens
            .next()
            .ok_or_else(|| format!("expected 5 integers, found {}", a.len()))?;
        a.push(tok.parse().map_err(|_| format!("not an integer: {tok:?}"))?);
    }
    let a: [Int; 5] = a.try_into().expect("five entries");
    let [a1, a2, a3, a4, a6] = a.clone().map(Rat::from_integer);
    if LongModel::new(a1, a2, a3, a4, a6).is_err() {
        return Err("singular curve".into());
    }
    Ok(Some(CurveRecord {
        label,
        a,
        trailing: tokens.map(str::to_owned).collect(),
        source_line: number,
    }))
}

/// Parses curve text; malformed or singular lines become diagnostics.
pub fn parse_curves(text: &str) -> ParsedCurves {
    let mut out = ParsedCurves::default();
    for (i, line) in text.lines().enumerate() {
        match parse_line(line, i + 1) {
            Ok(Some(r)) => out.records.push(r),
            Ok(None) => {}
            Err(message) => out.diagnostics.push(Diagnostic { line: i + 1, message }),
        }
    }
    out
}

pub fn parse_curve_file(path: &Path) -> Result<ParsedCurves, RecordsError> {
    let text = std::fs::read_to_string(path).map_err(|source| RecordsError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let parsed = parse_curves(&text);
    if parsed.records.is_empty() {
        return Err(RecordsError::Empty(parsed.diagnostics.len()));
    }
    Ok(parsed)
}
