//! Hand-transcribed reference values for small weights.
//!
//! The table lives in `data/golden.txt` and is compiled in. Values there were
//! read off printed drawings, so they are checked rather than trusted.

use crate::error::{Error, Result};
use crate::graph::{parse_graph, MultiDigraph};
use crate::rational::Rational;

const GOLDEN_TXT: &str = include_str!("../data/golden.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenEntry {
    pub label: String,
    pub weight: i64,
    pub graph: MultiDigraph,
    pub z: Rational,
}

/// Parse the fixture format: `[weight N]` headers, `label | matrix | z`
/// lines, `#` comments.
pub fn parse_golden(text: &str) -> Result<Vec<GoldenEntry>> {
    let mut out = Vec::new();
    let mut weight: Option<i64> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fixture = |msg: String| Error::Fixture { line: line_no, msg };
        if let Some(rest) = line.strip_prefix('[') {
            let inner = rest
                .strip_suffix(']')
                .and_then(|s| s.trim().strip_prefix("weight"))
                .ok_or_else(|| fixture(format!("bad section header `{line}`")))?;
            weight = Some(
                inner
                    .trim()
                    .parse()
                    .map_err(|_| fixture(format!("bad weight in `{line}`")))?,
            );
            continue;
        }
        let w = weight.ok_or_else(|| fixture("entry before any [weight N] header".into()))?;
        let parts: Vec<&str> = line.split('|').map(str::trim).collect();
        let [label, matrix, value] = parts[..] else {
            return Err(fixture(format!("expected 3 fields, got {}", parts.len())));
        };
        let graph = parse_graph(matrix).map_err(|e| fixture(e.to_string()))?;
        if graph.weight() != w {
            return Err(fixture(format!(
                "{label} has weight {}, section says {w}",
                graph.weight()
            )));
        }
        let z: Rational = value.parse().map_err(|e: Error| fixture(e.to_string()))?;
        out.push(GoldenEntry {
            label: label.to_string(),
            weight: w,
            graph,
            z,
        });
    }
    Ok(out)
}

/// The compiled-in fixture table.
pub fn golden_entries() -> Vec<GoldenEntry> {
    parse_golden(GOLDEN_TXT).expect("bundled golden table parses")
}

pub fn golden_for_weight(k: i64) -> Vec<GoldenEntry> {
    golden_entries()
        .into_iter()
        .filter(|e| e.weight == k)
        .collect()
}
