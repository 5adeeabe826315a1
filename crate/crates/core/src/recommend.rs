//! Review-time recommendations: non-Pythonic code added by a diff, paired with
//! the Pythonic form from the catalog.

use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::catalog::{Catalog, CatalogError, IdiomType, Label};
use crate::config::{ConfigError, ThresholdConfig};
use crate::detect::Matcher;
use crate::diff::{extract_from_diff, DiffError};
use crate::representation::LEVELS;
use crate::snippet::{extract_all_widths, DEFAULT_WINDOW};

#[derive(Debug, Error)]
pub enum RecommendError {
    #[error(transparent)]
    Diff(#[from] DiffError),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Recommendation {
    pub file_path: String,
    pub start_line: usize,
    pub end_line: usize,
    pub idiom_type: IdiomType,
    /// The matched non-Pythonic catalog entry.
    pub matched_entry: String,
    /// Its Pythonic counterpart.
    pub suggested_entry: String,
    pub description: String,
    pub suggestion: String,
    pub scores: [u8; LEVELS],
    pub score: f64,
}

/// Finds non-Pythonic idioms among the lines a unified diff adds. Results are
/// ordered by file and start line.
pub fn analyze_diff(
    diff: &str,
    catalog: &Catalog,
    config: &ThresholdConfig,
) -> Result<Vec<Recommendation>, RecommendError> {
    config.validate()?;
    let runs = extract_from_diff(diff)?;
    let mut windows = Vec::new();
    for run in &runs {
        for mut w in extract_all_widths(&run.source_text, &run.file_path, DEFAULT_WINDOW) {
            w.start_line += run.start_line - 1;
            w.end_line += run.start_line - 1;
            w.origin = run.origin;
            windows.push(w);
        }
    }
    if windows.is_empty() {
        return Ok(Vec::new());
    }

    let matcher = Matcher::new(catalog, &[Label::NPy]);
    let mut recs = Vec::new();
    for finding in matcher.find_in_windows(&windows, config) {
        let matched = catalog.get(&finding.entry_id).ok_or_else(|| CatalogError::NotFound(finding.entry_id.clone()))?;
        let suggested = catalog.counterpart(&matched.id)?;
        recs.push(Recommendation {
            file_path: finding.file_path,
            start_line: finding.start_line,
            end_line: finding.end_line,
            idiom_type: finding.idiom_type,
            matched_entry: matched.id.clone(),
            suggested_entry: suggested.id.clone(),
            description: matched.description.clone(),
            suggestion: suggested.snippet.clone(),
            scores: finding.scores,
            score: finding.score,
        });
    }
    Ok(recs)
}

/// Markdown review comment with one section per recommendation. No
/// recommendations render as the empty string.
pub fn render_comment(recs: &[Recommendation]) -> String {
    let mut out = String::new();
    for (i, rec) in recs.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let lines = if rec.start_line == rec.end_line {
            format!("line {}", rec.start_line)
        } else {
            format!("lines {}-{}", rec.start_line, rec.end_line)
        };
        let _ = writeln!(out, "### `{}`, {lines}", rec.file_path);
        let _ = writeln!(out);
        let _ = writeln!(out, "**Idiom:** {}", rec.idiom_type);
        let _ = writeln!(out);
        let _ = writeln!(out, "{}", rec.description.trim());
        let _ = writeln!(out);
        let _ = writeln!(out, "Pythonic alternative:");
        let _ = writeln!(out);
        let _ = writeln!(out, "```python");
        out.push_str(&rec.suggestion);
        if !rec.suggestion.ends_with('\n') {
            out.push('\n');
        }
        let _ = writeln!(out, "```");
    }
    out
}
