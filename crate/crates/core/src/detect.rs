//! Locating catalog idioms inside source code.
//!
//! Code is cut into windows and indexed; each catalog entry is then used as
//! the query. The n-gram token ratio measures how much of the query occurs in
//! the candidate, so a window scores high when it contains the idiom, however
//! much unrelated code surrounds it.

use std::collections::HashMap;

use log::warn;
use serde::Serialize;

use crate::catalog::{Catalog, IdiomType, Label};
use crate::config::ThresholdConfig;
use crate::index::{Index, PreparedQuery};
use crate::representation::LEVELS;
use crate::snippet::{extract_all_widths, Snippet, SnippetOrigin, DEFAULT_WINDOW};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Finding {
    pub file_path: String,
    pub start_line: usize,
    pub end_line: usize,
    pub entry_id: String,
    pub idiom_type: IdiomType,
    pub label: Label,
    pub scores: [u8; LEVELS],
    pub score: f64,
}

impl Finding {
    fn span_len(&self) -> usize {
        self.end_line - self.start_line + 1
    }

    fn overlaps(&self, other: &Finding) -> bool {
        self.start_line <= other.end_line && other.start_line <= self.end_line
    }
}

impl Index {
    /// Index of catalog entries keyed by entry id.
    pub fn from_catalog(catalog: &Catalog, ngram_n: usize) -> Index {
        Index::build(
            catalog.entries.iter().map(|e| {
                let snippet = Snippet::new(e.snippet.clone(), e.snippet_file.clone(), 1, SnippetOrigin::Catalog);
                (e.id.clone(), snippet)
            }),
            ngram_n,
        )
    }
}

/// Catalog entries prepared as queries.
#[derive(Debug, Clone)]
pub struct Matcher<'a> {
    catalog: &'a Catalog,
    queries: Vec<(usize, PreparedQuery)>,
    max_window: usize,
}

impl<'a> Matcher<'a> {
    /// Prepares every entry whose label is in `labels`.
    pub fn new(catalog: &'a Catalog, labels: &[Label]) -> Self {
        let mut queries = Vec::new();
        for (i, entry) in catalog.entries.iter().enumerate() {
            if !labels.contains(&entry.label) {
                continue;
            }
            match PreparedQuery::new(&entry.snippet) {
                Ok(q) => queries.push((i, q)),
                Err(err) => warn!("catalog entry {} is unusable: {err}", entry.id),
            }
        }
        Matcher { catalog, queries, max_window: DEFAULT_WINDOW }
    }

    pub fn with_max_window(mut self, max_window: usize) -> Self {
        self.max_window = max_window.max(1);
        self
    }

    pub fn catalog(&self) -> &'a Catalog {
        self.catalog
    }

    /// Findings in one file's source. `first_line` is the line number of the
    /// first line of `source` within the file.
    pub fn find_in_source(
        &self,
        source: &str,
        path: &str,
        first_line: usize,
        config: &ThresholdConfig,
    ) -> Vec<Finding> {
        let mut windows = extract_all_widths(source, path, self.max_window);
        for w in &mut windows {
            w.start_line += first_line - 1;
            w.end_line += first_line - 1;
        }
        self.find_in_windows(&windows, config)
    }

    /// Findings among pre-cut windows, tightened so that overlapping matches
    /// of the same idiom type and label in one file collapse to the best one,
    /// then with label conflicts resolved.
    pub fn find_in_windows(&self, windows: &[Snippet], config: &ThresholdConfig) -> Vec<Finding> {
        let index = Index::build(windows.iter().map(|w| (w.key(), w.clone())), config.ngram_n);
        let mut raw = Vec::new();
        for (entry_idx, query) in &self.queries {
            let entry = &self.catalog.entries[*entry_idx];
            let hits = match index.search_prepared(query, config) {
                Ok(hits) => hits,
                Err(err) => {
                    warn!("search for {} failed: {err}", entry.id);
                    continue;
                }
            };
            for hit in hits {
                let doc = &index.doc(hit.doc).snippet;
                raw.push(Finding {
                    file_path: doc.file_path.clone(),
                    start_line: doc.start_line,
                    end_line: doc.end_line,
                    entry_id: entry.id.clone(),
                    idiom_type: entry.idiom_type,
                    label: entry.label,
                    scores: hit.scores,
                    score: hit.aggregate,
                });
            }
        }
        resolve_labels(tighten(raw))
    }
}

/// Greedy selection: best score first, then the shortest span, earliest
/// start and entry id. A finding is kept unless it overlaps an already kept
/// finding with the same file, idiom type and label. The result is sorted by
/// file, span, idiom type and label.
pub fn tighten(mut findings: Vec<Finding>) -> Vec<Finding> {
    findings.sort_by(|a, b| {
        b.score
            .total_cmp(&a.score)
            .then(a.span_len().cmp(&b.span_len()))
            .then(a.start_line.cmp(&b.start_line))
            .then_with(|| a.entry_id.cmp(&b.entry_id))
    });
    let mut kept: HashMap<(String, IdiomType, Label), Vec<Finding>> = HashMap::new();
    for f in findings {
        let group = kept.entry((f.file_path.clone(), f.idiom_type, f.label)).or_default();
        if group.iter().all(|k| !k.overlaps(&f)) {
            group.push(f);
        }
    }
    let mut out: Vec<Finding> = kept.into_values().flatten().collect();
    out.sort_by(|a, b| {
        (a.file_path.as_str(), a.start_line, a.end_line, a.idiom_type.as_str(), a.label.as_str()).cmp(&(
            b.file_path.as_str(),
            b.start_line,
            b.end_line,
            b.idiom_type.as_str(),
            b.label.as_str(),
        ))
    });
    out
}

/// Drops a finding when an overlapping finding of the same file and idiom
/// type carries the opposite label and a strictly higher score. A span is
/// either the Pythonic or the non-Pythonic form of an idiom; short queries
/// share enough tokens with their counterparts to match both. Exact ties keep
/// both findings. Input order is preserved.
pub fn resolve_labels(findings: Vec<Finding>) -> Vec<Finding> {
    let beaten: Vec<bool> = findings
        .iter()
        .map(|f| {
            findings.iter().any(|g| {
                g.file_path == f.file_path
                    && g.idiom_type == f.idiom_type
                    && g.label != f.label
                    && g.overlaps(f)
                    && g.score > f.score
            })
        })
        .collect();
    findings.into_iter().zip(beaten).filter(|(_, b)| !b).map(|(f, _)| f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{IdiomEntry, Provenance};
    use crate::similarity::Measure;

    fn entry(id: &str, t: IdiomType, label: Label, counterpart: &str, snippet: &str) -> IdiomEntry {
        IdiomEntry {
            id: id.into(),
            idiom_type: t,
            label,
            counterpart_id: counterpart.into(),
            description: String::new(),
            snippet: snippet.into(),
            snippet_file: format!("{id}.py"),
            provenance: Provenance::Original,
        }
    }

    fn swap_catalog() -> Catalog {
        Catalog::from_entries(
            vec![
                entry("swap-npy", IdiomType::VariableSwapping, Label::NPy, "swap-py", "temp = a\na = b\nb = temp\n"),
                entry("swap-py", IdiomType::VariableSwapping, Label::Py, "swap-npy", "a, b = b, a\n"),
            ],
            "mem",
        )
    }

    #[test]
    fn finds_the_tightest_span() {
        let catalog = swap_catalog();
        let matcher = Matcher::new(&catalog, &[Label::NPy]);
        let src = "a = 1\nb = 2\ntemp = a\na = b\nb = temp\nprint(a, b)\n";
        let config = ThresholdConfig::uniform(Measure::Ntr, 40);
        let found = matcher.find_in_source(src, "f.py", 10, &config);
        assert_eq!(found.len(), 1);
        assert_eq!((found[0].start_line, found[0].end_line), (12, 14));
        assert_eq!(found[0].entry_id, "swap-npy");
        assert_eq!(found[0].scores, [100; 4]);
    }

    #[test]
    fn label_filter_applies() {
        let catalog = swap_catalog();
        let matcher = Matcher::new(&catalog, &[Label::Py]);
        let config = ThresholdConfig::uniform(Measure::Ntr, 40);
        assert!(matcher.find_in_source("temp = a\na = b\nb = temp\n", "f.py", 1, &config).is_empty());
    }

    fn finding(start: usize, end: usize, score: f64, t: IdiomType) -> Finding {
        Finding {
            file_path: "f.py".into(),
            start_line: start,
            end_line: end,
            entry_id: "e".into(),
            idiom_type: t,
            label: Label::NPy,
            scores: [0; 4],
            score,
        }
    }

    #[test]
    fn tighten_keeps_disjoint_and_other_types() {
        let out = tighten(vec![
            finding(1, 5, 100.0, IdiomType::VariableSwapping),
            finding(3, 4, 100.0, IdiomType::VariableSwapping),
            finding(4, 9, 90.0, IdiomType::VariableSwapping),
            finding(6, 7, 50.0, IdiomType::VariableSwapping),
            finding(3, 4, 60.0, IdiomType::ListComprehension),
            Finding { label: Label::Py, ..finding(1, 9, 30.0, IdiomType::VariableSwapping) },
        ]);
        let spans: Vec<_> = out.iter().map(|f| (f.start_line, f.end_line, f.idiom_type, f.label)).collect();
        assert_eq!(
            spans,
            vec![
                (1, 9, IdiomType::VariableSwapping, Label::Py),
                (3, 4, IdiomType::ListComprehension, Label::NPy),
                (3, 4, IdiomType::VariableSwapping, Label::NPy),
                (6, 7, IdiomType::VariableSwapping, Label::NPy),
            ]
        );
    }

    #[test]
    fn label_conflicts_go_to_the_higher_score() {
        let npy = finding(1, 3, 100.0, IdiomType::VariableSwapping);
        let py = Finding { label: Label::Py, ..finding(1, 2, 70.0, IdiomType::VariableSwapping) };
        let far = Finding { label: Label::Py, ..finding(8, 8, 50.0, IdiomType::VariableSwapping) };
        let other = Finding { label: Label::Py, ..finding(2, 2, 50.0, IdiomType::Enumerate) };
        let out = resolve_labels(vec![npy.clone(), py, far.clone(), other.clone()]);
        assert_eq!(out, vec![npy.clone(), far, other]);

        let tied = Finding { label: Label::Py, ..finding(2, 3, 100.0, IdiomType::VariableSwapping) };
        assert_eq!(resolve_labels(vec![npy.clone(), tied.clone()]), vec![npy, tied]);
    }
}
