//! Detection mode: idiom occurrences across the first-parent history of a git
//! repository.

use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};

use git2::{ObjectType, Oid, Repository, TreeWalkMode, TreeWalkResult};
use log::{debug, info, warn};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{Catalog, IdiomType, Label};
use crate::config::{ConfigError, ThresholdConfig};
use crate::detect::{Finding, Matcher};
use crate::lexer::tokenize;
use crate::snippet::is_python_path;

#[derive(Debug, Error)]
pub enum HistoryError {
    #[error("{path} is not a git repository: {source}")]
    NotARepository {
        path: PathBuf,
        #[source]
        source: git2::Error,
    },
    #[error("repository {0} has no commits")]
    NoCommits(PathBuf),
    #[error("git error: {0}")]
    Git(#[from] git2::Error),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("cannot start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

/// One detected idiom in one file of one commit. Field order is the
/// serialized order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Occurrence {
    pub commit_index: usize,
    pub commit_id: String,
    pub file_path: String,
    pub idiom_type: IdiomType,
    pub label: Label,
    pub start_line: usize,
    pub end_line: usize,
    pub score: f64,
}

/// A file that could not be scanned.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanWarning {
    pub commit_index: Option<usize>,
    pub file_path: String,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct HistoryDataset {
    pub commit_count: usize,
    pub occurrences: Vec<Occurrence>,
    pub warnings: Vec<ScanWarning>,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ScanReport {
    pub findings: Vec<Finding>,
    pub warnings: Vec<ScanWarning>,
}

fn scan_file(matcher: &Matcher, path: &str, text: &str, config: &ThresholdConfig) -> Result<Vec<Finding>, String> {
    if let Err(err) = tokenize(text) {
        return Err(format!("does not lex: {err}"));
    }
    Ok(matcher.find_in_source(text, path, 1, config))
}

/// Scans `(path, text)` pairs with every catalog entry as a query. Non-Python
/// paths are ignored and unlexable files are skipped with a warning. Findings
/// are ordered by file, then span.
pub fn scan_tree(
    files: &[(String, String)],
    catalog: &Catalog,
    config: &ThresholdConfig,
) -> Result<ScanReport, ConfigError> {
    config.validate()?;
    let matcher = Matcher::new(catalog, &[Label::Py, Label::NPy]);
    let mut report = ScanReport::default();
    let mut sorted: Vec<&(String, String)> = files.iter().filter(|(p, _)| is_python_path(p)).collect();
    sorted.sort_by(|a, b| a.0.cmp(&b.0));
    for (path, text) in sorted {
        match scan_file(&matcher, path, text, config) {
            Ok(found) => report.findings.extend(found),
            Err(message) => {
                warn!("{path}: {message}");
                report.warnings.push(ScanWarning { commit_index: None, file_path: path.clone(), message });
            }
        }
    }
    Ok(report)
}

struct CommitFiles {
    id: String,
    /// (path, blob id), sorted by path.
    files: Vec<(String, Oid)>,
}

fn first_parent_chain(repo: &Repository) -> Result<Vec<git2::Commit<'_>>, git2::Error> {
    let mut chain = Vec::new();
    let mut commit = repo.head()?.peel_to_commit()?;
    loop {
        let parent = if commit.parent_count() > 0 { Some(commit.parent(0)?) } else { None };
        chain.push(commit);
        match parent {
            Some(p) => commit = p,
            None => break,
        }
    }
    chain.reverse();
    Ok(chain)
}

fn python_blobs(commit: &git2::Commit<'_>) -> Result<Vec<(String, Oid)>, git2::Error> {
    let tree = commit.tree()?;
    let mut files = Vec::new();
    tree.walk(TreeWalkMode::PreOrder, |dir, entry| {
        if entry.kind() == Some(ObjectType::Blob) {
            if let Some(name) = entry.name() {
                let path = format!("{dir}{name}");
                if is_python_path(&path) {
                    files.push((path, entry.id()));
                }
            }
        }
        TreeWalkResult::Ok
    })?;
    files.sort();
    Ok(files)
}

/// Walks the first-parent chain from the root commit to `HEAD` and scans the
/// Python files of every commit. Each distinct `(path, blob)` pair is scanned
/// once, on up to `jobs` worker threads; the result does not depend on `jobs`.
pub fn walk_history(
    repo_path: &Path,
    catalog: &Catalog,
    config: &ThresholdConfig,
    jobs: usize,
) -> Result<HistoryDataset, HistoryError> {
    config.validate()?;
    let repo = Repository::open(repo_path)
        .map_err(|source| HistoryError::NotARepository { path: repo_path.to_path_buf(), source })?;
    if repo.head().is_err() || repo.is_empty()? {
        return Err(HistoryError::NoCommits(repo_path.to_path_buf()));
    }

    let chain = first_parent_chain(&repo)?;
    info!("scanning {} commits", chain.len());
    let mut commits = Vec::with_capacity(chain.len());
    for commit in &chain {
        commits.push(CommitFiles { id: commit.id().to_string(), files: python_blobs(commit)? });
    }

    // Read every distinct blob once. Blob ids fix the content, so a
    // (path, blob) pair always scans the same way.
    let mut work: BTreeMap<(String, Oid), Result<String, String>> = BTreeMap::new();
    for c in &commits {
        for (path, oid) in &c.files {
            let key = (path.clone(), *oid);
            if work.contains_key(&key) {
                continue;
            }
            let text = match repo.find_blob(*oid) {
                Ok(blob) => {
                    String::from_utf8(blob.content().to_vec()).map_err(|_| "blob is not valid UTF-8".to_string())
                }
                Err(err) => Err(format!("unreadable blob {oid}: {}", err.message())),
            };
            work.insert(key, text);
        }
    }
    debug!("{} distinct file versions", work.len());

    let matcher = Matcher::new(catalog, &[Label::Py, Label::NPy]);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build()?;
    let items: Vec<_> = work.iter().collect();
    let scanned: Vec<Result<Vec<Finding>, String>> = pool.install(|| {
        items
            .par_iter()
            .map(|((path, _), text)| match text {
                Ok(text) => scan_file(&matcher, path, text, config),
                Err(message) => Err(message.clone()),
            })
            .collect()
    });
    let results: HashMap<&(String, Oid), &Result<Vec<Finding>, String>> =
        items.iter().map(|(k, _)| *k).zip(scanned.iter()).collect();

    let mut dataset = HistoryDataset { commit_count: commits.len(), ..Default::default() };
    for (commit_index, c) in commits.iter().enumerate() {
        for (path, oid) in &c.files {
            match results[&(path.clone(), *oid)] {
                Ok(findings) => dataset.occurrences.extend(findings.iter().map(|f| Occurrence {
                    commit_index,
                    commit_id: c.id.clone(),
                    file_path: f.file_path.clone(),
                    idiom_type: f.idiom_type,
                    label: f.label,
                    start_line: f.start_line,
                    end_line: f.end_line,
                    score: f.score,
                })),
                Err(message) => {
                    warn!("commit {commit_index} {path}: {message}");
                    dataset.warnings.push(ScanWarning {
                        commit_index: Some(commit_index),
                        file_path: path.clone(),
                        message: message.clone(),
                    });
                }
            }
        }
    }
    sort_occurrences(&mut dataset.occurrences);
    Ok(dataset)
}

/// Orders by commit, file, span, idiom type and label.
pub fn sort_occurrences(occurrences: &mut [Occurrence]) {
    occurrences.sort_by(|a, b| {
        (a.commit_index, a.file_path.as_str(), a.start_line, a.end_line, a.idiom_type, a.label).cmp(&(
            b.commit_index,
            b.file_path.as_str(),
            b.start_line,
            b.end_line,
            b.idiom_type,
            b.label,
        ))
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{IdiomEntry, Provenance};

    fn entry(id: &str, label: Label, counterpart: &str, snippet: &str) -> IdiomEntry {
        IdiomEntry {
            id: id.into(),
            idiom_type: IdiomType::VariableSwapping,
            label,
            counterpart_id: counterpart.into(),
            description: String::new(),
            snippet: snippet.into(),
            snippet_file: format!("{id}.py"),
            provenance: Provenance::Original,
        }
    }

    fn catalog() -> Catalog {
        Catalog::from_entries(
            vec![
                entry("swap-npy", Label::NPy, "swap-py", "temp = a\na = b\nb = temp\n"),
                entry("swap-py", Label::Py, "swap-npy", "a, b = b, a\n"),
            ],
            "mem",
        )
    }

    #[test]
    fn scan_tree_labels_by_query() {
        let files = vec![
            ("b.py".to_string(), "x = 0\na, b = b, a\n".to_string()),
            ("a.py".to_string(), "temp = a\na = b\nb = temp\n".to_string()),
            ("notes.txt".to_string(), "temp = a\na = b\nb = temp\n".to_string()),
        ];
        let report = scan_tree(&files, &catalog(), &ThresholdConfig::detection_default()).unwrap();
        let got: Vec<_> =
            report.findings.iter().map(|f| (f.file_path.as_str(), f.label, f.start_line, f.end_line)).collect();
        assert_eq!(got, vec![("a.py", Label::NPy, 1, 3), ("b.py", Label::Py, 2, 2)]);
        assert!(report.warnings.is_empty());
    }

    #[test]
    fn scan_tree_warns_on_unlexable_files() {
        let files = vec![("bad.py".to_string(), "s = 'open\n".to_string())];
        let report = scan_tree(&files, &catalog(), &ThresholdConfig::detection_default()).unwrap();
        assert!(report.findings.is_empty());
        assert_eq!(report.warnings.len(), 1);
        assert_eq!(report.warnings[0].file_path, "bad.py");
    }

    #[test]
    fn empty_tree() {
        let report = scan_tree(&[], &catalog(), &ThresholdConfig::detection_default()).unwrap();
        assert_eq!(report, ScanReport::default());
    }

    #[test]
    fn not_a_repository() {
        let dir = tempfile::tempdir().unwrap();
        let err = walk_history(dir.path(), &catalog(), &ThresholdConfig::detection_default(), 1).unwrap_err();
        assert!(matches!(err, HistoryError::NotARepository { .. }));
    }

    #[test]
    fn occurrence_field_order() {
        let o = Occurrence {
            commit_index: 0,
            commit_id: "abc".into(),
            file_path: "f.py".into(),
            idiom_type: IdiomType::VariableSwapping,
            label: Label::NPy,
            start_line: 1,
            end_line: 3,
            score: 100.0,
        };
        assert_eq!(
            serde_json::to_string(&o).unwrap(),
            r#"{"commit_index":0,"commit_id":"abc","file_path":"f.py","idiom_type":"variable-swapping","label":"NPy","start_line":1,"end_line":3,"score":100.0}"#
        );
    }
}
