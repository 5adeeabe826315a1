//! Retrieval-accuracy evaluation: MAP, MRR, query recall and overall recall
//! over a labeled corpus, plus threshold-configuration sweeps.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::{self, Write as _};
use std::fs;
use std::path::{Path, PathBuf};

use log::debug;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::Catalog;
use crate::config::{ConfigError, NamedConfig, ThresholdConfig};
use crate::index::{Index, PreparedQuery, SearchError};
use crate::similarity::Measure;
use crate::snippet::{extract_from_source, DEFAULT_WINDOW};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricError {
    #[error("query with empty relevant set")]
    EmptyRelevantSet,
    #[error("no query results to average")]
    NoResults,
}

/// Average precision of a ranking against a non-empty relevant set.
pub fn average_precision(ranked: &[String], relevant: &BTreeSet<String>) -> Result<f64, MetricError> {
    if relevant.is_empty() {
        return Err(MetricError::EmptyRelevantSet);
    }
    let mut hits = 0usize;
    let mut sum = 0.0;
    for (k, item) in ranked.iter().enumerate() {
        if relevant.contains(item) {
            hits += 1;
            sum += hits as f64 / (k + 1) as f64;
        }
    }
    Ok(sum / relevant.len() as f64)
}

/// `1/k` for the first relevant item at rank `k`, or 0 when none is ranked.
pub fn reciprocal_rank(ranked: &[String], relevant: &BTreeSet<String>) -> f64 {
    ranked.iter().position(|item| relevant.contains(item)).map_or(0.0, |k| 1.0 / (k + 1) as f64)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QueryResult {
    pub query_id: String,
    pub ranked: Vec<String>,
    pub relevant: BTreeSet<String>,
    pub retrieved_relevant: BTreeSet<String>,
}

impl QueryResult {
    pub fn new(query_id: impl Into<String>, ranked: Vec<String>, relevant: BTreeSet<String>) -> Self {
        let retrieved_relevant = ranked.iter().filter(|r| relevant.contains(*r)).cloned().collect();
        QueryResult { query_id: query_id.into(), ranked, relevant, retrieved_relevant }
    }

    fn recall(&self) -> f64 {
        if self.relevant.is_empty() {
            return 0.0;
        }
        self.retrieved_relevant.len() as f64 / self.relevant.len() as f64
    }
}

/// Mean recall over the queries that returned anything; `None` when none did.
pub fn query_recall(results: &[QueryResult]) -> Option<f64> {
    let returned: Vec<&QueryResult> = results.iter().filter(|r| !r.ranked.is_empty()).collect();
    if returned.is_empty() {
        return None;
    }
    Some(returned.iter().map(|r| r.recall()).sum::<f64>() / returned.len() as f64)
}

/// Mean recall over all queries, empty results counting as zero.
pub fn overall_recall(results: &[QueryResult]) -> Result<f64, MetricError> {
    if results.is_empty() {
        return Err(MetricError::NoResults);
    }
    Ok(results.iter().map(QueryResult::recall).sum::<f64>() / results.len() as f64)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetricsReport {
    pub map: f64,
    pub mrr: f64,
    /// `None` when no query returned a result.
    pub qr: Option<f64>,
    pub or: f64,
    pub n_queries: usize,
    pub n_returned: usize,
    pub per_query: Vec<QueryResult>,
}

impl MetricsReport {
    /// Metrics over `results`, which are put in query-id order first.
    pub fn from_results(mut results: Vec<QueryResult>) -> Result<Self, MetricError> {
        results.sort_by(|a, b| a.query_id.cmp(&b.query_id));
        let or = overall_recall(&results)?;
        let mut ap_sum = 0.0;
        for r in &results {
            ap_sum += average_precision(&r.ranked, &r.relevant)?;
        }
        let n = results.len() as f64;
        let mrr = results.iter().map(|r| reciprocal_rank(&r.ranked, &r.relevant)).sum::<f64>() / n;
        Ok(MetricsReport {
            map: ap_sum / n,
            mrr,
            qr: query_recall(&results),
            or,
            n_queries: results.len(),
            n_returned: results.iter().filter(|r| !r.ranked.is_empty()).count(),
            per_query: results,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Group {
    Normal,
    Py,
    NPy,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusItem {
    pub id: String,
    /// Relative to the manifest's directory.
    pub path: String,
    pub group: Group,
}

/// Ground-truth manifest: the corpus and, per catalog entry, the ids of the
/// corpus items it should retrieve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroundTruth {
    pub corpus: Vec<CorpusItem>,
    pub relevance: BTreeMap<String, Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TruthViolation {
    DuplicateItem(String),
    UnknownQuery(String),
    UnknownItem { query: String, item: String },
    EmptyRelevantSet(String),
}

impl fmt::Display for TruthViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TruthViolation::DuplicateItem(id) => write!(f, "duplicate corpus item `{id}`"),
            TruthViolation::UnknownQuery(q) => write!(f, "relevance names unknown catalog entry `{q}`"),
            TruthViolation::UnknownItem { query, item } => {
                write!(f, "relevant item `{item}` of `{query}` is not in the corpus")
            }
            TruthViolation::EmptyRelevantSet(q) => write!(f, "query with empty relevant set: `{q}`"),
        }
    }
}

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("failed to read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid ground-truth manifest {path}: {source}")]
    Manifest {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error("ground truth failed validation:\n{}", .0.iter().map(|v| format!("  {v}")).collect::<Vec<_>>().join("\n"))]
    Truth(Vec<TruthViolation>),
    #[error(transparent)]
    Metric(#[from] MetricError),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error("no configurations to sweep")]
    NoConfigs,
}

impl GroundTruth {
    /// Checks the manifest against the catalog. Every catalog entry is a
    /// query and needs at least one relevant item.
    pub fn validate(&self, catalog: &Catalog) -> Vec<TruthViolation> {
        let mut violations = Vec::new();
        let mut ids = BTreeSet::new();
        for item in &self.corpus {
            if !ids.insert(item.id.as_str()) {
                violations.push(TruthViolation::DuplicateItem(item.id.clone()));
            }
        }
        for (query, items) in &self.relevance {
            if catalog.get(query).is_none() {
                violations.push(TruthViolation::UnknownQuery(query.clone()));
            }
            for item in items {
                if !ids.contains(item.as_str()) {
                    violations.push(TruthViolation::UnknownItem { query: query.clone(), item: item.clone() });
                }
            }
        }
        for entry in &catalog.entries {
            if self.relevance.get(&entry.id).is_none_or(|r| r.is_empty()) {
                violations.push(TruthViolation::EmptyRelevantSet(entry.id.clone()));
            }
        }
        violations
    }
}

/// A ground truth with its corpus files read into memory.
#[derive(Debug, Clone)]
pub struct Corpus {
    pub truth: GroundTruth,
    /// Source text per corpus item, in manifest order.
    pub texts: Vec<String>,
}

impl Corpus {
    pub fn load(manifest: &Path) -> Result<Self, EvalError> {
        let raw =
            fs::read_to_string(manifest).map_err(|source| EvalError::Io { path: manifest.to_path_buf(), source })?;
        let truth: GroundTruth = serde_json::from_str(&raw)
            .map_err(|source| EvalError::Manifest { path: manifest.to_path_buf(), source })?;
        let base = manifest.parent().unwrap_or(Path::new("."));
        let mut texts = Vec::with_capacity(truth.corpus.len());
        for item in &truth.corpus {
            let path = base.join(&item.path);
            texts.push(fs::read_to_string(&path).map_err(|source| EvalError::Io { path, source })?);
        }
        Ok(Corpus { truth, texts })
    }
}

/// The corpus cut into windows and indexed once, ready to be queried under
/// any configuration using the same n-gram size.
pub struct Evaluator<'a> {
    catalog: &'a Catalog,
    corpus: &'a Corpus,
    index: Index,
    /// Corpus item id per indexed document.
    owner: Vec<String>,
}

impl<'a> Evaluator<'a> {
    pub fn new(catalog: &'a Catalog, corpus: &'a Corpus, ngram_n: usize) -> Result<Self, EvalError> {
        let violations = corpus.truth.validate(catalog);
        if !violations.is_empty() {
            return Err(EvalError::Truth(violations));
        }
        let mut docs = Vec::new();
        for (item, text) in corpus.truth.corpus.iter().zip(&corpus.texts) {
            for snippet in extract_from_source(text, &item.path, DEFAULT_WINDOW) {
                docs.push((snippet.key(), snippet));
            }
        }
        let index = Index::build(docs, ngram_n);
        let by_path: HashMap<&str, &str> =
            corpus.truth.corpus.iter().map(|i| (i.path.as_str(), i.id.as_str())).collect();
        let owner = index.docs().iter().map(|d| by_path[d.snippet.file_path.as_str()].to_string()).collect();
        debug!("evaluation index holds {} windows", index.len());
        Ok(Evaluator { catalog, corpus, index, owner })
    }

    /// Runs every catalog entry as a query. A query's ranking lists corpus
    /// items in the order of their best window, cut to `config.top_k`.
    pub fn evaluate(&self, config: &ThresholdConfig) -> Result<MetricsReport, EvalError> {
        config.validate()?;
        let results: Result<Vec<QueryResult>, EvalError> = self
            .catalog
            .entries
            .par_iter()
            .map(|entry| {
                let query = PreparedQuery::new(&entry.snippet)?;
                let hits = self.index.search_prepared(&query, config)?;
                let mut seen = BTreeSet::new();
                let mut ranked = Vec::new();
                for hit in hits {
                    let item = &self.owner[hit.doc];
                    if seen.insert(item.as_str()) {
                        ranked.push(item.clone());
                        if ranked.len() == config.top_k {
                            break;
                        }
                    }
                }
                let relevant = self.corpus.truth.relevance[&entry.id].iter().cloned().collect();
                Ok(QueryResult::new(entry.id.clone(), ranked, relevant))
            })
            .collect();
        Ok(MetricsReport::from_results(results?)?)
    }
}

pub fn evaluate(catalog: &Catalog, corpus: &Corpus, config: &ThresholdConfig) -> Result<MetricsReport, EvalError> {
    Evaluator::new(catalog, corpus, config.ngram_n)?.evaluate(config)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub name: String,
    pub measure: Measure,
    pub thresholds: [u8; 4],
    pub map: f64,
    pub qr: Option<f64>,
    pub or: f64,
    pub mrr: f64,
    pub n_queries: usize,
    pub n_returned: usize,
}

/// One row per configuration, in the given order.
pub fn sweep(catalog: &Catalog, corpus: &Corpus, configs: &[NamedConfig]) -> Result<Vec<SweepRow>, EvalError> {
    if configs.is_empty() {
        return Err(EvalError::NoConfigs);
    }
    let mut evaluators: BTreeMap<usize, Evaluator> = BTreeMap::new();
    let mut rows = Vec::with_capacity(configs.len());
    for named in configs {
        let n = named.config.ngram_n;
        if let Entry::Vacant(slot) = evaluators.entry(n) {
            slot.insert(Evaluator::new(catalog, corpus, n)?);
        }
        let report = evaluators[&n].evaluate(&named.config)?;
        rows.push(SweepRow {
            name: named.name.clone(),
            measure: named.config.measure,
            thresholds: named.config.thresholds,
            map: report.map,
            qr: report.qr,
            or: report.or,
            mrr: report.mrr,
            n_queries: report.n_queries,
            n_returned: report.n_returned,
        });
    }
    Ok(rows)
}

fn fixed(v: f64) -> String {
    format!("{v:.2}")
}

/// Aligned text table with the columns Config, Measure, T0..T3, MAP, QR, OR, MRR.
pub fn render_table(rows: &[SweepRow]) -> String {
    let header = ["Config", "Measure", "T0", "T1", "T2", "T3", "MAP", "QR", "OR", "MRR"];
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            let mut cells = vec![r.name.clone(), r.measure.as_str().to_string()];
            cells.extend(r.thresholds.iter().map(|t| t.to_string()));
            cells.push(fixed(r.map));
            cells.push(r.qr.map_or_else(|| "n/a".to_string(), fixed));
            cells.push(fixed(r.or));
            cells.push(fixed(r.mrr));
            cells
        })
        .collect();
    let widths: Vec<usize> = (0..header.len())
        .map(|c| body.iter().map(|row| row[c].len()).chain([header[c].len()]).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    let mut line = |cells: &[String]| {
        let parts: Vec<String> = cells
            .iter()
            .enumerate()
            .map(
                |(c, cell)| {
                    if c < 2 {
                        format!("{cell:<w$}", w = widths[c])
                    } else {
                        format!("{cell:>w$}", w = widths[c])
                    }
                },
            )
            .collect();
        let _ = writeln!(out, "{}", parts.join("  ").trim_end());
    };
    line(&header.map(String::from));
    for row in &body {
        line(row);
    }
    out
}
