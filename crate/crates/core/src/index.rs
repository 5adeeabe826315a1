//! Multi-representation clone index.
//!
//! Each indexed snippet is stored with its four token representations. Every
//! level keeps an inverted map from token n-grams to the documents containing
//! them, which gives both candidate generation and the n-gram token ratio's
//! shared-gram counts in a single pass over the query's grams.

use std::collections::{HashMap, HashSet};

use log::debug;
use serde::Serialize;
use thiserror::Error;

use crate::config::ThresholdConfig;
use crate::lexer::{tokenize, LexError};
use crate::representation::{representations, RepresentationSet, LEVELS};
use crate::similarity::{
    ngram_token_ratio, ngrams, percent_half_up, sorted_distinct, token_set_ratio_distinct, Measure,
};
use crate::snippet::Snippet;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("query does not lex: {0}")]
    Lex(#[from] LexError),
    #[error("query is empty")]
    EmptyQuery,
    #[error("index was built with {index}-grams but the configuration asks for {config}-grams")]
    NgramMismatch { index: usize, config: usize },
}

/// A lexed query with its representations, reusable across searches.
#[derive(Debug, Clone)]
pub struct PreparedQuery {
    pub reps: RepresentationSet,
}

impl PreparedQuery {
    pub fn new(source: &str) -> Result<Self, SearchError> {
        let reps = representations(&tokenize(source)?);
        if reps.r1.is_empty() {
            return Err(SearchError::EmptyQuery);
        }
        Ok(PreparedQuery { reps })
    }
}

#[derive(Debug, Clone)]
pub struct Document {
    /// Catalog entry id or snippet identity.
    pub key: String,
    pub snippet: Snippet,
    pub reps: RepresentationSet,
    distinct: [Vec<String>; LEVELS],
}

#[derive(Debug, Clone, Serialize)]
pub struct Skipped {
    pub key: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchHit {
    /// Position of the document in the index.
    #[serde(skip)]
    pub doc: usize,
    pub entry: String,
    pub scores: [u8; LEVELS],
    pub aggregate: f64,
    pub qualifies: bool,
}

impl SearchHit {
    fn score_sum(&self) -> u32 {
        self.scores.iter().map(|&s| s as u32).sum()
    }
}

pub fn aggregate(scores: &[u8; LEVELS]) -> f64 {
    scores.iter().map(|&s| s as f64).sum::<f64>() / LEVELS as f64
}

type Gram = Box<[u32]>;

#[derive(Debug, Clone)]
pub struct Index {
    ngram_n: usize,
    docs: Vec<Document>,
    skipped: Vec<Skipped>,
    vocab: HashMap<String, u32>,
    postings: [HashMap<Gram, Vec<u32>>; LEVELS],
}

/// Indexes snippets under their [`Snippet::key`].
pub fn build_index(snippets: &[Snippet], config: &ThresholdConfig) -> Index {
    Index::build(snippets.iter().map(|s| (s.key(), s.clone())), config.ngram_n)
}

impl Index {
    /// Builds an index over keyed snippets. Snippets that fail to lex or have
    /// no tokens are skipped and reported through [`Index::skipped`].
    pub fn build(docs: impl IntoIterator<Item = (String, Snippet)>, ngram_n: usize) -> Self {
        let mut index = Index {
            ngram_n: ngram_n.max(1),
            docs: Vec::new(),
            skipped: Vec::new(),
            vocab: HashMap::new(),
            postings: Default::default(),
        };
        for (key, snippet) in docs {
            let reps = match tokenize(&snippet.source_text) {
                Ok(tokens) => representations(&tokens),
                Err(err) => {
                    debug!("skipping {key}: {err}");
                    index.skipped.push(Skipped { key, reason: err.to_string() });
                    continue;
                }
            };
            if reps.r1.is_empty() {
                index.skipped.push(Skipped { key, reason: "no tokens".to_string() });
                continue;
            }
            index.add(key, snippet, reps);
        }
        index
    }

    fn add(&mut self, key: String, snippet: Snippet, reps: RepresentationSet) {
        let doc_id = self.docs.len() as u32;
        for level in 0..LEVELS {
            let ids: Vec<u32> = reps.level(level).iter().map(|t| self.intern(t)).collect();
            for gram in ngrams(&ids, self.ngram_n) {
                self.postings[level].entry(gram.into()).or_default().push(doc_id);
            }
        }
        let distinct =
            std::array::from_fn(|level| sorted_distinct(reps.level(level)).into_iter().map(str::to_string).collect());
        self.docs.push(Document { key, snippet, reps, distinct });
    }

    fn intern(&mut self, token: &str) -> u32 {
        if let Some(&id) = self.vocab.get(token) {
            return id;
        }
        let id = self.vocab.len() as u32;
        self.vocab.insert(token.to_string(), id);
        id
    }

    pub fn ngram_n(&self) -> usize {
        self.ngram_n
    }

    pub fn len(&self) -> usize {
        self.docs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.docs.is_empty()
    }

    pub fn docs(&self) -> &[Document] {
        &self.docs
    }

    pub fn doc(&self, i: usize) -> &Document {
        &self.docs[i]
    }

    pub fn skipped(&self) -> &[Skipped] {
        &self.skipped
    }

    /// Qualifying hits for `query`, best first, truncated to `config.top_k`.
    pub fn search(&self, query: &Snippet, config: &ThresholdConfig) -> Result<Vec<SearchHit>, SearchError> {
        let prepared = PreparedQuery::new(&query.source_text)?;
        let mut hits = self.search_prepared(&prepared, config)?;
        hits.truncate(config.top_k);
        Ok(hits)
    }

    /// Every qualifying hit for a prepared query, best first. Ties on the
    /// aggregate score are broken by document key.
    pub fn search_prepared(
        &self,
        query: &PreparedQuery,
        config: &ThresholdConfig,
    ) -> Result<Vec<SearchHit>, SearchError> {
        if config.ngram_n != self.ngram_n {
            return Err(SearchError::NgramMismatch { index: self.ngram_n, config: config.ngram_n });
        }
        if self.docs.is_empty() {
            return Ok(Vec::new());
        }

        let mut shared = vec![[0u32; LEVELS]; self.docs.len()];
        let mut gram_counts = [0u32; LEVELS];
        let mut is_candidate = vec![config.all_zero(); self.docs.len()];
        for level in 0..LEVELS {
            let tokens = query.reps.level(level);
            // Tokens unknown to the index get fresh ids so distinct grams stay distinct.
            let mut local: HashMap<&str, u32> = HashMap::new();
            let ids: Vec<u32> = tokens
                .iter()
                .map(|t| match self.vocab.get(t.as_str()) {
                    Some(&id) => id,
                    None => {
                        let next = self.vocab.len() as u32 + local.len() as u32;
                        *local.entry(t.as_str()).or_insert(next)
                    }
                })
                .collect();
            let grams: HashSet<&[u32]> = ngrams(&ids, self.ngram_n);
            gram_counts[level] = grams.len() as u32;
            for gram in grams {
                if let Some(docs) = self.postings[level].get(gram) {
                    for &d in docs {
                        shared[d as usize][level] += 1;
                        is_candidate[d as usize] = true;
                    }
                }
            }
        }

        let query_distinct: [Vec<&str>; LEVELS] = std::array::from_fn(|level| sorted_distinct(query.reps.level(level)));

        let mut hits = Vec::new();
        for (d, doc) in self.docs.iter().enumerate() {
            if !is_candidate[d] {
                continue;
            }
            // Qualification is conjunctive, so scoring stops at the first miss.
            let mut scores = [0u8; LEVELS];
            let mut qualifies = true;
            for level in 0..LEVELS {
                scores[level] = match config.measure {
                    Measure::Ntr => percent_half_up(shared[d][level] as u64, gram_counts[level].max(1) as u64),
                    Measure::Tsr => token_set_ratio_distinct(&query_distinct[level], &doc.distinct[level]),
                };
                if scores[level] < config.thresholds[level] {
                    qualifies = false;
                    break;
                }
            }
            if qualifies {
                hits.push(SearchHit {
                    doc: d,
                    entry: doc.key.clone(),
                    scores,
                    aggregate: aggregate(&scores),
                    qualifies: true,
                });
            }
        }
        hits.sort_by(|a, b| b.score_sum().cmp(&a.score_sum()).then_with(|| a.entry.cmp(&b.entry)));
        Ok(hits)
    }
}

/// Scores one query against one candidate directly, without an index.
pub fn score_pair(
    query: &RepresentationSet,
    candidate: &RepresentationSet,
    measure: Measure,
    ngram_n: usize,
) -> [u8; LEVELS] {
    std::array::from_fn(|level| {
        let (q, c) = (query.level(level), candidate.level(level));
        if q.is_empty() || c.is_empty() {
            return 0;
        }
        match measure {
            Measure::Ntr => ngram_token_ratio(q, c, ngram_n).unwrap_or(0),
            Measure::Tsr => token_set_ratio_distinct(&sorted_distinct(q), &sorted_distinct(c)),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::snippet::SnippetOrigin;

    fn snip(text: &str, path: &str) -> Snippet {
        Snippet::new(text.to_string(), path, 1, SnippetOrigin::FileWindow)
    }

    fn ntr(t: u8) -> ThresholdConfig {
        ThresholdConfig::uniform(Measure::Ntr, t)
    }

    #[test]
    fn empty_index_returns_nothing() {
        let index = build_index(&[], &ntr(0));
        assert!(index.is_empty());
        assert!(index.search(&snip("a = 1\n", "q.py"), &ntr(0)).unwrap().is_empty());
    }

    #[test]
    fn unlexable_snippets_are_skipped() {
        let snippets = vec![snip("a = 1\n", "a.py"), snip("b = 'oops\n", "b.py"), snip("c = 3\n", "c.py")];
        let index = build_index(&snippets, &ntr(0));
        assert_eq!(index.len(), 2);
        assert_eq!(index.skipped().len(), 1);
        assert_eq!(index.skipped()[0].key, "b.py:1-1");
    }

    #[test]
    fn self_match_scores_100_everywhere() {
        let text = "temp = a\na = b\nb = temp\n";
        let index = build_index(&[snip(text, "s.py"), snip("x = [1, 2]\n", "o.py")], &ntr(40));
        let hits = index.search(&snip(text, "q.py"), &ntr(40)).unwrap();
        assert_eq!(hits.len(), 1);
        assert_eq!(hits[0].scores, [100; 4]);
        assert_eq!(hits[0].aggregate, 100.0);
    }

    #[test]
    fn zero_thresholds_score_every_document() {
        let snippets = vec![snip("a = 1\n", "a.py"), snip("while True:\n    pass\n", "b.py"), snip("z\n", "c.py")];
        let index = build_index(&snippets, &ntr(0));
        let mut config = ntr(0);
        config.top_k = 100;
        let hits = index.search(&snip("import os\n", "q.py"), &config).unwrap();
        assert_eq!(hits.len(), 3);
        // All zero: ties resolved by key.
        let keys: Vec<_> = hits.iter().map(|h| h.entry.as_str()).collect();
        assert_eq!(keys, ["a.py:1-1", "b.py:1-2", "c.py:1-1"]);
    }

    #[test]
    fn top_k_truncates() {
        let snippets: Vec<_> = (0..5).map(|i| snip("a = 1\n", &format!("f{i}.py"))).collect();
        let index = build_index(&snippets, &ntr(0));
        let mut config = ntr(0);
        config.top_k = 2;
        assert_eq!(index.search(&snip("a = 1\n", "q.py"), &config).unwrap().len(), 2);
    }

    #[test]
    fn ngram_mismatch_is_an_error() {
        let index = build_index(&[snip("a = 1\n", "a.py")], &ntr(0));
        let mut config = ntr(0);
        config.ngram_n = 3;
        assert!(matches!(index.search(&snip("a = 1\n", "q.py"), &config), Err(SearchError::NgramMismatch { .. })));
    }

    #[test]
    fn unlexable_query_is_an_error() {
        let index = build_index(&[snip("a = 1\n", "a.py")], &ntr(0));
        assert!(matches!(index.search(&snip("'x\n", "q.py"), &ntr(0)), Err(SearchError::Lex(_))));
    }

    #[test]
    fn repeated_query_grams_counted_once() {
        let index = build_index(&[snip("a = 1\n", "a.py")], &ntr(0));
        let q = PreparedQuery::new("a = 1\na = 1\na = 1\n").unwrap();
        let hits = index.search_prepared(&q, &ntr(0)).unwrap();
        let direct = score_pair(&q.reps, &index.doc(0).reps, Measure::Ntr, 4);
        assert_eq!(hits[0].scores, direct);
    }
}
