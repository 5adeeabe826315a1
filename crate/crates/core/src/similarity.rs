//! Token-sequence similarity measures.
//!
//! Two measures are supported, both returning integer scores in `0..=100`
//! rounded half-up:
//!
//! * **n-gram token ratio** (NTR): the share of the query's distinct token
//!   n-grams that also occur in the candidate. It measures containment of the
//!   query in the candidate and is deliberately asymmetric.
//! * **token-set ratio** (TSR): the fuzzy set ratio over sorted distinct
//!   tokens, scored with Ratcliff/Obershelp block matching on the joined
//!   strings.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    /// n-gram token ratio
    Ntr,
    /// token-set fuzzy ratio
    Tsr,
}

impl Measure {
    pub fn as_str(self) -> &'static str {
        match self {
            Measure::Ntr => "NTR",
            Measure::Tsr => "TSR",
        }
    }
}

impl std::str::FromStr for Measure {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ntr" => Ok(Measure::Ntr),
            "tsr" | "fwz" | "fuzzywuzzy" => Ok(Measure::Tsr),
            other => Err(format!("unknown similarity measure `{other}` (expected ntr or tsr)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimilarityError {
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
}

/// `100 * numer / denom`, rounded half-up. `denom` must be non-zero.
pub(crate) fn percent_half_up(numer: u64, denom: u64) -> u8 {
    debug_assert!(denom > 0 && numer <= denom);
    ((200 * numer + denom) / (2 * denom)) as u8
}

/// Distinct n-grams of a sequence. A sequence shorter than `n` yields itself
/// as its only gram.
pub fn ngrams<T: Eq + std::hash::Hash>(tokens: &[T], n: usize) -> HashSet<&[T]> {
    if tokens.len() < n {
        return std::iter::once(tokens).collect();
    }
    tokens.windows(n).collect()
}

pub fn ngram_token_ratio(query: &[String], candidate: &[String], n: usize) -> Result<u8, SimilarityError> {
    if query.is_empty() || candidate.is_empty() {
        return Err(SimilarityError::InvalidArgument("empty token sequence"));
    }
    if n == 0 {
        return Err(SimilarityError::InvalidArgument("n-gram size must be at least 1"));
    }
    let query_grams = ngrams(query, n);
    let candidate_grams = ngrams(candidate, n);
    let shared = query_grams.iter().filter(|g| candidate_grams.contains(*g)).count();
    Ok(percent_half_up(shared as u64, query_grams.len() as u64))
}

pub fn token_set_ratio(query: &[String], candidate: &[String]) -> Result<u8, SimilarityError> {
    if query.is_empty() || candidate.is_empty() {
        return Err(SimilarityError::InvalidArgument("empty token sequence"));
    }
    Ok(token_set_ratio_distinct(&sorted_distinct(query), &sorted_distinct(candidate)))
}

pub(crate) fn sorted_distinct(tokens: &[String]) -> Vec<&str> {
    let mut v: Vec<&str> = tokens.iter().map(String::as_str).collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Token-set ratio over already sorted, deduplicated token lists.
pub(crate) fn token_set_ratio_distinct<Q: AsRef<str>, C: AsRef<str>>(query: &[Q], candidate: &[C]) -> u8 {
    let query: Vec<&str> = query.iter().map(AsRef::as_ref).collect();
    let candidate: Vec<&str> = candidate.iter().map(AsRef::as_ref).collect();
    let (mut common, mut query_only, mut candidate_only) = (Vec::new(), Vec::new(), Vec::new());
    let (mut i, mut j) = (0, 0);
    while i < query.len() && j < candidate.len() {
        match query[i].cmp(candidate[j]) {
            std::cmp::Ordering::Equal => {
                common.push(query[i]);
                i += 1;
                j += 1;
            }
            std::cmp::Ordering::Less => {
                query_only.push(query[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                candidate_only.push(candidate[j]);
                j += 1;
            }
        }
    }
    query_only.extend_from_slice(&query[i..]);
    candidate_only.extend_from_slice(&candidate[j..]);

    let joined_common = common.join(" ");
    let joined_query = join_lists(&common, &query_only);
    let joined_candidate = join_lists(&common, &candidate_only);

    let common_chars: Vec<char> = joined_common.chars().collect();
    let query_chars: Vec<char> = joined_query.chars().collect();
    let candidate_chars: Vec<char> = joined_candidate.chars().collect();

    // The intersection string is a prefix of both combined strings, so its
    // Ratcliff/Obershelp match against either is the whole intersection.
    let prefix_ratio = |combined: &[char]| ratio_from_matches(common_chars.len(), common_chars.len(), combined.len());
    let r_common_query = prefix_ratio(&query_chars);
    let r_common_candidate = prefix_ratio(&candidate_chars);
    let r_query_candidate = ratio(&query_chars, &candidate_chars);
    r_common_query.max(r_common_candidate).max(r_query_candidate)
}

fn join_lists(head: &[&str], tail: &[&str]) -> String {
    head.iter().chain(tail.iter()).copied().collect::<Vec<_>>().join(" ")
}

fn ratio_from_matches(matched: usize, len_a: usize, len_b: usize) -> u8 {
    let total = (len_a + len_b) as u64;
    if total == 0 {
        return 100;
    }
    percent_half_up(2 * matched as u64, total)
}

/// Ratcliff/Obershelp similarity `round(100 * 2M / (|a| + |b|))`.
pub fn ratio(a: &[char], b: &[char]) -> u8 {
    ratio_from_matches(matching_characters(a, b), a.len(), b.len())
}

/// Longest common substring of `a[alo..ahi]` and `b[blo..bhi]`, returned as
/// `(i, j, len)`. Ties go to the block starting earliest in `a`, then earliest
/// in `b`.
pub fn longest_match(
    a: &[char],
    b: &[char],
    (alo, ahi): (usize, usize),
    (blo, bhi): (usize, usize),
) -> (usize, usize, usize) {
    let width = bhi - blo;
    let mut prev = vec![0u32; width + 1];
    let mut cur = vec![0u32; width + 1];
    let (mut best_i, mut best_j, mut best_len) = (alo, blo, 0usize);
    for (i, &ai) in (alo..ahi).zip(&a[alo..ahi]) {
        for (col, &bj) in b[blo..bhi].iter().enumerate() {
            let len = if ai == bj { prev[col] + 1 } else { 0 };
            cur[col + 1] = len;
            if len as usize > best_len {
                best_len = len as usize;
                best_i = i + 1 - best_len;
                best_j = blo + col + 1 - best_len;
            }
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    (best_i, best_j, best_len)
}

/// Total length of the matching blocks found by recursively taking the
/// longest common substring and recursing on both sides of it.
pub fn matching_characters(a: &[char], b: &[char]) -> usize {
    let mut total = 0;
    let mut stack = vec![((0, a.len()), (0, b.len()))];
    while let Some(((alo, ahi), (blo, bhi))) = stack.pop() {
        if alo >= ahi || blo >= bhi {
            continue;
        }
        let (i, j, k) = longest_match(a, b, (alo, ahi), (blo, bhi));
        if k == 0 {
            continue;
        }
        total += k;
        stack.push(((alo, i), (blo, j)));
        stack.push(((i + k, ahi), (j + k, bhi)));
    }
    total
}
