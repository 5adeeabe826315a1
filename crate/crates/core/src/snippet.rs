//! Candidate snippets with file/line provenance.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::lexer::{tokenize, TokenKind};

/// Default sliding-window width, in non-blank lines. One more than the
/// longest bundled catalog snippet.
pub const DEFAULT_WINDOW: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SnippetOrigin {
    FileWindow,
    FunctionBlock,
    DiffHunk,
    Catalog,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Snippet {
    /// The covered lines, each terminated by `\n`.
    pub source_text: String,
    pub file_path: String,
    pub start_line: usize,
    /// Inclusive.
    pub end_line: usize,
    pub origin: SnippetOrigin,
}

impl Snippet {
    pub fn new(source_text: String, file_path: impl Into<String>, start_line: usize, origin: SnippetOrigin) -> Self {
        let lines = source_text.lines().count().max(1);
        Snippet { source_text, file_path: file_path.into(), start_line, end_line: start_line + lines - 1, origin }
    }

    pub fn line_count(&self) -> usize {
        self.end_line - self.start_line + 1
    }

    /// Stable identity used for tie-breaking and reporting.
    pub fn key(&self) -> String {
        format!("{}:{}-{}", self.file_path, self.start_line, self.end_line)
    }
}

/// Joins lines `start..=end` (1-based) of `lines`, terminating each with `\n`.
pub fn slice_lines(lines: &[&str], start: usize, end: usize) -> String {
    let mut text = String::new();
    for line in &lines[start - 1..end] {
        text.push_str(line);
        text.push('\n');
    }
    text
}

pub fn is_python_path(path: &str) -> bool {
    path.ends_with(".py")
}

fn is_blank(line: &str) -> bool {
    let trimmed = line.trim_start();
    trimmed.is_empty() || trimmed.starts_with('#')
}

fn indent_of(line: &str) -> usize {
    line.chars().take_while(|c| *c == ' ' || *c == '\t').count()
}

/// Lines on which a logical line begins (the first token after a line break
/// token). Falls back to every non-blank line when the source does not lex.
fn logical_line_starts(source: &str, lines: &[&str]) -> BTreeSet<usize> {
    let Ok(tokens) = tokenize(source) else {
        return (1..=lines.len()).filter(|&l| !is_blank(lines[l - 1])).collect();
    };
    let mut starts = BTreeSet::new();
    let mut at_start = true;
    for token in &tokens {
        if token.kind == TokenKind::Newline {
            at_start = true;
        } else if at_start {
            starts.insert(token.line);
            at_start = false;
        }
    }
    starts
}

fn function_blocks(lines: &[&str], starts: &BTreeSet<usize>) -> Vec<(usize, usize)> {
    let mut blocks = Vec::new();
    for &def_line in starts {
        let text = lines[def_line - 1].trim_start();
        let is_def = text.starts_with("def ") || text.starts_with("async def ");
        if !is_def {
            continue;
        }
        let def_indent = indent_of(lines[def_line - 1]);
        let mut end = def_line;
        for line_no in def_line + 1..=lines.len() {
            let line = lines[line_no - 1];
            if is_blank(line) {
                continue;
            }
            if starts.contains(&line_no) && indent_of(line) <= def_indent {
                break;
            }
            end = line_no;
        }
        blocks.push((def_line, end));
    }
    blocks
}

/// Logical lines as inclusive `(first, last)` line spans. A logical line runs
/// from its start to the last non-blank line before the next start.
fn logical_lines(lines: &[&str], starts: &BTreeSet<usize>) -> Vec<(usize, usize)> {
    let starts: Vec<usize> = starts.iter().copied().collect();
    let mut units = Vec::with_capacity(starts.len());
    for (k, &first) in starts.iter().enumerate() {
        let limit = starts.get(k + 1).map_or(lines.len(), |next| next - 1);
        let last = (first..=limit).rev().find(|&l| !is_blank(lines[l - 1])).unwrap_or(first);
        units.push((first, last));
    }
    units
}

/// Splits a Python source file into function blocks and sliding windows of
/// `window` logical lines (stride 1). Identical spans are reported once.
pub fn extract_from_source(source: &str, path: &str, window: usize) -> Vec<Snippet> {
    let lines: Vec<&str> = source.lines().collect();
    let starts = logical_line_starts(source, &lines);
    if starts.is_empty() {
        return Vec::new();
    }
    let units = logical_lines(&lines, &starts);

    let mut spans: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut snippets = Vec::new();
    let mut push = |start: usize, end: usize, origin: SnippetOrigin| {
        if spans.insert((start, end)) {
            snippets.push(Snippet {
                source_text: slice_lines(&lines, start, end),
                file_path: path.to_string(),
                start_line: start,
                end_line: end,
                origin,
            });
        }
    };

    for (start, end) in function_blocks(&lines, &starts) {
        push(start, end, SnippetOrigin::FunctionBlock);
    }
    let width = window.max(1).min(units.len());
    for run in units.windows(width) {
        push(run[0].0, run[width - 1].1, SnippetOrigin::FileWindow);
    }
    snippets
}

/// Every window of 1 to `max_window` logical lines plus function blocks,
/// each span once, ordered by `(start_line, end_line)`.
pub fn extract_all_widths(source: &str, path: &str, max_window: usize) -> Vec<Snippet> {
    let mut seen = BTreeSet::new();
    let mut all = Vec::new();
    for width in 1..=max_window.max(1) {
        for s in extract_from_source(source, path, width) {
            if seen.insert((s.start_line, s.end_line)) {
                all.push(s);
            }
        }
    }
    all.sort_by_key(|s| (s.start_line, s.end_line));
    all
}
