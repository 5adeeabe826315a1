//! Unified diff input: turns added lines of Python files into snippets.

use thiserror::Error;

use crate::snippet::{is_python_path, Snippet, SnippetOrigin};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiffError {
    #[error("malformed hunk header: {header}")]
    MalformedHunkHeader { header: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct HunkHeader {
    old_len: usize,
    new_start: usize,
    new_len: usize,
}

fn parse_range(range: &str) -> Option<(usize, usize)> {
    match range.split_once(',') {
        Some((start, len)) => Some((start.parse().ok()?, len.parse().ok()?)),
        None => Some((range.parse().ok()?, 1)),
    }
}

fn parse_hunk_header(line: &str) -> Result<HunkHeader, DiffError> {
    let malformed = || DiffError::MalformedHunkHeader { header: line.to_string() };
    let rest = line.strip_prefix("@@ ").ok_or_else(malformed)?;
    let (ranges, _) = rest.split_once(" @@").ok_or_else(malformed)?;
    let mut parts = ranges.split_whitespace();
    let old = parts.next().and_then(|p| p.strip_prefix('-')).ok_or_else(malformed)?;
    let new = parts.next().and_then(|p| p.strip_prefix('+')).ok_or_else(malformed)?;
    if parts.next().is_some() {
        return Err(malformed());
    }
    let (_, old_len) = parse_range(old).ok_or_else(malformed)?;
    let (new_start, new_len) = parse_range(new).ok_or_else(malformed)?;
    Ok(HunkHeader { old_len, new_start, new_len })
}

/// Post-image path from a `+++ ` header line, or `None` for deletions.
fn post_image_path(header: &str) -> Option<String> {
    let raw = header.strip_prefix("+++ ")?;
    let raw = raw.split('\t').next().unwrap_or(raw).trim_end();
    if raw == "/dev/null" {
        return None;
    }
    let path = raw.strip_prefix("b/").unwrap_or(raw);
    Some(path.to_string())
}

struct Run {
    start: usize,
    text: String,
    lines: usize,
}

/// One snippet per run of consecutive added lines in each `.py` file, with
/// post-image line numbers. Output is sorted by `(file, start_line)`.
pub fn extract_from_diff(diff: &str) -> Result<Vec<Snippet>, DiffError> {
    let mut snippets = Vec::new();
    let mut file: Option<String> = None;
    let mut lines = diff.lines();

    while let Some(line) = lines.next() {
        if line.starts_with("diff ") {
            file = None;
        } else if line.starts_with("+++ ") {
            file = post_image_path(line).filter(|p| is_python_path(p));
        } else if line.starts_with("@@") {
            let header = parse_hunk_header(line)?;
            let (mut old_left, mut new_left) = (header.old_len, header.new_len);
            let mut new_line = header.new_start;
            let mut run: Option<Run> = None;
            let mut flush = |run: &mut Option<Run>| {
                if let (Some(r), Some(path)) = (run.take(), file.as_ref()) {
                    snippets.push(Snippet {
                        source_text: r.text,
                        file_path: path.clone(),
                        start_line: r.start,
                        end_line: r.start + r.lines - 1,
                        origin: SnippetOrigin::DiffHunk,
                    });
                }
            };
            while old_left > 0 || new_left > 0 {
                let Some(body) = lines.next() else { break };
                match body.chars().next() {
                    Some('+') => {
                        let r = run.get_or_insert_with(|| Run { start: new_line, text: String::new(), lines: 0 });
                        r.text.push_str(&body[1..]);
                        r.text.push('\n');
                        r.lines += 1;
                        new_line += 1;
                        new_left = new_left.saturating_sub(1);
                    }
                    Some('-') => old_left = old_left.saturating_sub(1),
                    Some('\\') => {}
                    Some(' ') | None => {
                        flush(&mut run);
                        new_line += 1;
                        old_left = old_left.saturating_sub(1);
                        new_left = new_left.saturating_sub(1);
                    }
                    Some(_) => break,
                }
            }
            flush(&mut run);
        }
    }
    snippets.sort_by(|a, b| (a.file_path.as_str(), a.start_line).cmp(&(b.file_path.as_str(), b.start_line)));
    Ok(snippets)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SWAP_DIFF: &str = "\
diff --git a/util.py b/util.py
index 1111111..2222222 100644
--- a/util.py
+++ b/util.py
@@ -4,4 +4,7 @@ def helper():
 x = 1
 y = 2
 def order(a, b):
+    temp = a
+    a = b
+    b = temp
     return a, b
";

    #[test]
    fn added_run_maps_to_post_image_lines() {
        let snippets = extract_from_diff(SWAP_DIFF).unwrap();
        assert_eq!(snippets.len(), 1);
        let s = &snippets[0];
        assert_eq!((s.file_path.as_str(), s.start_line, s.end_line), ("util.py", 7, 9));
        assert_eq!(s.source_text, "    temp = a\n    a = b\n    b = temp\n");
        assert_eq!(s.origin, SnippetOrigin::DiffHunk);
    }

    #[test]
    fn non_python_files_ignored() {
        let diff = "--- a/README.md\n+++ b/README.md\n@@ -1 +1,2 @@\n # Title\n+more\n";
        assert!(extract_from_diff(diff).unwrap().is_empty());
    }

    #[test]
    fn two_runs_in_one_hunk() {
        let diff = "--- a/m.py\n+++ b/m.py\n@@ -1,3 +1,5 @@\n a = 1\n+b = 2\n c = 3\n+d = 4\n e = 5\n";
        let spans: Vec<_> = extract_from_diff(diff).unwrap().iter().map(|s| (s.start_line, s.end_line)).collect();
        assert_eq!(spans, vec![(2, 2), (4, 4)]);
    }

    #[test]
    fn removed_lines_do_not_split_a_run() {
        let diff = "--- a/m.py\n+++ b/m.py\n@@ -1,3 +1,3 @@\n a = 1\n+b = 2\n-b = 0\n-c = 0\n+c = 3\n";
        let snippets = extract_from_diff(diff).unwrap();
        assert_eq!(snippets.len(), 1);
        assert_eq!((snippets[0].start_line, snippets[0].end_line), (2, 3));
        assert_eq!(snippets[0].source_text, "b = 2\nc = 3\n");
    }

    #[test]
    fn new_file_and_deleted_file() {
        let diff = "\
diff --git a/new.py b/new.py
new file mode 100644
--- /dev/null
+++ b/new.py
@@ -0,0 +1,2 @@
+import os
+print(os.sep)
diff --git a/old.py b/old.py
deleted file mode 100644
--- a/old.py
+++ /dev/null
@@ -1,1 +0,0 @@
-gone = True
";
        let snippets = extract_from_diff(diff).unwrap();
        assert_eq!(snippets.len(), 1);
        assert_eq!(snippets[0].file_path, "new.py");
        assert_eq!((snippets[0].start_line, snippets[0].end_line), (1, 2));
    }

    #[test]
    fn body_lines_that_look_like_headers() {
        let diff = "--- a/m.py\n+++ b/m.py\n@@ -1,2 +1,2 @@\n--- x\n+++ y\n a = 1\n";
        let snippets = extract_from_diff(diff).unwrap();
        assert_eq!(snippets.len(), 1);
        assert_eq!(snippets[0].source_text, "++ y\n");
    }

    #[test]
    fn malformed_header_is_reported() {
        let diff = "--- a/m.py\n+++ b/m.py\n@@ -1,x +1 @@\n+a\n";
        let err = extract_from_diff(diff).unwrap_err();
        assert_eq!(err, DiffError::MalformedHunkHeader { header: "@@ -1,x +1 @@".into() });
        assert!(extract_from_diff("--- a/m.py\n+++ b/m.py\n@@ garbage\n").is_err());
    }

    #[test]
    fn empty_diff() {
        assert!(extract_from_diff("").unwrap().is_empty());
    }

    #[test]
    fn header_timestamps_are_stripped() {
        let diff = "--- m.py\t2020-01-01\n+++ m.py\t2020-01-02\n@@ -0,0 +1 @@\n+x = 1\n";
        assert_eq!(extract_from_diff(diff).unwrap()[0].file_path, "m.py");
    }
}
