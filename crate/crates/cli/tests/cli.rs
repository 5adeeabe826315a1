mod common;

use std::process::{Command, Stdio};

use git2::Repository;
use serde_json::Value;

use common::{catalog_dir, catalog_snippet, code, commit_tree, fixture, root, teddy};

fn path_str(p: &std::path::Path) -> String {
    p.to_string_lossy().into_owned()
}

#[test]
fn check_diff_reports_and_exits_one() {
    let cat = path_str(&catalog_dir());
    let diff = path_str(&fixture("swap_enumerate.diff"));
    let out = teddy(&["check-diff", "--catalog", &cat, "--diff", &diff]);
    assert_eq!(code(&out), 1);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("### `app/util.py`, lines 4-6"));
    assert!(text.contains("a, b = b, a"));
    assert_eq!(text.matches("### ").count(), 2);
}

#[test]
fn check_diff_reads_standard_input_and_the_catalog_variable() {
    let diff = std::fs::read(fixture("py_only.diff")).unwrap();
    let mut child = Command::new(env!("CARGO_BIN_EXE_teddy"))
        .args(["check-diff", "--format", "json"])
        .env("TEDDY_CATALOG", catalog_dir())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    use std::io::Write;
    child.stdin.take().unwrap().write_all(&diff).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(code(&out), 0);
    let recs: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(recs, Value::Array(vec![]));
}

#[test]
fn usage_problems_exit_two() {
    let cat = path_str(&catalog_dir());
    let diff = path_str(&fixture("swap_enumerate.diff"));
    assert_eq!(code(&teddy(&["frobnicate"])), 2);
    assert_eq!(code(&teddy(&["check-diff", "--catalog", "/nonexistent", "--diff", &diff])), 2);
    assert_eq!(code(&teddy(&["check-diff", "--catalog", &cat, "--diff", &diff, "--use", "C9"])), 2);
    assert_eq!(code(&teddy(&["check-diff", "--catalog", &cat, "--diff", &diff, "--thresholds", "1,2"])), 2);
    assert_eq!(code(&teddy(&["check-diff", "--catalog", &cat, "--diff", &diff, "--ngram", "0"])), 2);
    assert_eq!(code(&teddy(&["check-diff", "--catalog", &cat, "--diff", &diff, "--format", "table"])), 2);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.diff");
    std::fs::write(&bad, "--- a/x.py\n+++ b/x.py\n@@ -1,x +1 @@\n+x = 1\n").unwrap();
    assert_eq!(code(&teddy(&["check-diff", "--catalog", &cat, "--diff", &path_str(&bad)])), 2);

    let toml = dir.path().join("teddy.toml");
    std::fs::write(&toml, "[configs.x]\nmeasure = \"ntr\"\nthresholds = [1, 2, 3]\n").unwrap();
    assert_eq!(code(&teddy(&["check-diff", "--catalog", &cat, "--diff", &diff, "--config", &path_str(&toml)])), 2);

    assert_eq!(code(&teddy(&["history", "--catalog", &cat, "--repo", &path_str(dir.path()), "--out", "x"])), 2);
}

#[test]
fn config_file_selects_a_named_configuration() {
    let dir = tempfile::tempdir().unwrap();
    let toml = dir.path().join("teddy.toml");
    std::fs::write(
        &toml,
        "default = \"never\"\n[configs.never]\nmeasure = \"ntr\"\nthresholds = [100, 100, 100, 100]\n",
    )
    .unwrap();
    let cat = path_str(&catalog_dir());
    let diff = path_str(&fixture("swap_enumerate.diff"));
    // Verbatim idioms score 100 at every level, so the strictest
    // configuration still reports them.
    let strict = teddy(&["check-diff", "--catalog", &cat, "--diff", &diff, "--config", &path_str(&toml)]);
    assert_eq!(code(&strict), 1);
    let loose = teddy(&[
        "check-diff",
        "--catalog",
        &cat,
        "--diff",
        &diff,
        "--config",
        &path_str(&toml),
        "--use",
        "C4",
        "--format",
        "json",
    ]);
    assert_eq!(code(&loose), 1);
    let recs: Value = serde_json::from_slice(&loose.stdout).unwrap();
    assert_eq!(recs.as_array().unwrap().len(), 2);
}

#[test]
fn out_flag_writes_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("recs.json");
    let cat = path_str(&catalog_dir());
    let diff = path_str(&fixture("swap_enumerate.diff"));
    let run = teddy(&["check-diff", "--catalog", &cat, "--diff", &diff, "--format", "json", "--out", &path_str(&out)]);
    assert_eq!(code(&run), 1);
    assert!(run.stdout.is_empty());
    let recs: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(recs[0]["suggestion"].as_str().unwrap(), catalog_snippet("enumerate-py-0"));
}

#[test]
fn scan_walks_directories() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::create_dir(dir.path().join("pkg")).unwrap();
    std::fs::write(dir.path().join("pkg/a.py"), catalog_snippet("swap-npy-0")).unwrap();
    std::fs::write(dir.path().join("pkg/b.txt"), catalog_snippet("swap-npy-0")).unwrap();
    let out = teddy(&["scan", "--catalog", &path_str(&catalog_dir()), &path_str(dir.path()), "--format", "json"]);
    assert_eq!(code(&out), 0);
    let findings: Value = serde_json::from_slice(&out.stdout).unwrap();
    let findings = findings.as_array().unwrap();
    assert_eq!(findings.len(), 1);
    assert_eq!(findings[0]["idiom_type"], "variable-swapping");
    assert_eq!(findings[0]["label"], "NPy");
    assert!(findings[0]["file_path"].as_str().unwrap().ends_with("pkg/a.py"));
}

#[test]
fn history_writes_jsonl_and_html() {
    let dir = tempfile::tempdir().unwrap();
    let repo_dir = dir.path().join("repo");
    let repo = Repository::init(&repo_dir).unwrap();
    commit_tree(&repo, &[("app.py", &catalog_snippet("fileread-npy-0"))], 0);
    commit_tree(&repo, &[("app.py", &catalog_snippet("fileread-py-0"))], 1);
    let out_dir = dir.path().join("out");
    let run = teddy(&[
        "history",
        "--catalog",
        &path_str(&catalog_dir()),
        "--repo",
        &path_str(&repo_dir),
        "--out",
        &path_str(&out_dir),
    ]);
    assert_eq!(code(&run), 0, "{}", String::from_utf8_lossy(&run.stderr));
    let jsonl = std::fs::read_to_string(out_dir.join("occurrences.jsonl")).unwrap();
    let labels: Vec<String> = jsonl
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap()["label"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(labels, vec!["NPy", "Py"]);
    let html = std::fs::read_to_string(out_dir.join("timeline.html")).unwrap();
    assert_eq!(html.matches("class=\"mark ").count(), 2);
}

#[test]
fn eval_single_and_sweep() {
    let cat = path_str(&catalog_dir());
    let truth = path_str(&root().join("data/corpus/truth.json"));
    let single = teddy(&["eval", "--catalog", &cat, "--truth", &truth, "--format", "json"]);
    assert_eq!(code(&single), 0, "{}", String::from_utf8_lossy(&single.stderr));
    let rows: Value = serde_json::from_slice(&single.stdout).unwrap();
    assert_eq!(rows[0]["name"], "default");
    assert_eq!(rows[0]["n_queries"], 60);

    let dir = tempfile::tempdir().unwrap();
    let toml = dir.path().join("teddy.toml");
    std::fs::write(&toml, "[configs.exact]\nmeasure = \"ntr\"\nthresholds = [100, 100, 100, 100]\n").unwrap();
    let sweep = teddy(&["eval", "--catalog", &cat, "--truth", &truth, "--sweep", "file", "--config", &path_str(&toml)]);
    assert_eq!(code(&sweep), 0);
    let table = String::from_utf8(sweep.stdout).unwrap();
    assert!(table.starts_with("Config"));
    assert!(table.lines().nth(1).unwrap().starts_with("exact"));

    let bad = dir.path().join("truth.json");
    std::fs::write(&bad, r#"{"corpus": [], "relevance": {}}"#).unwrap();
    assert_eq!(code(&teddy(&["eval", "--catalog", &cat, "--truth", &path_str(&bad)])), 2);
}

#[test]
fn catalog_validate_reports_violations() {
    let ok = teddy(&["catalog-validate", "--catalog", &path_str(&catalog_dir())]);
    assert_eq!(code(&ok), 0);
    assert!(String::from_utf8(ok.stdout).unwrap().contains("60 entries, valid"));

    let dir = tempfile::tempdir().unwrap();
    std::fs::create_dir(dir.path().join("snippets")).unwrap();
    std::fs::write(dir.path().join("snippets/a.py"), "x = 1\n").unwrap();
    std::fs::write(
        dir.path().join("catalog.json"),
        r#"[{"id": "a", "idiom_type": "set", "label": "Py", "counterpart_id": "b", "description": "d",
             "snippet_file": "snippets/a.py", "provenance": "original"}]"#,
    )
    .unwrap();
    let bad = teddy(&["catalog-validate", "--catalog", &path_str(dir.path())]);
    assert_eq!(code(&bad), 2);
    assert!(!bad.stdout.is_empty());
}
