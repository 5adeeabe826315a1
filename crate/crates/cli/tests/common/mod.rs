#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use git2::{Oid, Repository, Signature, Time};

pub fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

pub fn catalog_dir() -> PathBuf {
    root().join("data/catalog")
}

pub fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

pub fn catalog_snippet(id: &str) -> String {
    std::fs::read_to_string(catalog_dir().join("snippets").join(format!("{id}.py"))).unwrap()
}

pub fn teddy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_teddy"))
        .args(args)
        .env_remove("TEDDY_CATALOG")
        .env_remove("TEDDY_LOG")
        .output()
        .expect("teddy runs")
}

pub fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

/// Replaces the work tree with `files`, stages everything and commits on
/// HEAD with a fixed author and time.
pub fn commit_tree(repo: &Repository, files: &[(&str, &str)], seq: i64) -> Oid {
    let root = repo.workdir().unwrap().to_path_buf();
    for entry in std::fs::read_dir(&root).unwrap() {
        let path = entry.unwrap().path();
        if path.file_name().is_some_and(|n| n == ".git") {
            continue;
        }
        if path.is_dir() {
            std::fs::remove_dir_all(path).unwrap();
        } else {
            std::fs::remove_file(path).unwrap();
        }
    }
    let mut index = repo.index().unwrap();
    index.clear().unwrap();
    for (name, text) in files {
        let path = root.join(name);
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, text).unwrap();
        index.add_path(Path::new(name)).unwrap();
    }
    index.write().unwrap();
    let tree = repo.find_tree(index.write_tree().unwrap()).unwrap();
    let sig = Signature::new("Test", "test@example.com", &Time::new(1_600_000_000 + seq * 60, 0)).unwrap();
    let parent = repo.head().ok().and_then(|h| h.peel_to_commit().ok());
    let parents: Vec<&git2::Commit> = parent.iter().collect();
    repo.commit(Some("HEAD"), &sig, &sig, &format!("commit {seq}"), &tree, &parents).unwrap()
}
