#![allow(dead_code)]

use std::path::{Path, PathBuf};

use git2::{Oid, Repository, Signature, Time};
use teddy_core::catalog::{load_catalog, Catalog};

pub fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

pub fn bundled_catalog() -> Catalog {
    load_catalog(data_dir().join("catalog")).expect("bundled catalog loads")
}

pub fn snippet(catalog: &Catalog, id: &str) -> String {
    catalog.get(id).unwrap_or_else(|| panic!("no entry {id}")).snippet.clone()
}

/// Commits the full file set `files` on top of HEAD, removing anything not
/// listed. Times are fixed so commit ids are reproducible.
pub fn commit_tree(repo: &Repository, files: &[(&str, &str)], seq: i64) -> Oid {
    let root = repo.workdir().unwrap().to_path_buf();
    let mut index = repo.index().unwrap();
    index.clear().unwrap();
    for entry in std::fs::read_dir(&root).unwrap() {
        let path = entry.unwrap().path();
        if path.is_file() {
            std::fs::remove_file(path).unwrap();
        }
    }
    for (name, text) in files {
        let path = root.join(name);
        if let Some(parent) = path.parent() {
            std::fs::create_dir_all(parent).unwrap();
        }
        std::fs::write(&path, text).unwrap();
        index.add_path(Path::new(name)).unwrap();
    }
    index.write().unwrap();
    let tree = repo.find_tree(index.write_tree().unwrap()).unwrap();
    let sig = Signature::new("Test", "test@example.com", &Time::new(1_600_000_000 + seq * 60, 0)).unwrap();
    let parents: Vec<git2::Commit> = repo.head().ok().and_then(|h| h.peel_to_commit().ok()).into_iter().collect();
    let parent_refs: Vec<&git2::Commit> = parents.iter().collect();
    repo.commit(Some("HEAD"), &sig, &sig, &format!("commit {seq}"), &tree, &parent_refs).unwrap()
}
