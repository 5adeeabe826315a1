//! The paired database of Pythonic idioms (Py) and their non-Pythonic
//! counterparts (NPy).
//!
//! A catalog lives in a directory holding a `catalog.json` manifest and one
//! `.py` file per snippet. Every entry names its counterpart: an entry of the
//! same idiom type with the opposite label.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lexer::tokenize;

pub const MANIFEST_FILE: &str = "catalog.json";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdiomType {
    DictionaryComprehension,
    Enumerate,
    FileReadingStatement,
    ListComprehension,
    IfStatement,
    StringFormatting,
    Set,
    Tuple,
    VariableSwapping,
    CodeFormatting,
}

impl IdiomType {
    pub const ALL: [IdiomType; 10] = [
        IdiomType::DictionaryComprehension,
        IdiomType::Enumerate,
        IdiomType::FileReadingStatement,
        IdiomType::ListComprehension,
        IdiomType::IfStatement,
        IdiomType::StringFormatting,
        IdiomType::Set,
        IdiomType::Tuple,
        IdiomType::VariableSwapping,
        IdiomType::CodeFormatting,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdiomType::DictionaryComprehension => "dictionary-comprehension",
            IdiomType::Enumerate => "enumerate",
            IdiomType::FileReadingStatement => "file-reading-statement",
            IdiomType::ListComprehension => "list-comprehension",
            IdiomType::IfStatement => "if-statement",
            IdiomType::StringFormatting => "string-formatting",
            IdiomType::Set => "set",
            IdiomType::Tuple => "tuple",
            IdiomType::VariableSwapping => "variable-swapping",
            IdiomType::CodeFormatting => "code-formatting",
        }
    }
}

impl fmt::Display for IdiomType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Label {
    Py,
    NPy,
}

impl Label {
    pub fn opposite(self) -> Label {
        match self {
            Label::Py => Label::NPy,
            Label::NPy => Label::Py,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Label::Py => "Py",
            Label::NPy => "NPy",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Original,
    Augmented,
}

/// One manifest record, before the snippet text is inlined.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifestEntry {
    pub id: String,
    pub idiom_type: IdiomType,
    pub label: Label,
    pub counterpart_id: String,
    pub description: String,
    pub snippet_file: String,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdiomEntry {
    pub id: String,
    pub idiom_type: IdiomType,
    pub label: Label,
    pub counterpart_id: String,
    pub description: String,
    pub snippet: String,
    pub snippet_file: String,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rule {
    DuplicateId,
    DanglingCounterpart { counterpart_id: String },
    CounterpartSameLabel { counterpart_id: String },
    CounterpartTypeMismatch { counterpart_id: String },
    EmptySnippet,
    LexError { line: usize, column: usize },
    UnpairedType { idiom_type: IdiomType, missing: Label },
}

impl Rule {
    pub fn name(&self) -> &'static str {
        match self {
            Rule::DuplicateId => "duplicate-id",
            Rule::DanglingCounterpart { .. } => "dangling-counterpart",
            Rule::CounterpartSameLabel { .. } => "counterpart-same-label",
            Rule::CounterpartTypeMismatch { .. } => "counterpart-type-mismatch",
            Rule::EmptySnippet => "empty-snippet",
            Rule::LexError { .. } => "lex-error",
            Rule::UnpairedType { .. } => "unpaired-type",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub entry_id: String,
    pub rule: Rule,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.entry_id, self.rule.name())?;
        match &self.rule {
            Rule::DanglingCounterpart { counterpart_id } => {
                write!(f, " (no entry named `{counterpart_id}`)")
            }
            Rule::CounterpartSameLabel { counterpart_id } => {
                write!(f, " (`{counterpart_id}` has the same label)")
            }
            Rule::CounterpartTypeMismatch { counterpart_id } => {
                write!(f, " (`{counterpart_id}` has a different idiom type)")
            }
            Rule::LexError { line, column } => write!(f, " at line {line}, column {column}"),
            Rule::UnpairedType { idiom_type, missing } => {
                write!(f, " ({idiom_type} has no {missing} entry)")
            }
            Rule::DuplicateId | Rule::EmptySnippet => Ok(()),
        }
    }
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("manifest not found: {0}")]
    ManifestNotFound(PathBuf),
    #[error("failed to read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid manifest {path}: {source}")]
    Manifest {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error("catalog failed validation:\n{}", format_violations(.0))]
    Validation(Vec<Violation>),
    #[error("no catalog entry with id `{0}`")]
    NotFound(String),
}

fn format_violations(violations: &[Violation]) -> String {
    violations.iter().map(|v| format!("  {v}")).collect::<Vec<_>>().join("\n")
}

#[derive(Debug, Clone)]
pub struct Catalog {
    pub entries: Vec<IdiomEntry>,
    pub source_path: PathBuf,
    by_id: HashMap<String, usize>,
}

impl PartialEq for Catalog {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries && self.source_path == other.source_path
    }
}

impl Catalog {
    /// Builds a catalog without validating it. With duplicate ids, lookups
    /// resolve to the first entry.
    pub fn from_entries(entries: Vec<IdiomEntry>, source_path: impl Into<PathBuf>) -> Self {
        let mut by_id = HashMap::with_capacity(entries.len());
        for (i, e) in entries.iter().enumerate() {
            by_id.entry(e.id.clone()).or_insert(i);
        }
        Catalog { entries, source_path: source_path.into(), by_id }
    }

    pub fn get(&self, id: &str) -> Option<&IdiomEntry> {
        self.by_id.get(id).map(|&i| &self.entries[i])
    }

    pub fn counterpart(&self, id: &str) -> Result<&IdiomEntry, CatalogError> {
        let entry = self.get(id).ok_or_else(|| CatalogError::NotFound(id.to_string()))?;
        self.get(&entry.counterpart_id).ok_or_else(|| CatalogError::NotFound(entry.counterpart_id.clone()))
    }

    pub fn with_label(&self, label: Label) -> impl Iterator<Item = &IdiomEntry> {
        self.entries.iter().filter(move |e| e.label == label)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Loads `<dir>/catalog.json`, inlines every snippet file and validates.
pub fn load_catalog(dir: impl AsRef<Path>) -> Result<Catalog, CatalogError> {
    let dir = dir.as_ref();
    let manifest_path = dir.join(MANIFEST_FILE);
    if !manifest_path.is_file() {
        return Err(CatalogError::ManifestNotFound(manifest_path));
    }
    let raw = fs::read_to_string(&manifest_path)
        .map_err(|source| CatalogError::Io { path: manifest_path.clone(), source })?;
    let manifest: Vec<ManifestEntry> =
        serde_json::from_str(&raw).map_err(|source| CatalogError::Manifest { path: manifest_path.clone(), source })?;

    let mut entries = Vec::with_capacity(manifest.len());
    for m in manifest {
        let snippet_path = dir.join(&m.snippet_file);
        let snippet =
            fs::read_to_string(&snippet_path).map_err(|source| CatalogError::Io { path: snippet_path, source })?;
        entries.push(IdiomEntry {
            id: m.id,
            idiom_type: m.idiom_type,
            label: m.label,
            counterpart_id: m.counterpart_id,
            description: m.description,
            snippet,
            snippet_file: m.snippet_file,
            provenance: m.provenance,
        });
    }
    let catalog = Catalog::from_entries(entries, dir);
    let violations = validate_catalog(&catalog);
    if violations.is_empty() {
        Ok(catalog)
    } else {
        Err(CatalogError::Validation(violations))
    }
}

/// Checks every entry and catalog invariant. An empty result means the
/// catalog is valid.
pub fn validate_catalog(catalog: &Catalog) -> Vec<Violation> {
    let mut violations = Vec::new();
    let mut seen = BTreeSet::new();
    let mut push = |entry_id: &str, rule: Rule| violations.push(Violation { entry_id: entry_id.to_string(), rule });

    for entry in &catalog.entries {
        if !seen.insert(entry.id.as_str()) {
            push(&entry.id, Rule::DuplicateId);
        }
        match catalog.get(&entry.counterpart_id) {
            None => push(&entry.id, Rule::DanglingCounterpart { counterpart_id: entry.counterpart_id.clone() }),
            Some(other) => {
                if other.label == entry.label {
                    push(&entry.id, Rule::CounterpartSameLabel { counterpart_id: other.id.clone() });
                }
                if other.idiom_type != entry.idiom_type {
                    push(&entry.id, Rule::CounterpartTypeMismatch { counterpart_id: other.id.clone() });
                }
            }
        }
        if entry.snippet.trim().is_empty() {
            push(&entry.id, Rule::EmptySnippet);
        } else if let Err(err) = tokenize(&entry.snippet) {
            let (line, column) = err.position();
            push(&entry.id, Rule::LexError { line, column });
        }
    }

    let mut labels_by_type: BTreeMap<IdiomType, (&str, BTreeSet<Label>)> = BTreeMap::new();
    for entry in &catalog.entries {
        labels_by_type
            .entry(entry.idiom_type)
            .or_insert_with(|| (entry.id.as_str(), BTreeSet::new()))
            .1
            .insert(entry.label);
    }
    for (idiom_type, (first_id, labels)) in labels_by_type {
        for label in [Label::Py, Label::NPy] {
            if !labels.contains(&label) {
                push(first_id, Rule::UnpairedType { idiom_type, missing: label });
            }
        }
    }
    violations
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(id: &str, ty: IdiomType, label: Label, counterpart: &str, snippet: &str) -> IdiomEntry {
        IdiomEntry {
            id: id.into(),
            idiom_type: ty,
            label,
            counterpart_id: counterpart.into(),
            description: String::new(),
            snippet: snippet.into(),
            snippet_file: format!("{id}.py"),
            provenance: Provenance::Original,
        }
    }

    fn swap_pair() -> Vec<IdiomEntry> {
        vec![
            entry("swap-py-0", IdiomType::VariableSwapping, Label::Py, "swap-npy-0", "a, b = b, a\n"),
            entry("swap-npy-0", IdiomType::VariableSwapping, Label::NPy, "swap-py-0", "temp = a\na = b\nb = temp\n"),
        ]
    }

    #[test]
    fn valid_pair_has_no_violations() {
        let catalog = Catalog::from_entries(swap_pair(), "mem");
        assert!(validate_catalog(&catalog).is_empty());
        assert_eq!(catalog.counterpart("swap-npy-0").unwrap().id, "swap-py-0");
    }

    #[test]
    fn duplicate_id() {
        let mut entries = swap_pair();
        entries.push(entries[0].clone());
        let v = validate_catalog(&Catalog::from_entries(entries, "mem"));
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].rule, Rule::DuplicateId);
        assert_eq!(v[0].entry_id, "swap-py-0");
    }

    #[test]
    fn dangling_counterpart_names_the_id() {
        let mut entries = swap_pair();
        entries[1].counterpart_id = "swap-py-9".into();
        let v = validate_catalog(&Catalog::from_entries(entries, "mem"));
        assert_eq!(
            v,
            vec![Violation {
                entry_id: "swap-npy-0".into(),
                rule: Rule::DanglingCounterpart { counterpart_id: "swap-py-9".into() },
            }]
        );
        assert!(v[0].to_string().contains("swap-py-9"));
    }

    #[test]
    fn unpaired_type() {
        let entries = vec![
            entry("e-py-0", IdiomType::Enumerate, Label::Py, "e-py-1", "for i, x in enumerate(xs):\n    pass\n"),
            entry("e-py-1", IdiomType::Enumerate, Label::Py, "e-py-0", "for i, y in enumerate(ys):\n    pass\n"),
        ];
        let v = validate_catalog(&Catalog::from_entries(entries, "mem"));
        let rules: Vec<_> = v.iter().map(|v| v.rule.name()).collect();
        assert_eq!(rules.iter().filter(|r| **r == "unpaired-type").count(), 1);
        assert!(rules.contains(&"counterpart-same-label"));
    }

    #[test]
    fn type_mismatch_and_lex_error() {
        let mut entries = swap_pair();
        entries[0].idiom_type = IdiomType::Tuple;
        entries[1].snippet = "temp = 'a\n".into();
        let v = validate_catalog(&Catalog::from_entries(entries, "mem"));
        let names: Vec<_> = v.iter().map(|v| v.rule.name()).collect();
        assert!(names.contains(&"counterpart-type-mismatch"));
        assert!(v.iter().any(|v| v.entry_id == "swap-npy-0" && v.rule == Rule::LexError { line: 1, column: 8 }));
    }

    #[test]
    fn empty_snippet() {
        let mut entries = swap_pair();
        entries[0].snippet = "  \n".into();
        let v = validate_catalog(&Catalog::from_entries(entries, "mem"));
        assert_eq!(v[0].rule, Rule::EmptySnippet);
    }

    #[test]
    fn counterpart_of_unknown_id() {
        let catalog = Catalog::from_entries(swap_pair(), "mem");
        assert!(matches!(catalog.counterpart("nonexistent"), Err(CatalogError::NotFound(id)) if id == "nonexistent"));
    }

    #[test]
    fn idiom_type_names_round_trip_through_serde() {
        for ty in IdiomType::ALL {
            let json = serde_json::to_string(&ty).unwrap();
            assert_eq!(json, format!("\"{}\"", ty.as_str()));
        }
    }
}
