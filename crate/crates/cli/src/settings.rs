//! Threshold configuration resolution: built-ins, an optional TOML file of
//! named configurations, and command-line overrides.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::Args;
use serde::Deserialize;
use teddy_core::config::{builtin_configs, NamedConfig, ThresholdConfig};
use teddy_core::similarity::Measure;

/// Contents of a `--config` file.
///
/// ```toml
/// default = "strict"
///
/// [configs.strict]
/// measure = "ntr"
/// thresholds = [60, 60, 60, 60]
/// ```
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub default: Option<String>,
    #[serde(default)]
    pub configs: BTreeMap<String, ThresholdConfig>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self> {
        let raw = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
        let file: ConfigFile =
            toml::from_str(&raw).with_context(|| format!("invalid config file {}", path.display()))?;
        for (name, config) in &file.configs {
            config.validate().with_context(|| format!("config `{name}` in {}", path.display()))?;
        }
        Ok(file)
    }

    /// File configurations in name order.
    pub fn named(&self) -> Vec<NamedConfig> {
        self.configs.iter().map(|(name, config)| NamedConfig { name: name.clone(), config: *config }).collect()
    }
}

#[derive(Debug, Clone, Args)]
pub struct ThresholdArgs {
    /// TOML file with named threshold configurations
    #[arg(long = "config", value_name = "FILE")]
    pub config_file: Option<PathBuf>,
    /// Named configuration (C1-C4 or one from the config file)
    #[arg(long = "use", value_name = "NAME")]
    pub use_config: Option<String>,
    /// Similarity measure: ntr or tsr
    #[arg(long)]
    pub measure: Option<Measure>,
    /// Four comma-separated thresholds for r0..r3, or one for all levels
    #[arg(long, value_name = "T0,T1,T2,T3")]
    pub thresholds: Option<String>,
    /// Token n-gram size
    #[arg(long = "ngram", value_name = "N")]
    pub ngram_n: Option<usize>,
    /// Maximum number of hits per query
    #[arg(long = "top-k", value_name = "K")]
    pub top_k: Option<usize>,
}

pub fn parse_thresholds(raw: &str) -> Result<[u8; 4]> {
    let values: Vec<u8> = raw
        .split(',')
        .map(|p| p.trim().parse::<u8>().with_context(|| format!("bad threshold `{}`", p.trim())))
        .collect::<Result<_>>()?;
    match values.as_slice() {
        [t] => Ok([*t; 4]),
        [a, b, c, d] => Ok([*a, *b, *c, *d]),
        _ => bail!("expected one or four thresholds, got {}", values.len()),
    }
}

impl ThresholdArgs {
    pub fn file(&self) -> Result<ConfigFile> {
        match &self.config_file {
            Some(path) => ConfigFile::load(path),
            None => Ok(ConfigFile::default()),
        }
    }

    /// The effective configuration: a named base (from `--use`, the file's
    /// default, or `mode_default`), then individual flag overrides.
    pub fn resolve(&self, mode_default: ThresholdConfig) -> Result<ThresholdConfig> {
        let file = self.file()?;
        let name = self.use_config.as_ref().or(file.default.as_ref());
        let mut config = match name {
            Some(name) => lookup(name, &file)?,
            None => mode_default,
        };
        if let Some(measure) = self.measure {
            config.measure = measure;
        }
        if let Some(raw) = &self.thresholds {
            config.thresholds = parse_thresholds(raw)?;
        }
        if let Some(n) = self.ngram_n {
            config.ngram_n = n;
        }
        if let Some(k) = self.top_k {
            config.top_k = k;
        }
        config.validate()?;
        Ok(config)
    }
}

/// File configurations shadow built-ins of the same name.
fn lookup(name: &str, file: &ConfigFile) -> Result<ThresholdConfig> {
    if let Some(config) = file.configs.get(name) {
        return Ok(*config);
    }
    match builtin_configs().into_iter().find(|c| c.name.eq_ignore_ascii_case(name)) {
        Some(c) => Ok(c.config),
        None => bail!("unknown configuration `{name}`"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args() -> ThresholdArgs {
        ThresholdArgs {
            config_file: None,
            use_config: None,
            measure: None,
            thresholds: None,
            ngram_n: None,
            top_k: None,
        }
    }

    #[test]
    fn thresholds_parse() {
        assert_eq!(parse_thresholds("40").unwrap(), [40; 4]);
        assert_eq!(parse_thresholds("1, 2,3,4").unwrap(), [1, 2, 3, 4]);
        assert!(parse_thresholds("1,2").is_err());
        assert!(parse_thresholds("300").is_err());
    }

    #[test]
    fn flags_override_named_base() {
        let mut a = args();
        a.use_config = Some("c1".into());
        a.thresholds = Some("10".into());
        let c = a.resolve(ThresholdConfig::prevention_default()).unwrap();
        assert_eq!(c.measure, Measure::Tsr);
        assert_eq!(c.thresholds, [10; 4]);
    }

    #[test]
    fn mode_default_applies() {
        let c = args().resolve(ThresholdConfig::detection_default()).unwrap();
        assert_eq!(c, ThresholdConfig::detection_default());
    }

    #[test]
    fn config_file_defaults_and_shadows() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("teddy.toml");
        fs::write(&path, "default = \"C4\"\n[configs.C4]\nmeasure = \"tsr\"\nthresholds = [1, 2, 3, 4]\ntop_k = 3\n")
            .unwrap();
        let mut a = args();
        a.config_file = Some(path);
        let c = a.resolve(ThresholdConfig::detection_default()).unwrap();
        assert_eq!(c.measure, Measure::Tsr);
        assert_eq!(c.top_k, 3);
        a.use_config = Some("nope".into());
        assert!(a.resolve(ThresholdConfig::detection_default()).is_err());
    }

    #[test]
    fn invalid_config_file_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.toml");
        fs::write(&path, "[configs.x]\nmeasure = \"ntr\"\nthresholds = [1, 2, 3, 4]\nngram_n = 0\n").unwrap();
        let mut a = args();
        a.config_file = Some(path);
        assert!(a.resolve(ThresholdConfig::detection_default()).is_err());
    }
}
