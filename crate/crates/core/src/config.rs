//! Similarity threshold configurations.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::representation::LEVELS;
use crate::similarity::Measure;

pub const DEFAULT_NGRAM: usize = 4;
pub const DEFAULT_TOP_K: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThresholdConfig {
    pub measure: Measure,
    /// Minimum score per representation level, r0..r3.
    pub thresholds: [u8; LEVELS],
    #[serde(default = "default_ngram")]
    pub ngram_n: usize,
    #[serde(default = "default_top_k")]
    pub top_k: usize,
}

fn default_ngram() -> usize {
    DEFAULT_NGRAM
}

fn default_top_k() -> usize {
    DEFAULT_TOP_K
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("threshold T{level} = {value} is outside 0..=100")]
    ThresholdOutOfRange { level: usize, value: u8 },
    #[error("n-gram size must be at least 1")]
    ZeroNgram,
    #[error("top_k must be at least 1")]
    ZeroTopK,
}

impl ThresholdConfig {
    pub fn new(measure: Measure, thresholds: [u8; LEVELS]) -> Self {
        ThresholdConfig { measure, thresholds, ngram_n: DEFAULT_NGRAM, top_k: DEFAULT_TOP_K }
    }

    pub fn uniform(measure: Measure, threshold: u8) -> Self {
        Self::new(measure, [threshold; LEVELS])
    }

    /// The review-comment default: n-gram token ratio with every threshold at 40.
    pub fn prevention_default() -> Self {
        builtin("C4").expect("C4 is built in")
    }

    /// The history/scan default, tuned for recall.
    pub fn detection_default() -> Self {
        Self::uniform(Measure::Ntr, 20)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        for (level, &value) in self.thresholds.iter().enumerate() {
            if value > 100 {
                return Err(ConfigError::ThresholdOutOfRange { level, value });
            }
        }
        if self.ngram_n == 0 {
            return Err(ConfigError::ZeroNgram);
        }
        if self.top_k == 0 {
            return Err(ConfigError::ZeroTopK);
        }
        Ok(())
    }

    pub fn all_zero(&self) -> bool {
        self.thresholds.iter().all(|&t| t == 0)
    }

    pub fn qualifies(&self, scores: &[u8; LEVELS]) -> bool {
        scores.iter().zip(&self.thresholds).all(|(s, t)| s >= t)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedConfig {
    pub name: String,
    pub config: ThresholdConfig,
}

/// The four sweep configurations: both measures, with thresholds 0 and 40.
pub fn builtin_configs() -> Vec<NamedConfig> {
    [("C1", Measure::Tsr, 0), ("C2", Measure::Ntr, 0), ("C3", Measure::Tsr, 40), ("C4", Measure::Ntr, 40)]
        .into_iter()
        .map(|(name, measure, t)| NamedConfig { name: name.to_string(), config: ThresholdConfig::uniform(measure, t) })
        .collect()
}

pub fn builtin(name: &str) -> Option<ThresholdConfig> {
    builtin_configs().into_iter().find(|c| c.name.eq_ignore_ascii_case(name)).map(|c| c.config)
}
