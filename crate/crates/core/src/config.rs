//! Optional TOML configuration.
//!
//! ```toml
//! bruteforce_cap = 10   # largest n walked over all of S_n
//! exponent_cap = 64     # per-variable exponent bound in series arithmetic
//!
//! [set]                 # default integer specializations
//! u = 1
//! w = 1
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;
use thiserror::Error;

use crate::patternclass::DEFAULT_BRUTEFORCE_CAP;
use crate::polyring::{Var, DEFAULT_EXPONENT_CAP};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid config: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("unknown variable {0:?} in [set]")]
    UnknownVariable(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Config {
    pub bruteforce_cap: usize,
    pub exponent_cap: u16,
    pub set: BTreeMap<String, i64>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            bruteforce_cap: DEFAULT_BRUTEFORCE_CAP,
            exponent_cap: DEFAULT_EXPONENT_CAP,
            set: BTreeMap::new(),
        }
    }
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let cfg: Config = toml::from_str(text)?;
        cfg.specializations()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn specializations(&self) -> Result<Vec<(Var, i64)>, ConfigError> {
        self.set
            .iter()
            .map(|(k, &v)| {
                k.parse::<Var>()
                    .map(|var| (var, v))
                    .map_err(|_| ConfigError::UnknownVariable(k.clone()))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_defaults() {
        let c = Config::parse("exponent_cap = 20\n[set]\nu = 1\nw = 2\n").unwrap();
        assert_eq!(c.exponent_cap, 20);
        assert_eq!(c.bruteforce_cap, DEFAULT_BRUTEFORCE_CAP);
        assert_eq!(c.specializations().unwrap(), vec![(Var::U, 1), (Var::W, 2)]);
        assert_eq!(Config::parse("").unwrap(), Config::default());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(Config::parse("[set]\nz = 1"), Err(ConfigError::UnknownVariable(_))));
        assert!(Config::parse("colour = 1").is_err());
    }
}
