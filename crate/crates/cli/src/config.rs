//! `key = value` configuration files.
//!
//! ```text
//! # defaults for verify
//! f = 4,5
//! char = 0,32003
//! seed = 0
//! budget_seconds = 900
//! output_dir = reports
//! format = json
//! ```

use std::path::{Path, PathBuf};

use crate::error::CliError;

/// Environment variable that overrides the configured output directory.
pub const OUTPUT_DIR_ENV: &str = "PFAFFKIT_OUTPUT_DIR";

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Config {
    pub f: Option<Vec<usize>>,
    pub characteristics: Option<Vec<u64>>,
    pub seed: Option<u64>,
    pub budget_seconds: Option<u64>,
    pub output_dir: Option<PathBuf>,
    pub format: Option<String>,
}

fn list<T: std::str::FromStr>(key: &str, value: &str) -> Result<Vec<T>, CliError> {
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| CliError::Usage(format!("config: bad value `{s}` for `{key}`"))))
        .collect()
}

fn scalar<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, CliError> {
    value.parse().map_err(|_| CliError::Usage(format!("config: bad value `{value}` for `{key}`")))
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut c = Config::default();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("config line {}: expected `key = value`", n + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "f" => c.f = Some(list(key, value)?),
                "char" | "characteristic" => c.characteristics = Some(list(key, value)?),
                "seed" => c.seed = Some(scalar(key, value)?),
                "budget_seconds" => c.budget_seconds = Some(scalar(key, value)?),
                "output_dir" => c.output_dir = Some(PathBuf::from(value)),
                "format" => c.format = Some(value.to_string()),
                other => return Err(CliError::Usage(format!("config line {}: unknown key `{other}`", n + 1))),
            }
        }
        Ok(c)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Output directory: flag, then environment, then file.
    pub fn output_dir(&self, flag: Option<&Path>) -> Option<PathBuf> {
        if let Some(p) = flag {
            return Some(p.to_path_buf());
        }
        match std::env::var_os(OUTPUT_DIR_ENV) {
            Some(v) if !v.is_empty() => Some(PathBuf::from(v)),
            _ => self.output_dir.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_keys() {
        let c = Config::parse("f = 4, 5\nchar=0,32003 # both\n\nseed = 7\nbudget_seconds = 60\noutput_dir = out\nformat = text\n")
            .unwrap();
        assert_eq!(c.f, Some(vec![4, 5]));
        assert_eq!(c.characteristics, Some(vec![0, 32003]));
        assert_eq!(c.seed, Some(7));
        assert_eq!(c.budget_seconds, Some(60));
        assert_eq!(c.output_dir, Some(PathBuf::from("out")));
        assert_eq!(c.format.as_deref(), Some("text"));
    }

    #[test]
    fn rejects_unknown_keys_and_bad_values() {
        assert!(matches!(Config::parse("colour = red"), Err(CliError::Usage(_))));
        assert!(matches!(Config::parse("seed = x"), Err(CliError::Usage(_))));
        assert!(matches!(Config::parse("seed"), Err(CliError::Usage(_))));
    }
}
