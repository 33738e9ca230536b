//! `key = value` configuration files for verification bounds.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use crate::error::CliError;

#[derive(Debug, Default)]
pub struct Config {
    path: String,
    values: BTreeMap<String, (usize, String)>,
}

impl Config {
    /// Reads `path` if given; an absent path yields an empty config.
    pub fn load(path: Option<&Path>, known: &[&str]) -> Result<Self, CliError> {
        let Some(path) = path else {
            return Ok(Config::default());
        };
        let text = std::fs::read_to_string(path)
            .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
        Config::parse(&path.display().to_string(), &text, known)
    }

    pub fn parse(path: &str, text: &str, known: &[&str]) -> Result<Self, CliError> {
        let mut values = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let no = idx + 1;
            let err = |message: String| CliError::Config { location: format!("{path}:{no}"), message };
            let (key, value) =
                line.split_once('=').ok_or_else(|| err(format!("expected `key = value`, found `{line}`")))?;
            let key = key.trim().replace('-', "_");
            if !known.contains(&key.as_str()) {
                return Err(err(format!("unknown key `{key}` (expected one of: {})", known.join(", "))));
            }
            if values.insert(key.clone(), (no, value.trim().to_string())).is_some() {
                return Err(err(format!("key `{key}` given twice")));
            }
        }
        Ok(Config { path: path.to_string(), values })
    }

    pub fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>, CliError>
    where
        T::Err: std::fmt::Display,
    {
        let Some((no, value)) = self.values.get(key) else {
            return Ok(None);
        };
        value.parse().map(Some).map_err(|e| CliError::Config {
            location: format!("{}:{no}", self.path),
            message: format!("{key}: `{value}`: {e}"),
        })
    }

    /// Comma-separated list value.
    pub fn get_list<T: FromStr>(&self, key: &str) -> Result<Option<Vec<T>>, CliError>
    where
        T::Err: std::fmt::Display,
    {
        let Some((no, value)) = self.values.get(key) else {
            return Ok(None);
        };
        value
            .split(',')
            .map(|item| {
                item.trim().parse().map_err(|e| CliError::Config {
                    location: format!("{}:{no}", self.path),
                    message: format!("{key}: `{item}`: {e}"),
                })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Some)
    }
}
