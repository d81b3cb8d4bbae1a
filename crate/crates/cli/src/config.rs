//! Settings merged from an optional key=value file and the command-line flags.

use crate::args::{Format, Global};
use homext::enumerate::EnumCaps;
use std::path::{Path, PathBuf};

pub const DEFAULT_CACHE_DIR: &str = ".homext-cache";

#[derive(Debug, Clone)]
pub struct Settings {
    pub format: Format,
    pub workers: Option<usize>,
    /// `None` disables the cache.
    pub cache_dir: Option<PathBuf>,
    pub caps: EnumCaps,
}

/// Entries of a config file: `key = value` per line, `#` starts a comment.
pub fn parse_config(text: &str) -> Result<Vec<(String, String)>, String> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| format!("config line {}: expected key=value", i + 1))?;
        out.push((k.trim().to_string(), v.trim().to_string()));
    }
    Ok(out)
}

fn number(key: &str, v: &str) -> Result<usize, String> {
    v.parse()
        .map_err(|_| format!("config key `{key}`: `{v}` is not a number"))
}

impl Settings {
    pub fn resolve(global: &Global) -> Result<Settings, String> {
        let mut s = Settings {
            format: Format::Human,
            workers: None,
            cache_dir: Some(PathBuf::from(DEFAULT_CACHE_DIR)),
            caps: EnumCaps::default(),
        };
        if let Some(path) = &global.config {
            s.apply_file(path)?;
        }
        if let Some(f) = global.format {
            s.format = f;
        }
        if global.workers.is_some() {
            s.workers = global.workers;
        }
        if let Some(dir) = &global.cache_dir {
            s.cache_dir = Some(dir.clone());
        }
        if global.no_cache {
            s.cache_dir = None;
        }
        let caps = &mut s.caps;
        for (flag, slot) in [
            (global.cap_cubic, &mut caps.cubic),
            (global.cap_quartic, &mut caps.quartic),
            (global.cap_regular, &mut caps.regular),
            (global.cap_all, &mut caps.all_graphs),
        ] {
            if let Some(v) = flag {
                *slot = v;
            }
        }
        if s.workers == Some(0) {
            return Err("workers must be at least 1".into());
        }
        Ok(s)
    }

    fn apply_file(&mut self, path: &Path) -> Result<(), String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("config {}: {e}", path.display()))?;
        for (k, v) in parse_config(&text)? {
            match k.as_str() {
                "format" => {
                    self.format = match v.as_str() {
                        "human" => Format::Human,
                        "json" => Format::Json,
                        "csv" => Format::Csv,
                        _ => return Err(format!("config key `format`: unknown mode `{v}`")),
                    }
                }
                "workers" => self.workers = Some(number(&k, &v)?),
                "cache_dir" => self.cache_dir = Some(PathBuf::from(v)),
                "cache" => match v.as_str() {
                    "on" | "true" => {}
                    "off" | "false" => self.cache_dir = None,
                    _ => return Err(format!("config key `cache`: expected on/off, got `{v}`")),
                },
                "cap_cubic" => self.caps.cubic = number(&k, &v)?,
                "cap_quartic" => self.caps.quartic = number(&k, &v)?,
                "cap_regular" => self.caps.regular = number(&k, &v)?,
                "cap_all" => self.caps.all_graphs = number(&k, &v)?,
                _ => return Err(format!("config: unknown key `{k}`")),
            }
        }
        Ok(())
    }
}
