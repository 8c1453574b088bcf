use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

/// Environment variable holding the default output format.
pub const FORMAT_ENV: &str = "HSC_FORMAT";

pub const KNOWN_KEYS: [&str; 5] = ["format", "seed", "cases", "nmax", "threads"];

/// Settings read from a `key = value` file. Blank lines and `#` comments are
/// ignored.
#[derive(Debug, Default, Clone)]
pub struct FileConfig {
    entries: BTreeMap<String, String>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = fs::read_to_string(path).map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        let mut entries = BTreeMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| format!("config line {}: expected key=value", n + 1))?;
            let k = k.trim();
            if !KNOWN_KEYS.contains(&k) {
                return Err(format!("config line {}: unknown key `{k}`", n + 1));
            }
            entries.insert(k.to_string(), v.trim().to_string());
        }
        Ok(Self { entries })
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    pub fn parsed<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>, String> {
        self.get(key)
            .map(|v| v.parse().map_err(|_| format!("config key `{key}`: invalid value `{v}`")))
            .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_pairs() {
        let c = FileConfig::parse("# defaults\nformat = csv\n\nseed=7\n").unwrap();
        assert_eq!(c.get("format"), Some("csv"));
        assert_eq!(c.parsed::<u64>("seed").unwrap(), Some(7));
        assert_eq!(c.parsed::<u64>("cases").unwrap(), None);
    }

    #[test]
    fn rejects_garbage() {
        assert!(FileConfig::parse("format csv").is_err());
        assert!(FileConfig::parse("colour = red").is_err());
        assert!(FileConfig::parse("seed = x").unwrap().parsed::<u64>("seed").is_err());
    }
}
