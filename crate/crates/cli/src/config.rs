//! Run configuration: defaults, then an optional key=value file, then flags.

use std::fs;
use std::path::Path;

use fermat_core::config::Bounds;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Output {
    Human,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub r: u32,
    pub bounds: Bounds,
    pub output: Output,
    pub timing: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            r: 2,
            bounds: Bounds::default(),
            output: Output::Human,
            timing: false,
        }
    }
}

fn positive(key: &str, v: &str) -> Result<u64, String> {
    match v.parse::<u64>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(format!("{key} must be a positive integer, got '{v}'")),
    }
}

impl RunConfig {
    /// Apply one `key = value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        let b = &mut self.bounds;
        match key {
            "r" => self.r = positive(key, value)? as u32,
            // zero is allowed here: the empty box is a meaningful search
            "sunit_exponent_bound" | "bound" => {
                b.sunit_exponent_bound = value
                    .parse()
                    .map_err(|_| format!("{key} must be a non-negative integer, got '{value}'"))?
            }
            "unit_height_bound" => b.unit_height_bound = positive(key, value)?,
            "class_enum_bound" => b.class_enum_bound = positive(key, value)?,
            "l_max" => b.l_max = positive(key, value)?,
            "max_candidates" => b.max_candidates = positive(key, value)?,
            "class_number" => b.user_class_number = Some(positive(key, value)?),
            "output" => {
                self.output = match value {
                    "human" => Output::Human,
                    "json" => Output::Json,
                    _ => return Err(format!("output must be human or json, got '{value}'")),
                }
            }
            "timing" => {
                self.timing = value
                    .parse()
                    .map_err(|_| format!("timing must be true or false, got '{value}'"))?
            }
            _ => return Err(format!("unknown configuration key '{key}'")),
        }
        Ok(())
    }

    /// Apply a configuration text. Blank lines and `#` comments are skipped.
    pub fn apply_text(&mut self, text: &str) -> Result<(), String> {
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key = value", n + 1))?;
            self.set(k.trim(), v.trim()).map_err(|e| format!("line {}: {e}", n + 1))?;
        }
        Ok(())
    }

    pub fn apply_file(&mut self, path: &Path) -> Result<(), String> {
        let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        self.apply_text(&text).map_err(|e| format!("{}: {e}", path.display()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_overrides_defaults() {
        let mut c = RunConfig::default();
        c.apply_text("# bounds\nbound = 6\nr=3\n\noutput = json  # trailing\nclass_number = 1\n")
            .unwrap();
        assert_eq!(c.bounds.sunit_exponent_bound, 6);
        assert_eq!(c.r, 3);
        assert_eq!(c.output, Output::Json);
        assert_eq!(c.bounds.user_class_number, Some(1));
        assert_eq!(c.bounds.l_max, Bounds::default().l_max);
    }

    #[test]
    fn rejects_bad_settings() {
        let mut c = RunConfig::default();
        assert!(c.apply_text("r = 0").is_err());
        assert!(c.apply_text("l_max = -4").is_err());
        assert!(c.apply_text("colour = red").is_err());
        assert!(c.apply_text("bound").is_err());
        assert!(c.apply_text("bound = 0").is_ok());
    }
}
