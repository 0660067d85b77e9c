//! `key: value` reports printed by the command-line tool.

use std::fmt;

use crate::instance::{GeomInstance, Objects};

/// Ordered key/value lines. Keys are unique; setting a key twice replaces
/// the earlier value in place.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunReport {
    entries: Vec<(String, String)>,
}

impl RunReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, key: &str, value: impl fmt::Display) -> &mut Self {
        assert!(!key.contains(':') && !key.contains(char::is_whitespace), "bad report key `{key}`");
        let value = value.to_string().replace('\n', " ");
        match self.entries.iter_mut().find(|(k, _)| k == key) {
            Some(e) => e.1 = value,
            None => self.entries.push((key.to_string(), value)),
        }
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    pub fn parse(text: &str) -> Result<RunReport, String> {
        let mut r = RunReport::new();
        for (i, line) in text.lines().enumerate() {
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once(": ").ok_or_else(|| format!("line {}: missing `: `", i + 1))?;
            r.set(k, v);
        }
        Ok(r)
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.entries {
            writeln!(f, "{k}: {v}")?;
        }
        Ok(())
    }
}

/// One-line description such as `12 frames, model standard, diagonal 3`.
pub fn instance_summary(inst: &GeomInstance) -> String {
    let what = match inst.objects {
        Objects::Frames(_) => "frames",
        Objects::Rects(_) => "rects",
    };
    let mut s = format!("{} {what}, model {}", inst.len(), inst.model.as_str());
    if let Some(d) = inst.diagonal {
        s.push_str(&format!(", diagonal {}", d.d));
    }
    if let Some(v) = inst.vertical {
        s.push_str(&format!(", vertical {v}"));
    }
    if let Some(h) = inst.horizontal {
        s.push_str(&format!(", horizontal {h}"));
    }
    s
}
