//! Kloosterman value cache: one record per line in a plain-text tabular
//! format, re/im printed with 17 significant digits.
//!
//! Line formats:
//!   `tilde <n1> <n2> <m1> <d1> <d2> <re> <im>`
//!   `big <n1> <m2> <m1> <n2> <d1> <d2> <re> <im>`

use crate::Result;
use num_complex::Complex64;
use std::collections::HashMap;
use std::path::Path;

type C = Complex64;

/// Cache key: sum kind plus its integer arguments and moduli.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CacheKey {
    Tilde { n1: i64, n2: i64, m1: i64, d1: u64, d2: u64 },
    Big { n1: i64, m2: i64, m1: i64, n2: i64, d1: u64, d2: u64 },
}

/// In-memory Kloosterman value cache with text persistence.
#[derive(Debug, Default, Clone)]
pub struct KloostermanCache {
    entries: HashMap<CacheKey, C>,
}

impl KloostermanCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, key: CacheKey, value: C) {
        self.entries.insert(key, value);
    }

    pub fn get(&self, key: &CacheKey) -> Option<C> {
        self.entries.get(key).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut lines: Vec<String> = self
            .entries
            .iter()
            .map(|(k, v)| match *k {
                CacheKey::Tilde { n1, n2, m1, d1, d2 } => {
                    format!("tilde {n1} {n2} {m1} {d1} {d2} {:.16e} {:.16e}", v.re, v.im)
                }
                CacheKey::Big { n1, m2, m1, n2, d1, d2 } => {
                    format!("big {n1} {m2} {m1} {n2} {d1} {d2} {:.16e} {:.16e}", v.re, v.im)
                }
            })
            .collect();
        lines.sort();
        lines.join("\n") + if lines.is_empty() { "" } else { "\n" }
    }

    /// Parse cache text; corrupt lines are skipped with a warning, never
    /// silently.
    pub fn from_text(text: &str) -> (Self, Vec<String>) {
        let mut cache = Self::new();
        let mut warnings = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let kind = parts.next();
            let parsed: Option<(CacheKey, C)> = (|| {
                let mut next_i = || parts.next()?.parse::<i64>().ok();
                match kind? {
                    "tilde" => {
                        let n1 = next_i()?;
                        let n2 = next_i()?;
                        let m1 = next_i()?;
                        let d1 = u64::try_from(next_i()?).ok()?;
                        let d2 = u64::try_from(next_i()?).ok()?;
                        let re: f64 = parts.next()?.parse().ok()?;
                        let im: f64 = parts.next()?.parse().ok()?;
                        Some((CacheKey::Tilde { n1, n2, m1, d1, d2 }, C::new(re, im)))
                    }
                    "big" => {
                        let n1 = next_i()?;
                        let m2 = next_i()?;
                        let m1 = next_i()?;
                        let n2 = next_i()?;
                        let d1 = u64::try_from(next_i()?).ok()?;
                        let d2 = u64::try_from(next_i()?).ok()?;
                        let re: f64 = parts.next()?.parse().ok()?;
                        let im: f64 = parts.next()?.parse().ok()?;
                        Some((CacheKey::Big { n1, m2, m1, n2, d1, d2 }, C::new(re, im)))
                    }
                    _ => None,
                }
            })();
            match parsed {
                Some((k, v)) => cache.insert(k, v),
                None => warnings.push(format!("line {}: skipped corrupt record", idx + 1)),
            }
        }
        (cache, warnings)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        crate::config::write_atomic(path, &self.to_text())
    }

    pub fn load(path: &Path) -> Result<(Self, Vec<String>)> {
        if !path.exists() {
            return Ok((Self::new(), Vec::new()));
        }
        let text = std::fs::read_to_string(path)?;
        Ok(Self::from_text(&text))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponential_sums::{kloosterman_tilde, ModulusPair};

    #[test]
    fn roundtrip_is_text_exact() {
        let mut cache = KloostermanCache::new();
        let mut count = 0;
        for d2 in 1u64..=10 {
            for d1 in crate::arith::divisors(d2) {
                for n1 in -2i64..=2 {
                    let v = kloosterman_tilde(n1, 1, 2, ModulusPair::tilde(d1, d2).unwrap())
                        .unwrap()
                        .value;
                    cache.insert(
                        CacheKey::Tilde {
                            n1,
                            n2: 1,
                            m1: 2,
                            d1,
                            d2,
                        },
                        v,
                    );
                    count += 1;
                }
            }
        }
        assert!(count >= 100);
        let text = cache.to_text();
        let (back, warns) = KloostermanCache::from_text(&text);
        assert!(warns.is_empty());
        assert_eq!(back.len(), cache.len());
        // re-serialization is bit-for-text identical
        assert_eq!(back.to_text(), text);
        for (k, v) in cache.entries.iter() {
            assert_eq!(back.get(k).unwrap(), *v);
        }
    }

    #[test]
    fn corrupt_lines_warn_and_valid_prefix_loads() {
        let text = "tilde 1 1 1 1 3 -1.0000000000000000e0 0.0000000000000000e0\nbroken line here\n";
        let (cache, warns) = KloostermanCache::from_text(text);
        assert_eq!(cache.len(), 1);
        assert_eq!(warns.len(), 1);
    }

    #[test]
    fn empty_file_is_empty_cache() {
        let (cache, warns) = KloostermanCache::from_text("");
        assert!(cache.is_empty() && warns.is_empty());
    }
}
