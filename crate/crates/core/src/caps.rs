//! Size caps for the exhaustive algorithms.
//!
//! Defaults can be overridden through the `MODLAT_CAPS` environment variable,
//! a comma-separated list such as `elements=8192,lattice=200000,homs=65536`.

use std::sync::OnceLock;

use serde::Serialize;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Caps {
    /// Maximum number of elements of a ring or module.
    pub elements: usize,
    /// Maximum number of nodes of a submodule lattice.
    pub lattice: usize,
    /// Maximum size of an enumerated Hom-set.
    pub homs: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            elements: 4096,
            lattice: 100_000,
            homs: 65_536,
        }
    }
}

impl Caps {
    pub fn parse(text: &str) -> Result<Caps> {
        let mut caps = Caps::default();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::InvalidSpec(format!("cap entry `{part}` lacks `=`")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::InvalidSpec(format!("cap value `{value}` is not a count")))?;
            match key.trim() {
                "elements" => caps.elements = value,
                "lattice" => caps.lattice = value,
                "homs" => caps.homs = value,
                other => return Err(Error::InvalidSpec(format!("unknown cap `{other}`"))),
            }
        }
        Ok(caps)
    }

    /// Process-wide caps, read once from `MODLAT_CAPS`. A malformed variable
    /// falls back to the defaults.
    pub fn current() -> Caps {
        static CAPS: OnceLock<Caps> = OnceLock::new();
        *CAPS.get_or_init(|| {
            std::env::var("MODLAT_CAPS")
                .ok()
                .and_then(|text| Caps::parse(&text).ok())
                .unwrap_or_default()
        })
    }

    pub(crate) fn check(limit: usize, actual: usize, what: &'static str) -> Result<()> {
        if actual > limit {
            Err(Error::CapExceeded {
                what,
                limit,
                actual,
            })
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_overrides_selected_caps() {
        let caps = Caps::parse("elements=10, homs=7").unwrap();
        assert_eq!(caps.elements, 10);
        assert_eq!(caps.homs, 7);
        assert_eq!(caps.lattice, Caps::default().lattice);
    }

    #[test]
    fn parse_rejects_unknown_keys() {
        assert!(Caps::parse("nodes=3").is_err());
        assert!(Caps::parse("elements").is_err());
        assert!(Caps::parse("elements=x").is_err());
    }
}
