//! File formats: the JSON configuration schema and the hex seed format.
//!
//! A configuration file is `{"vertices": [...], "polygons": [[...], ...],
//! "multiplicity": {"v": m, ...}}`; the polygon list order is the
//! configuration ordering and polygon letters keep their order, so
//! parse/serialize round-trips are lossless. Multiplicities left out of
//! the map default to 1.

use std::collections::BTreeMap;

use brauerlab::config::{BrauerConfiguration, ConfigError};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigFile {
    pub vertices: Vec<String>,
    pub polygons: Vec<Vec<String>>,
    #[serde(default)]
    pub multiplicity: BTreeMap<String, u64>,
}

impl ConfigFile {
    pub fn to_config(&self) -> Result<BrauerConfiguration, ConfigError> {
        BrauerConfiguration::new(
            self.vertices.clone(),
            self.polygons.clone(),
            self.multiplicity.clone(),
        )
    }

    pub fn from_config(config: &BrauerConfiguration) -> Self {
        ConfigFile {
            vertices: config.vertices().to_vec(),
            polygons: config
                .polygons()
                .iter()
                .map(|p| p.letters().to_vec())
                .collect(),
            multiplicity: config
                .vertices()
                .iter()
                .map(|v| (v.clone(), config.mu(v).expect("declared vertex")))
                .collect(),
        }
    }
}

/// Parses whitespace-separated hex byte strings, most significant nibble
/// first, e.g. `AF C0 13 10 ...`. Case-insensitive.
pub fn parse_hex_bytes(text: &str) -> Result<Vec<u8>, String> {
    text.split_whitespace()
        .map(|tok| {
            if tok.len() != 2 {
                return Err(format!("token {tok:?} is not a two-digit hex byte"));
            }
            u8::from_str_radix(tok, 16).map_err(|_| format!("bad hex byte {tok:?}"))
        })
        .collect()
}

/// Parses a contiguous hex string (whitespace tolerated) into bytes.
pub fn parse_hex_string(text: &str) -> Result<Vec<u8>, String> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if !compact.len().is_multiple_of(2) {
        return Err(format!("hex string has odd length {}", compact.len()));
    }
    (0..compact.len() / 2)
        .map(|i| {
            u8::from_str_radix(&compact[2 * i..2 * i + 2], 16)
                .map_err(|_| format!("bad hex at position {}", 2 * i))
        })
        .collect()
}

/// Bits of a byte slice, most significant first.
pub fn bytes_to_bits(bytes: &[u8]) -> Vec<u8> {
    bytes
        .iter()
        .flat_map(|&b| (0..8).rev().map(move |j| (b >> j) & 1))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_roundtrip_is_lossless() {
        let text = r#"{
            "vertices": ["0", "1"],
            "polygons": [["0", "1", "1"], ["0", "1"]],
            "multiplicity": {"0": 1, "1": 1}
        }"#;
        let parsed: ConfigFile = serde_json::from_str(text).unwrap();
        let config = parsed.to_config().unwrap();
        let serialized = serde_json::to_string(&ConfigFile::from_config(&config)).unwrap();
        let reparsed: ConfigFile = serde_json::from_str(&serialized).unwrap();
        assert_eq!(reparsed.to_config().unwrap(), config);
        // Letter order inside polygons survives.
        assert_eq!(reparsed.polygons[0], vec!["0", "1", "1"]);
    }

    #[test]
    fn multiplicity_defaults_to_one() {
        let text = r#"{"vertices": ["a", "b"], "polygons": [["a", "b"]]}"#;
        let parsed: ConfigFile = serde_json::from_str(text).unwrap();
        let config = parsed.to_config().unwrap();
        assert_eq!(config.mu("a").unwrap(), 1);
    }

    #[test]
    fn hex_parsers() {
        assert_eq!(parse_hex_bytes("AF c0 13 10").unwrap(), vec![0xAF, 0xC0, 0x13, 0x10]);
        assert!(parse_hex_bytes("AFC").is_err());
        assert_eq!(parse_hex_string("AFC0").unwrap(), vec![0xAF, 0xC0]);
        assert_eq!(parse_hex_string("af c0").unwrap(), vec![0xAF, 0xC0]);
        assert!(parse_hex_string("AFC").is_err());
        assert_eq!(bytes_to_bits(&[0xA0]), vec![1, 0, 1, 0, 0, 0, 0, 0]);
    }
}
