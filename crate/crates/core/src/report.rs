//! Canonical JSON reports: sorted keys, fixed scalar formatting, trailing
//! newline. Reports parse back and regenerate byte for byte, and content
//! hashes are taken over the canonical form.

use serde::Serialize;
use sha2::{Digest, Sha256};

/// Semver of the report format emitted by this crate.
pub const REPORT_FORMAT_VERSION: &str = "1.0.0";

/// Serialize with sorted object keys (serde_json's default map is a
/// BTreeMap, so a round trip through Value sorts everything).
pub fn canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("report values are serializable");
    let mut s = serde_json::to_string_pretty(&v).expect("valid json");
    s.push('\n');
    s
}

/// SHA-256 of the canonical JSON, hex encoded.
pub fn content_hash<T: Serialize>(value: &T) -> String {
    let mut hasher = Sha256::new();
    hasher.update(canonical_json(value).as_bytes());
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}
