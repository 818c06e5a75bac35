//! JSON run records.

use serde::Serialize;
use sha2::{Digest, Sha256};

use lmd_core::engine::BoundReport;

/// Lowercase hex SHA-256 of the raw input bytes.
pub fn input_digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsRecord {
    pub n: usize,
    pub bipartite: bool,
    pub cover_method: &'static str,
    pub cover_size: usize,
    /// `n/4 + log₂ n`; only meaningful for bipartite graphs.
    pub bound_thm1: f64,
    pub bound_thm1_strict: bool,
    pub bound_thm2: f64,
    pub bound_thm2_strict: bool,
    /// Absent for edgeless graphs.
    pub bound_lemma2: Option<f64>,
    pub bound_lemma2_strict: bool,
}

impl BoundsRecord {
    pub fn new(report: BoundReport, bipartite: bool, cover_method: &'static str) -> Self {
        BoundsRecord {
            n: report.n,
            bipartite,
            cover_method,
            cover_size: report.cover_size,
            bound_thm1: report.bound_thm1,
            bound_thm1_strict: true,
            bound_thm2: report.bound_thm2,
            bound_thm2_strict: true,
            bound_lemma2: report.bound_lemma2,
            bound_lemma2_strict: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunRecord {
    pub command: &'static str,
    pub input_digest: String,
    pub algorithm: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_loc: Option<usize>,
    pub witness: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_kind: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundsRecord>,
    pub sets_examined: u128,
    pub wall_time_ms: u64,
    /// Command-specific extras.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<serde_json::Value>,
}

impl RunRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lmd_core::engine::bound_report;

    #[test]
    fn digest_is_stable() {
        assert_eq!(
            input_digest(b""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
        assert_eq!(input_digest(b"A_\n").len(), 64);
    }

    #[test]
    fn json_shape() {
        let r = RunRecord {
            command: "compute",
            input_digest: input_digest(b"x"),
            algorithm: "general".into(),
            delta_loc: Some(2),
            witness: vec![0, 1, 2],
            witness_kind: Some("deficient-cut"),
            bounds: Some(BoundsRecord::new(bound_report(8, 0).unwrap(), false, "greedy")),
            sets_examined: 92,
            wall_time_ms: 0,
            details: None,
        };
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["delta_loc"], 2);
        assert_eq!(v["bounds"]["bound_thm2"], 6.0);
        assert!(v["bounds"]["bound_lemma2"].is_null());
        assert!(v.get("details").is_none());
    }
}
