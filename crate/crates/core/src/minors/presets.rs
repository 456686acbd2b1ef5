//! Determinantal families: the generic matrix is built in, the symmetric
//! and Pfaffian families are read from the JSON configs in `presets/`.

use crate::error::{Error, Result};
use crate::family::{ConditionFlag, Conditions, ContainmentOracle, PrimeFamily};

const SYMMETRIC_CONFIG: &str = include_str!("../../presets/symmetric.json");
const PFAFFIAN_CONFIG: &str = include_str!("../../presets/pfaffian.json");

const GENERIC_CITATION: &str =
    "De Concini-Eisenbud-Procesi 1980, Young diagrams and determinantal varieties; Bruns-Vetter, Determinantal Rings, LNM 1327";

fn asserted(citation: &str) -> Conditions {
    let flag = ConditionFlag::AssertedFromLiterature { citation: citation.to_string() };
    Conditions { a: flag.clone(), a_plus: flag.clone(), b: flag }
}

/// `E[k][j] = max(0, j − k + 1)`, 1-indexed.
fn staircase_matrix(m: usize) -> Vec<Vec<u32>> {
    (1..=m)
        .map(|k| (1..=m).map(|j| (j + 1).saturating_sub(k) as u32).collect())
        .collect()
}

/// `p_k` = ideal of `k`-minors of a generic `m × n` matrix, `k = 1..m`.
pub fn preset_generic(m: usize, n: usize) -> Result<PrimeFamily> {
    if m == 0 || m > n {
        return Err(Error::InvalidParameter(format!("generic preset needs 1 <= m <= n, got {m}x{n}")));
    }
    let heights = (1..=m).map(|k| ((m - k + 1) * (n - k + 1)) as u32).collect();
    PrimeFamily::new(
        format!("generic:{m}x{n}"),
        heights,
        staircase_matrix(m),
        asserted(GENERIC_CITATION),
        Some(ContainmentOracle::Gamma),
    )
}

/// Parse a preset config: a JSON array of family documents, each with a
/// non-empty `provenance`.
pub fn load_preset_config(text: &str) -> Result<Vec<PrimeFamily>> {
    let docs: Vec<serde_json::Value> =
        serde_json::from_str(text).map_err(|e| Error::Config(format!("preset config: {e}")))?;
    docs.iter()
        .map(|doc| {
            let provenance = doc.get("provenance").and_then(|p| p.as_str()).unwrap_or("");
            if provenance.trim().is_empty() {
                let name = doc.get("name").and_then(|n| n.as_str()).unwrap_or("?");
                return Err(Error::Config(format!("preset {name} has no provenance")));
            }
            PrimeFamily::from_json(&doc.to_string())
        })
        .collect()
}

fn pick(config: &str, kind: &str, m: usize) -> Result<PrimeFamily> {
    if m == 0 {
        return Err(Error::InvalidParameter(format!("{kind} preset needs m >= 1")));
    }
    load_preset_config(config)?
        .into_iter()
        .find(|f| f.m() == m)
        .ok_or_else(|| Error::InvalidParameter(format!("no {kind} preset with m = {m} in the shipped config")))
}

/// `p_k` = ideal of `k`-minors of a generic symmetric `m × m` matrix.
pub fn preset_symmetric(m: usize) -> Result<PrimeFamily> {
    pick(SYMMETRIC_CONFIG, "symmetric", m)
}

/// `p_k` = ideal of `2k`-Pfaffians of a generic skew-symmetric
/// `(2m+1) × (2m+1)` matrix.
pub fn preset_pfaffian(m: usize) -> Result<PrimeFamily> {
    pick(PFAFFIAN_CONFIG, "pfaffian", m)
}
