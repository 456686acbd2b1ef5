use std::fmt;

use serde::Serialize;

use super::PrimeFamily;
use crate::geometry::minimal_elements;

/// `∩_k p_k^{(w_k)}`; a zero entry contributes the unit ideal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct SymbolicPowerIntersection(pub Vec<u32>);

impl SymbolicPowerIntersection {
    pub fn w(&self) -> &[u32] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl fmt::Display for SymbolicPowerIntersection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("(1)");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &x)| x > 0)
            .map(|(k, x)| format!("P{}^({x})", k + 1))
            .collect();
        f.write_str(&parts.join(" ∩ "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    /// Antichain of exponent vectors; distinct antichains may still name
    /// the same ideal.
    Representation,
    /// Additionally pruned with the family's containment oracle.
    OraclePruned,
}

/// `Σ_{w ∈ antichain} ∩_k p_k^{(w_k)}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TestIdealDescription {
    pub antichain: Vec<SymbolicPowerIntersection>,
    pub family: String,
    pub level: Level,
}

impl TestIdealDescription {
    pub fn unit(family: &PrimeFamily) -> Self {
        Self {
            antichain: vec![SymbolicPowerIntersection(vec![0; family.m()])],
            family: family.name().to_string(),
            level: Level::Representation,
        }
    }

    pub fn is_unit(&self) -> bool {
        self.antichain.iter().any(|w| w.is_unit())
    }

    pub fn vectors(&self) -> Vec<Vec<u32>> {
        self.antichain.iter().map(|w| w.0.clone()).collect()
    }

    /// Ideal equality as far as the family lets us decide it: exact
    /// containment both ways when an oracle answers, otherwise antichain
    /// equality.
    pub fn same_ideal(&self, other: &Self, family: &PrimeFamily) -> bool {
        if self.antichain == other.antichain {
            return true;
        }
        let (a, b) = (self.vectors(), other.vectors());
        let within = |xs: &[Vec<u32>], ys: &[Vec<u32>]| {
            xs.iter().all(|x| family.contained_in_sum(x, ys) == Some(true))
        };
        family.containment_oracle().is_some() && within(&a, &b) && within(&b, &a)
    }
}

impl fmt::Display for TestIdealDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.antichain.iter().map(|w| w.to_string()).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Drops dominated vectors and, with `prune`, vectors whose ideal the
/// family's oracle places inside the sum of the others.
pub fn normalize_description(raw: &[Vec<u32>], family: &PrimeFamily, prune: bool) -> TestIdealDescription {
    let mut kept = minimal_elements(raw.to_vec());
    let pruned = prune && family.containment_oracle().is_some();
    if pruned {
        let mut idx = 0;
        while idx < kept.len() {
            let others: Vec<Vec<u32>> = kept
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != idx)
                .map(|(_, w)| w.clone())
                .collect();
            if !others.is_empty() && family.contained_in_sum(&kept[idx], &others) == Some(true) {
                kept.remove(idx);
            } else {
                idx += 1;
            }
        }
    }
    TestIdealDescription {
        antichain: kept.into_iter().map(SymbolicPowerIntersection).collect(),
        family: family.name().to_string(),
        level: if pruned { Level::OraclePruned } else { Level::Representation },
    }
}
