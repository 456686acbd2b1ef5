//! Prime families and the test-ideal calculus over them.
//!
//! A family `p_1, …, p_m` is described entirely by its heights and by the
//! matrix `E[k][j] = e_k(ε_j)`, the order of `p_j` along `p_k`. Because the
//! order function is additive on products, `e(σ) = E·σ` for every exponent
//! vector, and every formula downstream only needs `E`, the heights and,
//! optionally, a procedure deciding containments among sums of
//! symbolic-power intersections.

mod calculus;
mod description;
mod json;

pub use calculus::{
    e_map, fpt_power, fpt_sum, jumping_numbers_power, jumping_numbers_sum, sum_polytope, tau_power, tau_sum,
};
pub use description::{normalize_description, Level, SymbolicPowerIntersection, TestIdealDescription};

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};

/// Exponents `σ` of a product `p_1^{σ_1} ⋯ p_m^{σ_m}`.
pub type ExponentVector = Vec<u32>;

/// A nonempty set `Σ` of exponent vectors, standing for `Σ_{σ∈Σ} I^σ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SigmaSet {
    elements: BTreeSet<ExponentVector>,
    dim: usize,
}

impl SigmaSet {
    pub fn new<I: IntoIterator<Item = ExponentVector>>(elements: I) -> Result<Self> {
        let elements: BTreeSet<ExponentVector> = elements.into_iter().collect();
        let dim = elements.iter().next().ok_or(Error::EmptyPointSet)?.len();
        for e in &elements {
            check_dim(dim, e.len())?;
        }
        Ok(Self { elements, dim })
    }

    pub fn singleton(sigma: ExponentVector) -> Self {
        let dim = sigma.len();
        Self { elements: BTreeSet::from([sigma]), dim }
    }

    pub fn iter(&self) -> impl Iterator<Item = &ExponentVector> {
        self.elements.iter()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The `s`-fold sumset `Σ^s`, for which `I(Σ)^s = I(Σ^s)`.
    pub fn sumset_power(&self, s: u32) -> SigmaSet {
        let mut current = BTreeSet::from([vec![0u32; self.dim]]);
        for _ in 0..s {
            current = current
                .iter()
                .flat_map(|a| {
                    self.elements
                        .iter()
                        .map(move |b| a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>())
                })
                .collect();
        }
        SigmaSet { elements: current, dim: self.dim }
    }
}

/// How much is known about one of conditions A, A+, B for a family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ConditionFlag {
    /// Established by a verification routine of this crate.
    Verified,
    AssertedFromLiterature { citation: String },
    Unknown,
}

impl ConditionFlag {
    pub fn is_unknown(&self) -> bool {
        matches!(self, ConditionFlag::Unknown)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conditions {
    #[serde(rename = "A")]
    pub a: ConditionFlag,
    #[serde(rename = "A_plus")]
    pub a_plus: ConditionFlag,
    #[serde(rename = "B")]
    pub b: ConditionFlag,
}

/// Family-specific decision procedure for containments between sums of
/// intersections `∩_k p_k^{(w_k)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ContainmentOracle {
    /// `p_k = (x_k)`: intersections are principal monomial ideals.
    Monomial,
    /// Determinantal ideals of a generic matrix, via the γ-functions of
    /// standard bitableaux.
    Gamma,
}

impl ContainmentOracle {
    pub fn name(self) -> &'static str {
        match self {
            ContainmentOracle::Monomial => "monomial",
            ContainmentOracle::Gamma => "gamma",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "monomial" => Ok(ContainmentOracle::Monomial),
            "gamma" => Ok(ContainmentOracle::Gamma),
            other => Err(Error::Config(format!("unknown containment oracle {other:?}"))),
        }
    }
}

/// Which half of the closed formula a computation relies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaPart {
    /// Products `I^σ`; needs A and B.
    Power,
    /// Sums of products `I(Σ)`; needs A+ and B.
    Sum,
}

/// The primes `p_1, …, p_m` as seen by the formulas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeFamily {
    name: String,
    heights: Vec<u32>,
    e_matrix: Vec<Vec<u32>>,
    conditions: Conditions,
    containment_oracle: Option<ContainmentOracle>,
    provenance: Option<String>,
}

impl PrimeFamily {
    pub fn new(
        name: impl Into<String>,
        heights: Vec<u32>,
        e_matrix: Vec<Vec<u32>>,
        conditions: Conditions,
        containment_oracle: Option<ContainmentOracle>,
    ) -> Result<Self> {
        let m = heights.len();
        if m == 0 {
            return Err(Error::InvalidParameter("a family needs at least one prime".into()));
        }
        check_dim(m, e_matrix.len())?;
        for (k, row) in e_matrix.iter().enumerate() {
            check_dim(m, row.len())?;
            if row[k] == 0 {
                return Err(Error::InvalidParameter(format!("E[{k}][{k}] must be at least 1")));
            }
        }
        if let Some(k) = heights.iter().position(|&h| h == 0) {
            return Err(Error::InvalidParameter(format!("height of prime {} must be positive", k + 1)));
        }
        Ok(Self {
            name: name.into(),
            heights,
            e_matrix,
            conditions,
            containment_oracle,
            provenance: None,
        })
    }

    pub fn with_provenance(mut self, provenance: impl Into<String>) -> Self {
        self.provenance = Some(provenance.into());
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn m(&self) -> usize {
        self.heights.len()
    }

    pub fn heights(&self) -> &[u32] {
        &self.heights
    }

    pub fn e_matrix(&self) -> &[Vec<u32>] {
        &self.e_matrix
    }

    pub fn conditions(&self) -> &Conditions {
        &self.conditions
    }

    pub fn containment_oracle(&self) -> Option<ContainmentOracle> {
        self.containment_oracle
    }

    pub fn provenance(&self) -> Option<&str> {
        self.provenance.as_deref()
    }

    /// Set when the formula used for `part` rests on an unknown condition.
    pub fn formula_caveat(&self, part: FormulaPart) -> Option<String> {
        let c = &self.conditions;
        let (first, label) = match part {
            FormulaPart::Power => (&c.a, "A and B"),
            FormulaPart::Sum => (&c.a_plus, "A+ and B"),
        };
        (first.is_unknown() || c.b.is_unknown()).then(|| format!("formula valid only under {label}"))
    }

    /// One line per condition that is not verified in this crate.
    pub fn flag_warnings(&self) -> Vec<String> {
        let c = &self.conditions;
        [("A", &c.a), ("A+", &c.a_plus), ("B", &c.b)]
            .into_iter()
            .filter_map(|(label, flag)| match flag {
                ConditionFlag::Verified => None,
                ConditionFlag::AssertedFromLiterature { citation } => Some(format!(
                    "condition {label} asserted from literature ({citation}), not verified"
                )),
                ConditionFlag::Unknown => Some(format!("condition {label} unknown for family {}", self.name)),
            })
            .collect()
    }

    /// Whether a `verified` claim on this family is backed by a verification
    /// routine in this crate.
    pub(crate) fn verification_backed(&self) -> bool {
        crate::monomial::is_monomial_family_shape(self)
    }

    /// Decides `∩_k p_k^{(w_k)} ⊆ Σ_{t∈targets} ∩_k p_k^{(t_k)}` when the
    /// family carries an oracle; `None` when undecided.
    pub fn contained_in_sum(&self, w: &[u32], targets: &[Vec<u32>]) -> Option<bool> {
        match self.containment_oracle? {
            ContainmentOracle::Monomial => Some(targets.iter().any(|t| crate::geometry::dominates(w, t))),
            ContainmentOracle::Gamma => {
                use crate::minors::{gamma_containment_sum, Containment};
                match gamma_containment_sum(w, targets, self.m(), None) {
                    Containment::Contained => Some(true),
                    Containment::NotContained(_) => Some(false),
                    Containment::Unknown => None,
                }
            }
        }
    }
}
