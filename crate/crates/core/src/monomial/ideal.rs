//! Monomial ideals by minimal generators.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::geometry::{dominates, minimal_elements};

/// A monomial ideal of `k[x_1, …, x_n]`, stored as its minimal generating
/// exponent vectors in sorted order.
///
/// The zero ideal has no generators; the unit ideal has the zero vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Vec<u32>>,
}

#[derive(Deserialize)]
struct MonomialIdealDoc {
    n: usize,
    gens: Vec<Vec<u32>>,
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let doc = MonomialIdealDoc::deserialize(deserializer)?;
        MonomialIdeal::new(doc.n, doc.gens).map_err(serde::de::Error::custom)
    }
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: Vec<Vec<u32>>) -> Result<Self> {
        for g in &gens {
            check_dim(n, g.len())?;
        }
        Ok(Self::from_minimal(n, minimal_elements(gens)))
    }

    fn from_minimal(n: usize, gens: Vec<Vec<u32>>) -> Self {
        Self { n, gens }
    }

    pub fn unit(n: usize) -> Self {
        Self::from_minimal(n, vec![vec![0; n]])
    }

    pub fn zero(n: usize) -> Self {
        Self::from_minimal(n, Vec::new())
    }

    /// `(x_1, …, x_n)`.
    pub fn maximal(n: usize) -> Self {
        let gens = (0..n)
            .map(|k| (0..n).map(|j| u32::from(j == k)).collect())
            .collect();
        Self::new(n, gens).expect("consistent dimensions")
    }

    pub fn principal(exponents: Vec<u32>) -> Self {
        Self::from_minimal(exponents.len(), vec![exponents])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Vec<u32>] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.iter().all(|&x| x == 0))
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        check_dim(self.n, other.n)
    }

    pub fn contains(&self, monomial: &[u32]) -> Result<bool> {
        check_dim(self.n, monomial.len())?;
        Ok(self.gens.iter().any(|g| dominates(monomial, g)))
    }

    pub fn is_subset_of(&self, other: &Self) -> Result<bool> {
        self.same_ring(other)?;
        Ok(self.gens.iter().all(|g| other.gens.iter().any(|h| dominates(g, h))))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Self::from_minimal(self.n, minimal_elements(gens)))
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.iter().zip(b).map(|(x, y)| x + y).collect()))
            .collect();
        Ok(Self::from_minimal(self.n, minimal_elements(gens)))
    }

    pub fn power(&self, r: u32) -> Self {
        let mut result = Self::unit(self.n);
        let mut base = self.clone();
        let mut r = r;
        while r > 0 {
            if r & 1 == 1 {
                result = result.product(&base).expect("same ring");
            }
            r >>= 1;
            if r > 0 {
                base = base.product(&base).expect("same ring");
            }
        }
        result
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()))
            .collect();
        Ok(Self::from_minimal(self.n, minimal_elements(gens)))
    }

    /// `I : J`.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut result = Self::unit(self.n);
        for j in &other.gens {
            let quotient = Self::from_minimal(
                self.n,
                minimal_elements(
                    self.gens
                        .iter()
                        .map(|g| g.iter().zip(j).map(|(a, b)| a.saturating_sub(*b)).collect())
                        .collect(),
                ),
            );
            result = result.intersect(&quotient)?;
        }
        Ok(result)
    }

    /// `I^{[q]}`: every generator raised to the `q`-th power.
    pub fn bracket_power(&self, q: u32) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidParameter("bracket power needs q >= 1".into()));
        }
        let gens = self.gens.iter().map(|g| g.iter().map(|&x| x * q).collect()).collect();
        Ok(Self::from_minimal(self.n, minimal_elements(gens)))
    }

    /// `I^{[1/q]}`, the smallest ideal `J` with `I ⊆ J^{[q]}`.
    ///
    /// For a monomial `x^a` this is `x^{⌊a/q⌋}`.
    pub fn qth_root(&self, q: u32) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidParameter("root needs q >= 1".into()));
        }
        let gens = self.gens.iter().map(|g| g.iter().map(|&x| x / q).collect()).collect();
        Ok(Self::from_minimal(self.n, minimal_elements(gens)))
    }

    /// Largest exponent of each variable among the generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        (0..self.n)
            .map(|k| self.gens.iter().map(|g| g[k]).max().unwrap_or(0))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("ideal serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("monomial ideal JSON: {e}")))
    }
}

pub(crate) fn render_monomial(exponents: &[u32]) -> String {
    if exponents.iter().all(|&x| x == 0) {
        return "1".into();
    }
    exponents
        .iter()
        .enumerate()
        .filter(|(_, &x)| x > 0)
        .map(|(k, &x)| if x == 1 { format!("x{}", k + 1) } else { format!("x{}^{x}", k + 1) })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| render_monomial(g)).collect();
        write!(f, "({})", parts.join(", "))
    }
}
