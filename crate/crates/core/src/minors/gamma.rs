//! γ-functions of products of minors.
//!
//! For a product of minors of sizes `s_1, …, s_r` (its *shape*),
//! `γ_k = Σ_i max(0, s_i − k + 1)`. A standard bitableau of shape `s` lies in
//! `∩_k I_k^{(w_k)}` exactly when `γ_k(s) >= w_k` for all `k`, and these
//! bitableaux span the intersection. Containments between sums of such
//! intersections therefore reduce to a search over shapes.
//!
//! Search bound: a violating shape for `J_w ⊆ Σ_t J_t` can be shrunk to a
//! minimal shape with `γ >= w` and stays violating (γ only drops). In a
//! minimal shape every part is needed for some coordinate `k`; grouping the
//! parts by such a coordinate, the parts charged to `k` each add at least
//! one to `γ_k`, and dropping the smallest of them must break `γ_k >= w_k`,
//! so a group holds at most `w_k` parts. Minimal shapes therefore have at
//! most `Σ_k w_k` parts, and a search up to that length is complete.

use serde::Serialize;

use crate::limits;

/// A product of minors recorded by the sizes of its factors, sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct MinorShape(Vec<u32>);

impl MinorShape {
    pub fn new(mut sizes: Vec<u32>) -> Self {
        assert!(sizes.iter().all(|&s| s >= 1), "minor sizes are positive");
        sizes.sort_unstable();
        Self(sizes)
    }

    /// `σ_j` factors of size `j` for each `j`.
    pub fn from_exponents(sigma: &[u32]) -> Self {
        let sizes = sigma
            .iter()
            .enumerate()
            .flat_map(|(j, &count)| std::iter::repeat(j as u32 + 1).take(count as usize))
            .collect();
        Self::new(sizes)
    }

    pub fn sizes(&self) -> &[u32] {
        &self.0
    }

    /// Multiset union.
    pub fn join(&self, other: &MinorShape) -> MinorShape {
        MinorShape::new(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn gammas(&self, m: usize) -> Vec<u32> {
        (1..=m as u32).map(|k| gamma(self, k)).collect()
    }
}

pub fn gamma(shape: &MinorShape, k: u32) -> u32 {
    shape.0.iter().map(|&s| (s + 1).saturating_sub(k)).sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Containment {
    Contained,
    NotContained(MinorShape),
    Unknown,
}

fn covers(gammas: &[u32], w: &[u32]) -> bool {
    gammas.iter().zip(w).all(|(g, x)| g >= x)
}

/// Decides `∩_k I_k^{(w_k)} ⊆ Σ_{t} ∩_k I_k^{(t_k)}` for the ideals of
/// minors of a generic matrix with `m` rows.
///
/// Shapes up to `length_bound` parts are searched (default `Σ_k w_k`, which
/// is complete). A smaller bound that finds no witness yields `Unknown`.
pub fn gamma_containment_sum(w: &[u32], targets: &[Vec<u32>], m: usize, length_bound: Option<usize>) -> Containment {
    let complete = w.iter().map(|&x| x as usize).sum::<usize>();
    let bound = length_bound.unwrap_or(complete);
    let mut shape = Vec::new();
    let mut budget = limits::cost_ceiling();
    match search(w, targets, m, bound, 1, &mut shape, &mut budget) {
        Some(witness) => Containment::NotContained(MinorShape::new(witness)),
        None if budget == 0 => Containment::Unknown,
        None if bound >= complete => Containment::Contained,
        None => Containment::Unknown,
    }
}

/// Single-target form of [`gamma_containment_sum`].
pub fn gamma_containment(w: &[u32], w_prime: &[u32], m: usize, length_bound: Option<usize>) -> Containment {
    gamma_containment_sum(w, &[w_prime.to_vec()], m, length_bound)
}

fn search(
    w: &[u32],
    targets: &[Vec<u32>],
    m: usize,
    remaining: usize,
    min_size: u32,
    shape: &mut Vec<u32>,
    budget: &mut u64,
) -> Option<Vec<u32>> {
    if *budget == 0 {
        return None;
    }
    *budget -= 1;
    let gammas = MinorShape(shape.clone()).gammas(m);
    if covers(&gammas, w) {
        return if targets.iter().any(|t| covers(&gammas, t)) { None } else { Some(shape.clone()) };
    }
    if remaining == 0 {
        return None;
    }
    for size in min_size..=m as u32 {
        shape.push(size);
        let found = search(w, targets, m, remaining - 1, size, shape, budget);
        shape.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}
