//! Squarefree monomial ideals as antichains of supports, and the closure of
//! `(x_1 ⋯ x_n)` under sums, intersections and colons.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest `n` accepted by [`cu_closure`].
pub const MAX_CU_VARIABLES: usize = 4;

/// Minimal generators as bitmasks of their supports, sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SquarefreeIdeal {
    n: usize,
    faces: Vec<u32>,
}

fn minimize(mut faces: Vec<u32>) -> Vec<u32> {
    faces.sort_by_key(|f| (f.count_ones(), *f));
    faces.dedup();
    let mut kept: Vec<u32> = Vec::new();
    for f in faces {
        if !kept.iter().any(|k| k & f == *k) {
            kept.push(f);
        }
    }
    kept.sort();
    kept
}

impl SquarefreeIdeal {
    pub fn new(n: usize, faces: Vec<u32>) -> Self {
        Self { n, faces: minimize(faces) }
    }

    pub fn unit(n: usize) -> Self {
        Self::new(n, vec![0])
    }

    /// `(x_1 ⋯ x_n)`.
    pub fn top(n: usize) -> Self {
        Self::new(n, vec![(1u32 << n) - 1])
    }

    pub fn faces(&self) -> &[u32] {
        &self.faces
    }

    pub fn is_zero(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn sum(&self, other: &Self) -> Self {
        Self::new(self.n, self.faces.iter().chain(&other.faces).copied().collect())
    }

    pub fn intersect(&self, other: &Self) -> Self {
        Self::new(
            self.n,
            self.faces.iter().flat_map(|a| other.faces.iter().map(move |b| a | b)).collect(),
        )
    }

    /// `I : J`; the colon by the zero ideal is the unit ideal.
    pub fn colon(&self, other: &Self) -> Self {
        let mut result = Self::unit(self.n);
        for j in &other.faces {
            let quotient = Self::new(self.n, self.faces.iter().map(|f| f & !j).collect());
            result = result.intersect(&quotient);
        }
        result
    }

    /// Generators as 0/1 exponent vectors.
    pub fn exponent_vectors(&self) -> Vec<Vec<u32>> {
        self.faces
            .iter()
            .map(|f| (0..self.n).map(|k| (f >> k) & 1).collect())
            .collect()
    }
}

/// Every nonzero squarefree monomial ideal on `n` variables, found by
/// testing each family of subsets of `{1..n}` for being an antichain.
pub fn enumerate_squarefree_ideals(n: usize) -> Result<BTreeSet<SquarefreeIdeal>> {
    if n > MAX_CU_VARIABLES {
        return Err(Error::InvalidParameter(format!("n = {n} exceeds {MAX_CU_VARIABLES}")));
    }
    let subsets = 1usize << n;
    let mut out = BTreeSet::new();
    for family in 1u64..(1u64 << subsets) {
        let members: Vec<u32> = (0..subsets as u32).filter(|s| family >> s & 1 == 1).collect();
        let antichain = members
            .iter()
            .all(|a| members.iter().all(|b| a == b || a & b != *a));
        if antichain {
            out.insert(SquarefreeIdeal { n, faces: members });
        }
    }
    Ok(out)
}

/// Least family containing `(x_1 ⋯ x_n)` and closed under pairwise sums,
/// pairwise intersections, and colons by squarefree monomial ideals.
pub fn cu_closure(n: usize) -> Result<BTreeSet<SquarefreeIdeal>> {
    if n == 0 || n > MAX_CU_VARIABLES {
        return Err(Error::InvalidParameter(format!("cu_closure needs 1 <= n <= {MAX_CU_VARIABLES}")));
    }
    let divisors: Vec<SquarefreeIdeal> = enumerate_squarefree_ideals(n)?.into_iter().collect();
    let mut reached: BTreeSet<SquarefreeIdeal> = BTreeSet::from([SquarefreeIdeal::top(n)]);
    let mut frontier: Vec<SquarefreeIdeal> = reached.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut fresh = Vec::new();
        let current: Vec<SquarefreeIdeal> = reached.iter().cloned().collect();
        for a in &frontier {
            let mut produced: Vec<SquarefreeIdeal> = divisors.iter().map(|j| a.colon(j)).collect();
            for b in &current {
                produced.push(a.sum(b));
                produced.push(a.intersect(b));
            }
            for ideal in produced {
                if !ideal.is_zero() && reached.insert(ideal.clone()) {
                    fresh.push(ideal);
                }
            }
        }
        frontier = fresh;
    }
    Ok(reached)
}
