//! Polytopes in V-representation and the LP queries asked of them.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use super::lp::{LinearProgram, LpOutcome, Relation};
use super::rational::{Extended, Rational, RationalVector};
use crate::error::{check_dim, Error, Result};

/// Convex hull of a finite, nonempty generator list.
///
/// Generators are kept minimal (each one is a vertex) and sorted
/// lexicographically, so two polytopes are equal iff their generator lists are.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polytope {
    generators: Vec<RationalVector>,
    dim: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoxMode {
    /// `v_k < bound_k` for every `k`.
    Strict,
    /// `v_k <= bound_k` for every `k`.
    Weak,
}

impl Polytope {
    pub fn generators(&self) -> &[RationalVector] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Largest value of each coordinate over the polytope.
    pub fn max_coords(&self) -> RationalVector {
        (0..self.dim)
            .map(|k| {
                self.generators
                    .iter()
                    .map(|g| g[k].clone())
                    .max()
                    .expect("polytope is nonempty")
            })
            .collect()
    }

    /// The dilation `factor * P`.
    pub fn scaled(&self, factor: &Rational) -> Polytope {
        if factor.is_zero() {
            return Polytope {
                generators: vec![vec![Rational::zero(); self.dim]],
                dim: self.dim,
            };
        }
        let mut generators: Vec<RationalVector> = self
            .generators
            .iter()
            .map(|g| g.iter().map(|x| x * factor).collect())
            .collect();
        if factor.is_negative() {
            generators.sort();
        }
        Polytope { generators, dim: self.dim }
    }

    pub fn contains(&self, point: &[Rational]) -> Result<bool> {
        check_dim(self.dim, point.len())?;
        Ok(in_hull(point, &self.generators))
    }
}

/// Reduces a point list to the vertices of its convex hull.
pub fn hull_normalize(points: &[RationalVector]) -> Result<Polytope> {
    let first = points.first().ok_or(Error::EmptyPointSet)?;
    let dim = first.len();
    for p in points {
        check_dim(dim, p.len())?;
    }
    let mut kept: Vec<RationalVector> = points
        .iter()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut idx = 0;
    while idx < kept.len() {
        if kept.len() > 1 {
            let candidate = kept.remove(idx);
            if in_hull(&candidate, &kept) {
                continue;
            }
            kept.insert(idx, candidate);
        }
        idx += 1;
    }
    Ok(Polytope { generators: kept, dim })
}

fn in_hull(point: &[Rational], generators: &[RationalVector]) -> bool {
    let count = generators.len();
    let mut lp = LinearProgram::new(count).constraint(vec![Rational::one(); count], Relation::Eq, Rational::one());
    for (k, target) in point.iter().enumerate() {
        let row = generators.iter().map(|g| g[k].clone()).collect();
        lp = lp.constraint(row, Relation::Eq, target.clone());
    }
    lp.solve().is_feasible()
}

/// Is there `v` in `P` with `v <= bound` (weak) or `v < bound` (strict)?
pub fn feasible_box(polytope: &Polytope, bound: &[Rational], mode: BoxMode) -> Result<bool> {
    check_dim(polytope.dim, bound.len())?;
    let gens = &polytope.generators;
    let count = gens.len();
    match mode {
        BoxMode::Weak => {
            // cheap exits before building an LP
            if gens.iter().any(|g| g.iter().zip(bound).all(|(x, b)| x <= b)) {
                return Ok(true);
            }
            let mut lp = LinearProgram::new(count).constraint(vec![Rational::one(); count], Relation::Eq, Rational::one());
            for (k, b) in bound.iter().enumerate() {
                lp = lp.constraint(gens.iter().map(|g| g[k].clone()).collect(), Relation::Le, b.clone());
            }
            Ok(lp.solve().is_feasible())
        }
        BoxMode::Strict => {
            if gens.iter().any(|g| g.iter().zip(bound).all(|(x, b)| x < b)) {
                return Ok(true);
            }
            // maximize the uniform slack s >= 0 with v + s*1 <= bound
            let mut objective = vec![Rational::zero(); count + 1];
            objective[count] = -Rational::one();
            let mut sum_row = vec![Rational::one(); count + 1];
            sum_row[count] = Rational::zero();
            let mut lp = LinearProgram::new(count + 1)
                .minimize(objective)
                .constraint(sum_row, Relation::Eq, Rational::one());
            for (k, b) in bound.iter().enumerate() {
                let mut row: Vec<Rational> = gens.iter().map(|g| g[k].clone()).collect();
                row.push(Rational::one());
                lp = lp.constraint(row, Relation::Le, b.clone());
            }
            match lp.solve() {
                LpOutcome::Optimal { value, .. } => Ok(value.is_negative()),
                LpOutcome::Infeasible => Ok(false),
                LpOutcome::Unbounded => Err(Error::Internal("slack LP unbounded over a polytope".into())),
            }
        }
    }
}

/// `min over v in P of max over {k : d_k > 0} of v_k / d_k`.
///
/// Coordinates with `d_k = 0` are left out of the maximum. With no positive
/// weight at all the value is `+∞`.
pub fn min_max_ratio(polytope: &Polytope, weights: &[Rational]) -> Result<Extended> {
    check_dim(polytope.dim, weights.len())?;
    if weights.iter().any(|d| d.is_negative()) {
        return Err(Error::InvalidParameter("min_max_ratio weights must be nonnegative".into()));
    }
    let active: Vec<usize> = (0..weights.len()).filter(|&k| weights[k].is_positive()).collect();
    if active.is_empty() {
        return Ok(Extended::Infinite);
    }
    let gens = &polytope.generators;
    if gens.len() == 1 {
        let g = &gens[0];
        let best = active.iter().map(|&k| &g[k] / &weights[k]).max().expect("active nonempty");
        return Ok(Extended::Finite(best));
    }
    // variables: c_1..c_N, t+, t-
    let count = gens.len();
    let mut objective = vec![Rational::zero(); count + 2];
    objective[count] = Rational::one();
    objective[count + 1] = -Rational::one();
    let mut sum_row = vec![Rational::one(); count + 2];
    sum_row[count] = Rational::zero();
    sum_row[count + 1] = Rational::zero();
    let mut lp = LinearProgram::new(count + 2)
        .minimize(objective)
        .constraint(sum_row, Relation::Eq, Rational::one());
    for &k in &active {
        let mut row: Vec<Rational> = gens.iter().map(|g| g[k].clone()).collect();
        row.push(-weights[k].clone());
        row.push(weights[k].clone());
        lp = lp.constraint(row, Relation::Le, Rational::zero());
    }
    match lp.solve() {
        LpOutcome::Optimal { value, .. } => Ok(Extended::Finite(value)),
        other => Err(Error::Internal(format!("min-max LP ended with {other:?}"))),
    }
}
