//! Minimal lattice points of the region cut out by a polytope and a box.

use num_traits::{Signed, Zero};

use super::polytope::{feasible_box, BoxMode, Polytope};
use super::rational::{ceil_i64, floor_i64, int, Rational};
use crate::error::{check_dim, Error, Result};
use crate::limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StaircaseMode {
    /// `w` belongs iff some `v` in `P` has `lambda * v_k < w_k + h_k` for all `k`.
    Floor,
    /// `w` belongs iff some `v` in `P` has `s * v_k <= w_k` for all `k`.
    Ceil,
}

/// Componentwise `a <= b`.
pub fn dominates(b: &[u32], a: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Keeps the componentwise-minimal vectors, sorted and deduplicated.
pub fn minimal_elements(mut vectors: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    vectors.sort_by(|a, b| {
        let sa: u64 = a.iter().map(|&x| x as u64).sum();
        let sb: u64 = b.iter().map(|&x| x as u64).sum();
        sa.cmp(&sb).then_with(|| a.cmp(b))
    });
    vectors.dedup();
    let mut kept: Vec<Vec<u32>> = Vec::new();
    for v in vectors {
        if !kept.iter().any(|k| dominates(&v, k)) {
            kept.push(v);
        }
    }
    kept.sort();
    kept
}

/// Membership of a single lattice point in the up-set.
pub struct StaircaseRegion {
    scaled: Polytope,
    offsets: Vec<u32>,
    mode: StaircaseMode,
    everything: bool,
}

impl StaircaseRegion {
    pub fn new(polytope: &Polytope, lambda: &Rational, offsets: &[u32], mode: StaircaseMode) -> Result<Self> {
        check_dim(polytope.dim(), offsets.len())?;
        if lambda.is_negative() {
            return Err(Error::InvalidParameter(format!("negative coefficient {lambda}")));
        }
        if mode == StaircaseMode::Floor && offsets.iter().any(|&h| h == 0) {
            return Err(Error::InvalidParameter("floor-mode offsets must be >= 1".into()));
        }
        Ok(Self {
            scaled: polytope.scaled(lambda),
            offsets: offsets.to_vec(),
            mode,
            everything: lambda.is_zero(),
        })
    }

    pub fn contains(&self, w: &[u32]) -> Result<bool> {
        if self.everything {
            return Ok(true);
        }
        let bound: Vec<Rational> = match self.mode {
            StaircaseMode::Floor => w
                .iter()
                .zip(&self.offsets)
                .map(|(&x, &h)| int(x as i64 + h as i64))
                .collect(),
            StaircaseMode::Ceil => w.iter().map(|&x| int(x as i64)).collect(),
        };
        let mode = match self.mode {
            StaircaseMode::Floor => BoxMode::Strict,
            StaircaseMode::Ceil => BoxMode::Weak,
        };
        feasible_box(&self.scaled, &bound, mode)
    }

    /// Upper corner of a box that contains every minimal element.
    pub fn box_corner(&self) -> Vec<u32> {
        if self.everything {
            return vec![0; self.offsets.len()];
        }
        self.scaled
            .max_coords()
            .iter()
            .zip(&self.offsets)
            .map(|(m, &h)| {
                let corner = match self.mode {
                    StaircaseMode::Floor => floor_i64(m) + 1 - h as i64,
                    StaircaseMode::Ceil => ceil_i64(m),
                };
                corner.max(0) as u32
            })
            .collect()
    }
}

/// Enumerates all lattice points of the box `[0, corner]`, ordered by total
/// degree and then lexicographically.
pub fn box_points(corner: &[u32]) -> Result<Vec<Vec<u32>>> {
    let size = corner.iter().try_fold(1u64, |acc, &c| acc.checked_mul(c as u64 + 1));
    match size {
        Some(size) if size <= limits::cost_ceiling() => {}
        _ => {
            return Err(Error::CostLimit(format!(
                "enumeration box {corner:?} exceeds the cost ceiling {}",
                limits::cost_ceiling()
            )))
        }
    }
    let mut points = vec![Vec::with_capacity(corner.len())];
    for &c in corner {
        points = points
            .into_iter()
            .flat_map(|p| {
                (0..=c).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    points.sort_by(|a, b| {
        let sa: u64 = a.iter().map(|&x| x as u64).sum();
        let sb: u64 = b.iter().map(|&x| x as u64).sum();
        sa.cmp(&sb).then_with(|| a.cmp(b))
    });
    Ok(points)
}

/// Minimal elements of an up-set of the box, by degree-ordered scan with
/// dominance pruning.
pub fn minimal_members<F>(corner: &[u32], mut member: F) -> Result<Vec<Vec<u32>>>
where
    F: FnMut(&[u32]) -> Result<bool>,
{
    let mut found: Vec<Vec<u32>> = Vec::new();
    for w in box_points(corner)? {
        if found.iter().any(|f| dominates(&w, f)) {
            continue;
        }
        if member(&w)? {
            found.push(w);
        }
    }
    found.sort();
    Ok(found)
}

/// The minimal antichain generating the up-set described by `mode`.
///
/// In floor mode with `lambda = 0` this is the zero vector.
pub fn staircase_antichain(
    polytope: &Polytope,
    lambda: &Rational,
    offsets: &[u32],
    mode: StaircaseMode,
) -> Result<Vec<Vec<u32>>> {
    let region = StaircaseRegion::new(polytope, lambda, offsets, mode)?;
    minimal_members(&region.box_corner(), |w| region.contains(w))
}
