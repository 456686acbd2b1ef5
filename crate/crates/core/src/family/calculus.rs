//! Closed formulas for `τ(λ·I^σ)`, `τ(λ·I(Σ))`, thresholds and jumps.

use std::collections::BTreeSet;

use log::warn;
use num_traits::Signed;

use super::description::{normalize_description, Level, SymbolicPowerIntersection, TestIdealDescription};
use super::{FormulaPart, PrimeFamily, SigmaSet};
use crate::error::{check_dim, Error, Result};
use crate::geometry::rational::{floor_i64, int, Extended, Rational};
use crate::geometry::staircase::{box_points, staircase_antichain, StaircaseMode};
use crate::geometry::{hull_normalize, min_max_ratio, Polytope};

/// `e(σ) = E·σ`.
pub fn e_map(family: &PrimeFamily, sigma: &[u32]) -> Result<Vec<u64>> {
    check_dim(family.m(), sigma.len())?;
    Ok(family
        .e_matrix()
        .iter()
        .map(|row| row.iter().zip(sigma).map(|(&e, &s)| e as u64 * s as u64).sum())
        .collect())
}

fn check_lambda(lambda: &Rational) -> Result<()> {
    if lambda.is_negative() {
        Err(Error::InvalidParameter(format!("coefficient must be nonnegative, got {lambda}")))
    } else {
        Ok(())
    }
}

fn caveat(family: &PrimeFamily, part: FormulaPart) {
    if let Some(note) = family.formula_caveat(part) {
        warn!("family {}: {note}", family.name());
    }
}

fn power_exponents(family: &PrimeFamily, e: &[u64], lambda: &Rational) -> Vec<u32> {
    e.iter()
        .zip(family.heights())
        .map(|(&ek, &h)| {
            let raw = floor_i64(&(lambda * int(ek as i64))) + 1 - h as i64;
            raw.max(0) as u32
        })
        .collect()
}

/// `τ(λ·I^σ) = ∩_k p_k^{(⌊λ e_k(σ)⌋ + 1 − ht p_k)}`.
pub fn tau_power(family: &PrimeFamily, sigma: &[u32], lambda: &Rational) -> Result<SymbolicPowerIntersection> {
    check_lambda(lambda)?;
    caveat(family, FormulaPart::Power);
    let e = e_map(family, sigma)?;
    Ok(SymbolicPowerIntersection(power_exponents(family, &e, lambda)))
}

fn nonzero_sigma(sigma: &[u32]) -> Result<()> {
    if sigma.iter().all(|&s| s == 0) {
        Err(Error::InvalidParameter("σ = 0 gives the unit ideal".into()))
    } else {
        Ok(())
    }
}

/// `min_k ht(p_k) / e_k(σ)` over the primes containing `I^σ`.
pub fn fpt_power(family: &PrimeFamily, sigma: &[u32]) -> Result<Extended> {
    nonzero_sigma(sigma)?;
    let e = e_map(family, sigma)?;
    Ok(e.iter()
        .zip(family.heights())
        .filter(|(&ek, _)| ek > 0)
        .map(|(&ek, &h)| Extended::Finite(Rational::new((h as i64).into(), (ek as i64).into())))
        .min()
        .unwrap_or(Extended::Infinite))
}

/// Jumps of `λ ↦ τ(λ·I^σ)` in `(0, limit]`, each with the ideal on
/// `[λ_i, λ_{i+1})`.
pub fn jumping_numbers_power(
    family: &PrimeFamily,
    sigma: &[u32],
    limit: &Rational,
    level: Level,
) -> Result<Vec<(Rational, SymbolicPowerIntersection)>> {
    nonzero_sigma(sigma)?;
    if !limit.is_positive() {
        return Err(Error::InvalidParameter("limit must be positive".into()));
    }
    caveat(family, FormulaPart::Power);
    let e = e_map(family, sigma)?;
    let mut candidates = BTreeSet::new();
    for (&ek, &h) in e.iter().zip(family.heights()) {
        if ek == 0 {
            continue;
        }
        let mut n = h as i64;
        loop {
            let c = Rational::new(n.into(), (ek as i64).into());
            if &c > limit {
                break;
            }
            candidates.insert(c);
            n += 1;
        }
    }
    let prune = level == Level::OraclePruned && family.containment_oracle().is_some();
    let mut previous = vec![0u32; family.m()];
    let mut jumps = Vec::new();
    for c in candidates {
        let w = power_exponents(family, &e, &c);
        let changed = if prune {
            let forward = family.contained_in_sum(&w, std::slice::from_ref(&previous)) == Some(true);
            let backward = family.contained_in_sum(&previous, std::slice::from_ref(&w)) == Some(true);
            !(forward && backward)
        } else {
            w != previous
        };
        if changed {
            jumps.push((c, SymbolicPowerIntersection(w.clone())));
        }
        previous = w;
    }
    Ok(jumps)
}
/// `P_Σ`, the convex hull of `{e(σ) : σ ∈ Σ}`.
pub fn sum_polytope(family: &PrimeFamily, sigmas: &SigmaSet) -> Result<Polytope> {
    let points = sigmas
        .iter()
        .map(|s| Ok(e_map(family, s)?.iter().map(|&x| int(x as i64)).collect()))
        .collect::<Result<Vec<_>>>()?;
    hull_normalize(&points)
}

fn heights_rational(family: &PrimeFamily) -> Vec<Rational> {
    family.heights().iter().map(|&h| int(h as i64)).collect()
}

fn tau_on_polytope(family: &PrimeFamily, polytope: &Polytope, lambda: &Rational) -> Result<TestIdealDescription> {
    let raw = staircase_antichain(polytope, lambda, family.heights(), StaircaseMode::Floor)?;
    Ok(normalize_description(&raw, family, false))
}

/// `τ(λ·I(Σ)) = Σ_{v ∈ P_Σ} ∩_k p_k^{(⌊λ v_k⌋ + 1 − ht p_k)}`.
pub fn tau_sum(family: &PrimeFamily, sigmas: &SigmaSet, lambda: &Rational) -> Result<TestIdealDescription> {
    check_lambda(lambda)?;
    caveat(family, FormulaPart::Sum);
    tau_on_polytope(family, &sum_polytope(family, sigmas)?, lambda)
}

/// `1 / min_{v ∈ P_Σ} max_k v_k / ht(p_k)`.
pub fn fpt_sum(family: &PrimeFamily, sigmas: &SigmaSet) -> Result<Extended> {
    let polytope = sum_polytope(family, sigmas)?;
    Ok(min_max_ratio(&polytope, &heights_rational(family))?.recip_nonneg())
}

/// Threshold at which `∩_k p_k^{(w_k)}` leaves `τ(λ·I(Σ))`.
fn disappearance(polytope: &Polytope, family: &PrimeFamily, w: &[u32]) -> Result<Extended> {
    let weights: Vec<Rational> = w
        .iter()
        .zip(family.heights())
        .map(|(&x, &h)| int(x as i64 + h as i64))
        .collect();
    Ok(min_max_ratio(polytope, &weights)?.recip_nonneg())
}

/// Jumps of `λ ↦ τ(λ·I(Σ))` in `(0, limit]`.
///
/// Candidates are the thresholds of every `w` in the box that can carry a
/// minimal generator at `λ = limit`; the description is evaluated at each
/// and kept where it changes.
pub fn jumping_numbers_sum(
    family: &PrimeFamily,
    sigmas: &SigmaSet,
    limit: &Rational,
    level: Level,
) -> Result<Vec<(Rational, TestIdealDescription)>> {
    if !limit.is_positive() {
        return Err(Error::InvalidParameter("limit must be positive".into()));
    }
    caveat(family, FormulaPart::Sum);
    let polytope = sum_polytope(family, sigmas)?;
    let corner: Vec<u32> = polytope
        .max_coords()
        .iter()
        .zip(family.heights())
        .map(|(mk, &h)| (floor_i64(&(limit * mk)) + 1 - h as i64).max(0) as u32)
        .collect();
    let thresholds: Vec<(Vec<u32>, Extended)> = box_points(&corner)?
        .into_iter()
        .map(|w| {
            let t = disappearance(&polytope, family, &w)?;
            Ok((w, t))
        })
        .collect::<Result<_>>()?;
    let candidates: BTreeSet<Rational> = thresholds
        .iter()
        .filter_map(|(_, t)| t.finite())
        .filter(|t| t.is_positive() && *t <= limit)
        .cloned()
        .collect();

    // The box holds every minimal generator for λ <= limit, and w lies in
    // τ(λ·I(Σ)) exactly while λ is below its threshold.
    let prune = level == Level::OraclePruned && family.containment_oracle().is_some();
    let describe = |lambda: &Rational| -> Result<TestIdealDescription> {
        let bound = Extended::Finite(lambda.clone());
        let raw: Vec<Vec<u32>> = thresholds.iter().filter(|(_, t)| *t > bound).map(|(w, _)| w.clone()).collect();
        Ok(normalize_description(&raw, family, prune))
    };
    let mut previous = TestIdealDescription::unit(family);
    if prune {
        previous.level = Level::OraclePruned;
    }
    let mut jumps = Vec::new();
    for c in candidates {
        let current = describe(&c)?;
        let changed = if prune {
            !current.same_ideal(&previous, family)
        } else {
            current.antichain != previous.antichain
        };
        if changed {
            jumps.push((c, current.clone()));
        }
        previous = current;
    }
    Ok(jumps)
}
