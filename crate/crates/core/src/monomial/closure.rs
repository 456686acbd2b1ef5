//! Integral closure of monomial ideals and the A+ check for `p_k = (x_k)`.

use super::ideal::MonomialIdeal;
use crate::error::{check_dim, Result};
use crate::family::SigmaSet;
use crate::geometry::rational::{int, rvec};
use crate::geometry::staircase::minimal_members;
use crate::geometry::{feasible_box, hull_normalize, staircase_antichain, BoxMode, Polytope, StaircaseMode};

fn exponent_polytope(gens: &[Vec<u32>]) -> Result<Polytope> {
    let points: Vec<_> = gens
        .iter()
        .map(|g| rvec(&g.iter().map(|&x| x as i64).collect::<Vec<_>>()))
        .collect();
    hull_normalize(&points)
}

/// Lattice points of the Newton polyhedron `conv(gens) + R_{>=0}^n`.
pub fn integral_closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if ideal.is_zero() || ideal.is_unit() {
        return Ok(ideal.clone());
    }
    let polytope = exponent_polytope(ideal.gens())?;
    let gens = minimal_members(&ideal.max_exponents(), |w| {
        let bound: Vec<_> = w.iter().map(|&x| int(x as i64)).collect();
        feasible_box(&polytope, &bound, BoxMode::Weak)
    })?;
    MonomialIdeal::new(ideal.n(), gens)
}

/// `Σ_{v ∈ P_Σ} (x^{⌈s v⌉})`: the ceiling staircase of `s·conv(Σ)`.
pub fn ceil_staircase_ideal(sigmas: &SigmaSet, s: u32) -> Result<MonomialIdeal> {
    let polytope = exponent_polytope(&sigmas.iter().cloned().collect::<Vec<_>>())?;
    let gens = staircase_antichain(&polytope, &int(s as i64), &vec![0; sigmas.dim()], StaircaseMode::Ceil)?;
    MonomialIdeal::new(sigmas.dim(), gens)
}

fn sigma_ideal(sigmas: &SigmaSet) -> Result<MonomialIdeal> {
    MonomialIdeal::new(sigmas.dim(), sigmas.iter().cloned().collect())
}

/// Condition A+ for the coordinate primes on one `Σ`: the closure of
/// `I(Σ)^s` equals the ceiling staircase of `P_Σ` for `s = 1..=max_s`.
pub fn check_a_plus(sigmas: &SigmaSet, n: usize, max_s: u32) -> Result<bool> {
    check_dim(n, sigmas.dim())?;
    let base = sigma_ideal(sigmas)?;
    for s in 1..=max_s {
        let closure = integral_closure(&base.power(s))?;
        if closure != ceil_staircase_ideal(sigmas, s)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `P_{Σ^s} = s·P_Σ` at the level of ceiling staircases: the staircase of
/// the `s`-fold sumset at scale 1 equals the staircase of `Σ` at scale `s`.
pub fn check_sumset_scaling(sigmas: &SigmaSet, s: u32) -> Result<bool> {
    Ok(ceil_staircase_ideal(&sigmas.sumset_power(s), 1)? == ceil_staircase_ideal(sigmas, s)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    #[test]
    fn closure_examples() {
        assert_eq!(
            integral_closure(&ideal(2, &[&[2, 0], &[0, 2]])).unwrap(),
            ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])
        );
        let principal = ideal(2, &[&[3, 1]]);
        assert_eq!(integral_closure(&principal).unwrap(), principal);
        let i = ideal(2, &[&[1, 0], &[0, 3]]);
        assert_eq!(integral_closure(&i).unwrap(), i);
        // (x^3, y^3) picks up x^2y and xy^2
        assert_eq!(
            integral_closure(&ideal(2, &[&[3, 0], &[0, 3]])).unwrap(),
            ideal(2, &[&[3, 0], &[2, 1], &[1, 2], &[0, 3]])
        );
        assert_eq!(integral_closure(&MonomialIdeal::zero(2)).unwrap(), MonomialIdeal::zero(2));
    }

    #[test]
    fn a_plus_examples() {
        let sigma = SigmaSet::new([vec![2, 0], vec![0, 2]]).unwrap();
        assert_eq!(
            integral_closure(&ideal(2, &[&[2, 0], &[0, 2]])).unwrap(),
            ceil_staircase_ideal(&sigma, 1).unwrap()
        );
        assert!(check_a_plus(&sigma, 2, 3).unwrap());
        assert!(check_a_plus(&SigmaSet::singleton(vec![1, 4, 2]), 3, 3).unwrap());
        assert!(check_sumset_scaling(&sigma, 3).unwrap());
    }
}
