//! Monomial ideals: exact arithmetic, integral closure, the Frobenius
//! definitions of `ν_e` and `τ`, and the coordinate-prime family.

mod closure;
mod frobenius;
mod ideal;
mod packing;
mod squarefree;

pub use closure::{ceil_staircase_ideal, check_a_plus, check_sumset_scaling, integral_closure};
pub use frobenius::{is_prime, nu_e, nu_e_table, tau_definition, FrobeniusConfig, FrobeniusOracle};
pub use ideal::MonomialIdeal;
pub use packing::Packing;
pub use squarefree::{cu_closure, enumerate_squarefree_ideals, SquarefreeIdeal, MAX_CU_VARIABLES};

use crate::error::{Error, Result};
use crate::family::{ConditionFlag, Conditions, ContainmentOracle, PrimeFamily, TestIdealDescription};

/// `p_k = (x_k)` in `k[x_1, …, x_n]`.
///
/// A and A+ are verified by [`check_a_plus`]; B is witnessed by
/// `x_1 ⋯ x_n`, its own square-free initial term.
pub fn monomial_family(n: usize) -> Result<PrimeFamily> {
    if n == 0 {
        return Err(Error::InvalidParameter("monomial family needs n >= 1".into()));
    }
    let e_matrix = (0..n).map(|k| (0..n).map(|j| u32::from(j == k)).collect()).collect();
    PrimeFamily::new(
        format!("monomial:{n}"),
        vec![1; n],
        e_matrix,
        Conditions {
            a: ConditionFlag::Verified,
            a_plus: ConditionFlag::Verified,
            b: ConditionFlag::Verified,
        },
        Some(ContainmentOracle::Monomial),
    )
}

pub(crate) fn is_monomial_family_shape(family: &PrimeFamily) -> bool {
    let m = family.m();
    family.containment_oracle() == Some(ContainmentOracle::Monomial)
        && family.heights().iter().all(|&h| h == 1)
        && family
            .e_matrix()
            .iter()
            .enumerate()
            .all(|(k, row)| row.iter().enumerate().all(|(j, &x)| x == u32::from(j == k)))
        && m >= 1
}

/// The monomial ideal a description names in the coordinate-prime family:
/// `∩_k (x_k)^{(w_k)} = (x^w)`.
pub fn description_ideal(description: &TestIdealDescription, n: usize) -> Result<MonomialIdeal> {
    MonomialIdeal::new(n, description.vectors())
}

/// `Σ` for a monomial ideal in the coordinate-prime family: its generators.
pub fn sigma_of(ideal: &MonomialIdeal) -> Result<crate::family::SigmaSet> {
    crate::family::SigmaSet::new(ideal.gens().iter().cloned())
}
