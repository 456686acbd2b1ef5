//! Integral closures of monomial ideals and condition A+ for Σ-families in
//! the monomial family.

use ftl::family::SigmaSet;
use ftl::monomial::{ceil_staircase_ideal, check_a_plus, integral_closure, MonomialIdeal};

fn main() -> ftl::Result<()> {
    let ideal = MonomialIdeal::new(2, vec![vec![4, 0], vec![0, 4]])?;
    println!("closure of {ideal} is {}", integral_closure(&ideal)?);

    let sigmas = SigmaSet::new(vec![vec![3, 0], vec![1, 1], vec![0, 2]])?;
    for s in 1..=3 {
        println!("s={s}: {}", ceil_staircase_ideal(&sigmas, s)?);
    }
    println!("A+ holds up to s=3: {}", check_a_plus(&sigmas, 2, 3)?);
    Ok(())
}
