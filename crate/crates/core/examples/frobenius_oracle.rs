//! Computes τ(I^λ) from the definition, as the stable member of the chain
//! (I^⌈λq⌉)^[1/q], and compares it with the Newton polygon formula.

use ftl::family::{tau_sum, SigmaSet};
use ftl::geometry::rat;
use ftl::monomial::{monomial_family, nu_e, tau_definition, FrobeniusConfig, MonomialIdeal};

fn main() -> ftl::Result<()> {
    let ideal = MonomialIdeal::new(2, vec![vec![2, 0], vec![0, 3]])?;
    let family = monomial_family(2)?;
    let sigmas = SigmaSet::new(ideal.gens().to_vec())?;
    for p in [2, 3, 5] {
        let cfg = FrobeniusConfig::new(p, 8)?.with_q_ceiling(1000);
        for lambda in [rat(1, 2), rat(5, 6), rat(4, 3)] {
            let (tau, stable) = tau_definition(&ideal, &lambda, &cfg)?;
            let formula = tau_sum(&family, &sigmas, &lambda)?;
            println!("p={p} λ={lambda}: chain {tau} (stable: {stable}), formula {formula}");
        }
        let nus: Vec<u64> = (1..=4).map(|e| nu_e(&ideal, p, e)).collect::<ftl::Result<_>>()?;
        println!("p={p} ν_e for e=1..4: {nus:?}");
    }
    Ok(())
}
