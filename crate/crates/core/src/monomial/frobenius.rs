//! Frobenius computations by definition: `ν_e`, `q`-th roots of powers and
//! the stabilizing chain defining `τ(λ·I)`.

use std::collections::HashMap;

use num_traits::Signed;

use super::ideal::MonomialIdeal;
use super::packing::Packing;
use crate::error::{Error, Result};
use crate::geometry::rational::{ceil_i64, int, Rational};
use crate::geometry::staircase::minimal_members;
use crate::limits;

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusConfig {
    pub p: u64,
    pub e_max: u32,
    /// Number of trailing chain members that must agree.
    pub stabilization_window: u32,
    /// Largest `q = p^e` to compute; further levels are skipped.
    pub q_ceiling: u64,
}

impl FrobeniusConfig {
    pub fn new(p: u64, e_max: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        if e_max == 0 {
            return Err(Error::InvalidParameter("e_max must be positive".into()));
        }
        Ok(Self {
            p,
            e_max,
            stabilization_window: 2,
            q_ceiling: limits::cost_ceiling(),
        })
    }

    pub fn with_q_ceiling(mut self, q_ceiling: u64) -> Self {
        self.q_ceiling = q_ceiling;
        self
    }

    pub fn with_window(mut self, window: u32) -> Self {
        self.stabilization_window = window.max(1);
        self
    }

    /// The powers `q = p^e` actually visited, `e = 1, 2, …`.
    pub fn levels(&self) -> Vec<u64> {
        let mut out = Vec::new();
        let mut q = 1u64;
        for _ in 0..self.e_max {
            q = match q.checked_mul(self.p) {
                Some(q) if q <= self.q_ceiling => q,
                _ => break,
            };
            out.push(q);
        }
        out
    }
}

fn check_proper(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_unit() {
        Err(Error::InvalidParameter("ν_e is undefined for the unit ideal".into()))
    } else {
        Ok(())
    }
}

fn q_for(p: u64, e: u32) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    p.checked_pow(e)
        .filter(|&q| q <= i64::MAX as u64 / 64)
        .ok_or_else(|| Error::CostLimit(format!("{p}^{e} is too large")))
}

/// `ν_e(I) = max{r : I^r ⊄ m^[p^e]}`, by exact integer packing under the
/// corner `(q−1, …, q−1)`.
pub fn nu_e(ideal: &MonomialIdeal, p: u64, e: u32) -> Result<u64> {
    check_proper(ideal)?;
    let q = q_for(p, e)?;
    if ideal.is_zero() {
        return Ok(0);
    }
    let corner = vec![q as i64 - 1; ideal.n()];
    Ok(Packing::new(ideal.gens()).max_factors(&corner) as u64)
}

/// `ν_e(I)` by dynamic programming over the box `[0, q−1]^n`, where each
/// cell holds the most generator factors whose product divides it.
/// Rejected with [`Error::CostLimit`] above the cost ceiling.
pub fn nu_e_table(ideal: &MonomialIdeal, p: u64, e: u32) -> Result<u64> {
    check_proper(ideal)?;
    let q = q_for(p, e)?;
    if ideal.is_zero() {
        return Ok(0);
    }
    let n = ideal.n();
    let cells = (q as u128).pow(n as u32);
    if cells > limits::cost_ceiling() as u128 {
        return Err(Error::CostLimit(format!("ν_e table has {cells} cells")));
    }
    let side = q as usize;
    let stride: Vec<usize> = (0..n).map(|k| side.pow((n - 1 - k) as u32)).collect();
    let mut table = vec![0u64; cells as usize];
    let mut coords = vec![0usize; n];
    for idx in 0..table.len() {
        let mut rem = idx;
        for k in 0..n {
            coords[k] = rem / stride[k];
            rem %= stride[k];
        }
        let mut best = 0;
        for g in ideal.gens() {
            if g.iter().zip(&coords).all(|(&a, &c)| a as usize <= c) {
                let prev: usize = g.iter().zip(&stride).map(|(&a, &s)| a as usize * s).sum();
                best = best.max(table[idx - prev] + 1);
            }
        }
        table[idx] = best;
    }
    Ok(*table.last().expect("nonempty table"))
}

/// Computes `(I^N)^{[1/q]}` without expanding `I^N`:
/// `x^b` lies in it iff `N` generator factors fit under `q(b+1) − 1`.
pub struct FrobeniusOracle {
    ideal: MonomialIdeal,
    packing: Option<Packing>,
    cache: HashMap<Vec<i64>, i64>,
}

impl FrobeniusOracle {
    pub fn new(ideal: &MonomialIdeal) -> Self {
        let packing = (!ideal.is_zero() && !ideal.is_unit()).then(|| Packing::new(ideal.gens()));
        Self {
            ideal: ideal.clone(),
            packing,
            cache: HashMap::new(),
        }
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    fn max_factors(&mut self, cap: Vec<i64>) -> i64 {
        let packing = self.packing.as_ref().expect("proper nonzero ideal");
        *self.cache.entry(cap).or_insert_with_key(|cap| packing.max_factors(cap))
    }

    /// `(I^power)^{[1/q]}`.
    pub fn root_of_power(&mut self, power: u64, q: u64) -> Result<MonomialIdeal> {
        let n = self.ideal.n();
        if power == 0 || self.ideal.is_unit() {
            return Ok(MonomialIdeal::unit(n));
        }
        if self.ideal.is_zero() {
            return Ok(MonomialIdeal::zero(n));
        }
        let corner: Vec<u32> = self
            .ideal
            .max_exponents()
            .iter()
            .map(|&m| ((power as u128 * m as u128) / q as u128) as u32)
            .collect();
        let q = q as i64;
        let need = power as i64;
        let gens = minimal_members(&corner, |b| {
            let cap: Vec<i64> = b.iter().map(|&x| q * (x as i64 + 1) - 1).collect();
            Ok(self.max_factors(cap) >= need)
        })?;
        MonomialIdeal::new(n, gens)
    }

    /// The chain `J_e = (I^{⌈λ p^e⌉})^{[1/p^e]}` over the configured levels.
    pub fn tau_chain(&mut self, lambda: &Rational, cfg: &FrobeniusConfig) -> Result<Vec<MonomialIdeal>> {
        if lambda.is_negative() {
            return Err(Error::InvalidParameter(format!("negative coefficient {lambda}")));
        }
        let levels = cfg.levels();
        if levels.is_empty() {
            return Err(Error::CostLimit(format!(
                "p = {} exceeds the q ceiling {}",
                cfg.p, cfg.q_ceiling
            )));
        }
        let mut chain: Vec<MonomialIdeal> = Vec::with_capacity(levels.len());
        for q in levels {
            let power = ceil_i64(&(lambda * int(q as i64))) as u64;
            let next = self.root_of_power(power, q)?;
            if let Some(prev) = chain.last() {
                if !prev.is_subset_of(&next)? {
                    return Err(Error::Internal(format!(
                        "ascending chain broken at q = {q}: {prev} ⊄ {next}"
                    )));
                }
            }
            chain.push(next);
        }
        Ok(chain)
    }

    /// `τ(λ·I)` by definition: the last chain member, and whether the final
    /// `stabilization_window` members agree.
    pub fn tau(&mut self, lambda: &Rational, cfg: &FrobeniusConfig) -> Result<(MonomialIdeal, bool)> {
        let chain = self.tau_chain(lambda, cfg)?;
        let window = cfg.stabilization_window as usize;
        let last = chain.last().expect("nonempty chain").clone();
        let stabilized = chain.len() >= window && chain[chain.len() - window..].iter().all(|j| *j == last);
        Ok((last, stabilized))
    }
}

/// See [`FrobeniusOracle::tau`].
pub fn tau_definition(ideal: &MonomialIdeal, lambda: &Rational, cfg: &FrobeniusConfig) -> Result<(MonomialIdeal, bool)> {
    FrobeniusOracle::new(ideal).tau(lambda, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rational::rat;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    #[test]
    fn nu_examples() {
        assert_eq!(nu_e(&ideal(2, &[&[1, 0]]), 2, 3).unwrap(), 7);
        assert_eq!(nu_e(&ideal(2, &[&[1, 1]]), 2, 3).unwrap(), 7);
        // a copies of x1^2 and b of x2^3 with 2a <= 6, 3b <= 6
        let brute = (0..=3).flat_map(|a| (0..=2).map(move |b| a + b)).max().unwrap();
        assert_eq!(brute, 5);
        assert_eq!(nu_e(&ideal(2, &[&[2, 0], &[0, 3]]), 7, 1).unwrap(), 5);
    }

    #[test]
    fn nu_errors() {
        assert!(matches!(nu_e(&MonomialIdeal::unit(2), 2, 1), Err(Error::InvalidParameter(_))));
        assert_eq!(nu_e(&MonomialIdeal::zero(2), 2, 1).unwrap(), 0);
        assert!(nu_e(&ideal(1, &[&[1]]), 4, 1).is_err());
    }

    #[test]
    fn table_agrees_with_packing() {
        let ideals = [
            ideal(2, &[&[2, 0], &[0, 3]]),
            ideal(2, &[&[3, 1], &[1, 2]]),
            ideal(3, &[&[1, 1, 0], &[0, 2, 1], &[2, 0, 2]]),
            ideal(1, &[&[3]]),
        ];
        for i in &ideals {
            for (p, e) in [(2, 1), (2, 3), (3, 2), (5, 1), (7, 1)] {
                assert_eq!(nu_e(i, p, e).unwrap(), nu_e_table(i, p, e).unwrap(), "{i} p={p} e={e}");
            }
        }
    }

    #[test]
    fn table_respects_cost_ceiling() {
        let i = ideal(3, &[&[1, 1, 1]]);
        assert!(matches!(nu_e_table(&i, 3, 6), Err(Error::CostLimit(_))));
    }

    #[test]
    fn root_of_power_matches_expansion() {
        let ideals = [
            ideal(2, &[&[2, 0], &[0, 3]]),
            ideal(2, &[&[3, 1], &[1, 2], &[0, 4]]),
            ideal(3, &[&[1, 1, 0], &[0, 2, 1]]),
        ];
        for i in &ideals {
            let mut oracle = FrobeniusOracle::new(i);
            for power in 0..9u32 {
                for q in [2u32, 3, 4, 5] {
                    let expected = i.power(power).qth_root(q).unwrap();
                    assert_eq!(oracle.root_of_power(power as u64, q as u64).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn tau_examples() {
        let cfg = FrobeniusConfig::new(2, 6).unwrap();
        let (t, stable) = tau_definition(&ideal(2, &[&[1, 1]]), &int(1), &cfg).unwrap();
        assert_eq!((t, stable), (ideal(2, &[&[1, 1]]), true));

        let cfg = FrobeniusConfig::new(5, 6).unwrap();
        let (t, stable) = tau_definition(&ideal(2, &[&[2, 0], &[0, 3]]), &rat(5, 6), &cfg).unwrap();
        assert_eq!((t, stable), (MonomialIdeal::maximal(2), true));

        let (t, stable) = tau_definition(&ideal(2, &[&[2, 0], &[0, 3]]), &int(0), &cfg).unwrap();
        assert_eq!((t, stable), (MonomialIdeal::unit(2), true));
    }

    #[test]
    fn tau_below_threshold_is_unit() {
        let cfg = FrobeniusConfig::new(3, 5).unwrap();
        let (t, _) = tau_definition(&ideal(2, &[&[1, 1]]), &rat(11, 12), &cfg).unwrap();
        assert_eq!(t, MonomialIdeal::unit(2));
    }

    #[test]
    fn levels_respect_ceiling() {
        let cfg = FrobeniusConfig::new(3, 7).unwrap().with_q_ceiling(729);
        assert_eq!(cfg.levels(), vec![3, 9, 27, 81, 243, 729]);
        assert!(FrobeniusConfig::new(4, 3).is_err());
        let cfg = FrobeniusConfig::new(5, 2).unwrap().with_q_ceiling(3);
        assert!(tau_definition(&ideal(1, &[&[1]]), &int(1), &cfg).is_err());
    }
}
