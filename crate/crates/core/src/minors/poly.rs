//! Sparse polynomials with exact integer coefficients over the variables
//! `x_{ij}` of an `m × n` matrix.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{check_dim, Error, Result};
use crate::limits;

/// Terms keyed by exponent vector. Variables are flattened row by row, so
/// `x_{11} > x_{12} > … > x_{1n} > x_{21} > …` and the lexicographic order
/// on the keys is the lex term order on monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl SparsePolynomial {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(exps, BigInt::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_dim(self.nvars, other.nvars)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_dim(self.nvars, other.nvars)?;
        let work = self.terms.len() as u64 * other.terms.len() as u64;
        if work > limits::cost_ceiling().min(1_000_000) {
            return Err(Error::CostLimit(format!("product of {work} term pairs")));
        }
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    /// Exponent vector of the lex-largest monomial.
    pub fn lex_leading(&self) -> Result<Vec<u32>> {
        self.terms
            .keys()
            .next_back()
            .cloned()
            .ok_or_else(|| Error::InvalidParameter("zero polynomial has no leading term".into()))
    }

    /// Order of membership in the prime generated by the variables in
    /// `vars`: the least total degree in those variables over all terms.
    pub fn ord_in_variables(&self, vars: &[usize]) -> Result<u32> {
        self.terms
            .keys()
            .map(|e| vars.iter().map(|&v| e[v]).sum())
            .min()
            .ok_or_else(|| Error::InvalidParameter("zero polynomial has infinite order".into()))
    }
}

impl SparsePolynomial {
    /// Terms from the lex-largest down, variables named by `name`.
    pub fn render_with(&self, name: impl Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(v, &x)| if x == 1 { name(v) } else { format!("{}^{x}", name(v)) })
                .collect();
            let magnitude = c.abs();
            if mono.is_empty() {
                out.push_str(&magnitude.to_string());
            } else if magnitude.is_one() {
                out.push_str(&mono.join("*"));
            } else {
                out.push_str(&format!("{magnitude}*{}", mono.join("*")));
            }
        }
        out
    }

    /// Variables written `x_ij` for a matrix with `n` columns.
    pub fn render_matrix(&self, n: usize) -> String {
        self.render_with(|v| format!("x{}{}", v / n + 1, v % n + 1))
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(|v| format!("v{v}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_cancels() {
        let x = SparsePolynomial::variable(2, 0);
        let y = SparsePolynomial::variable(2, 1);
        let sum = x.add(&y).unwrap();
        let diff = x.add(&y.neg()).unwrap();
        let prod = sum.mul(&diff).unwrap();
        // x^2 - y^2
        assert_eq!(prod.len(), 2);
        assert_eq!(prod.coefficient(&[2, 0]), BigInt::from(1));
        assert_eq!(prod.coefficient(&[0, 2]), BigInt::from(-1));
        assert_eq!(prod.coefficient(&[1, 1]), BigInt::from(0));
        assert_eq!(prod.to_string(), "v0^2 - v1^2");
        assert_eq!(prod.neg().add(&SparsePolynomial::constant(2, 3.into())).unwrap().to_string(), "-v0^2 + v1^2 + 3");
        assert!(x.add(&x.neg()).unwrap().is_zero());
    }

    #[test]
    fn leading_terms_and_orders() {
        let x = SparsePolynomial::variable(3, 0);
        let z = SparsePolynomial::variable(3, 2);
        let p = x.mul(&z).unwrap().add(&z.mul(&z).unwrap()).unwrap();
        assert_eq!(p.lex_leading().unwrap(), vec![1, 0, 1]);
        assert_eq!(p.ord_in_variables(&[0]).unwrap(), 0);
        assert_eq!(p.ord_in_variables(&[2]).unwrap(), 1);
        assert_eq!(p.ord_in_variables(&[]).unwrap(), 0);
        assert!(SparsePolynomial::zero(3).lex_leading().is_err());
        assert!(SparsePolynomial::zero(3).ord_in_variables(&[0]).is_err());
        assert_eq!(SparsePolynomial::constant(3, 5.into()).lex_leading().unwrap(), vec![0, 0, 0]);
    }
}
