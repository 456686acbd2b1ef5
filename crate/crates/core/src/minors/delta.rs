//! Minors of a generic matrix, the product `Δ` of the minors `δ_i`, `g_j`,
//! `h_j`, and the checks on its initial term.

use num_bigint::BigInt;
use serde::Serialize;

use super::poly::SparsePolynomial;
use crate::error::{Error, Result};

/// Largest minor expanded by [`expand_minor`].
pub const MAX_MINOR_SIZE: usize = 5;

/// `[a_1, …, a_k | b_1, …, b_k]` inside an `m × n` matrix, 1-indexed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Minor {
    rows: Vec<usize>,
    cols: Vec<usize>,
    m: usize,
    n: usize,
}

fn strictly_increasing(xs: &[usize]) -> bool {
    xs.windows(2).all(|w| w[0] < w[1])
}

impl Minor {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>, m: usize, n: usize) -> Result<Self> {
        if rows.is_empty() || rows.len() != cols.len() {
            return Err(Error::InvalidParameter("a minor needs equally many rows and columns".into()));
        }
        if !strictly_increasing(&rows) || !strictly_increasing(&cols) {
            return Err(Error::InvalidParameter("minor indices must increase strictly".into()));
        }
        if rows[0] == 0 || cols[0] == 0 || *rows.last().unwrap() > m || *cols.last().unwrap() > n {
            return Err(Error::InvalidParameter(format!("minor outside the {m}x{n} matrix")));
        }
        Ok(Self { rows, cols, m, n })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Cells `(rows_t, cols_t)` of the main diagonal.
    pub fn diagonal(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().copied().zip(self.cols.iter().copied())
    }
}

impl std::fmt::Display for Minor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let join = |xs: &[usize]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "[{}|{}]", join(&self.rows), join(&self.cols))
    }
}

fn check_grid(m: usize, n: usize) -> Result<()> {
    if m == 0 || m > n {
        return Err(Error::InvalidParameter(format!("need 1 <= m <= n, got {m}x{n}")));
    }
    Ok(())
}

/// `δ_0, …, δ_{n−m}`, then `g_1, …, g_{m−1}`, then `h_1, …, h_{m−1}`.
pub fn delta_minors(m: usize, n: usize) -> Result<Vec<Minor>> {
    check_grid(m, n)?;
    let range = |a: usize, b: usize| (a..=b).collect::<Vec<_>>();
    let mut out = Vec::new();
    for i in 0..=n - m {
        out.push(Minor::new(range(1, m), range(i + 1, m + i), m, n)?);
    }
    for j in 1..m {
        out.push(Minor::new(range(j + 1, m), range(1, m - j), m, n)?);
    }
    for j in 1..m {
        out.push(Minor::new(range(1, m - j), range(n - m + j + 1, n), m, n)?);
    }
    Ok(out)
}

/// Do the main diagonals cover every cell of the `m × n` grid exactly once?
pub fn diagonal_cover_check(minors: &[Minor], m: usize, n: usize) -> bool {
    let mut counts = vec![0u32; m * n];
    for minor in minors {
        for (i, j) in minor.diagonal() {
            if i == 0 || j == 0 || i > m || j > n {
                return false;
            }
            counts[(i - 1) * n + (j - 1)] += 1;
        }
    }
    counts.iter().all(|&c| c == 1)
}

/// Flattened index of `x_{ij}`.
pub fn variable_index(i: usize, j: usize, n: usize) -> usize {
    (i - 1) * n + (j - 1)
}

fn permutations(k: usize) -> Vec<(Vec<usize>, bool)> {
    // Heap's algorithm; the sign flips with every swap
    let mut perm: Vec<usize> = (0..k).collect();
    let mut out = vec![(perm.clone(), true)];
    let mut counters = vec![0usize; k];
    let mut even = true;
    let mut i = 1;
    while i < k {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            even = !even;
            out.push((perm.clone(), even));
            counters[i] += 1;
            i = 1;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    out
}

/// Leibniz expansion of a minor.
pub fn expand_minor(minor: &Minor) -> Result<SparsePolynomial> {
    if minor.size() > MAX_MINOR_SIZE {
        return Err(Error::CostLimit(format!("minor of size {} exceeds {MAX_MINOR_SIZE}", minor.size())));
    }
    let nvars = minor.m * minor.n;
    let mut poly = SparsePolynomial::zero(nvars);
    for (perm, even) in permutations(minor.size()) {
        let mut term = SparsePolynomial::constant(nvars, BigInt::from(if even { 1 } else { -1 }));
        for (t, &p) in perm.iter().enumerate() {
            let var = variable_index(minor.rows[t], minor.cols[p], minor.n);
            term = term.mul(&SparsePolynomial::variable(nvars, var))?;
        }
        poly = poly.add(&term)?;
    }
    Ok(poly)
}

/// `Δ = ∏ δ_i · ∏ g_j h_j`, fully expanded.
pub fn delta_polynomial(m: usize, n: usize) -> Result<SparsePolynomial> {
    let mut product = SparsePolynomial::constant(m * n, BigInt::from(1));
    for minor in delta_minors(m, n)? {
        product = product.mul(&expand_minor(&minor)?)?;
    }
    Ok(product)
}

/// Outcome of the `Δ` checks for one matrix size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaCheck {
    pub m: usize,
    pub n: usize,
    pub cover_ok: bool,
    /// `None` when `Δ` was not expanded (too large).
    pub leading_squarefree: Option<bool>,
    /// Order of `Δ` along `(x_11, x_21, x_22)`; only for `2 × 2`.
    pub ord_counterexample: Option<u32>,
}

/// Largest `n` for which [`delta_check`] expands `Δ`.
pub const EXPAND_DELTA_UP_TO: usize = 3;

pub fn delta_check(m: usize, n: usize) -> Result<DeltaCheck> {
    let minors = delta_minors(m, n)?;
    let cover_ok = diagonal_cover_check(&minors, m, n);
    let (leading_squarefree, ord_counterexample) = if n <= EXPAND_DELTA_UP_TO {
        let delta = delta_polynomial(m, n)?;
        let lead = delta.lex_leading()?;
        let ord = (m, n) == (2, 2);
        let ord = if ord {
            let vars = [variable_index(1, 1, 2), variable_index(2, 1, 2), variable_index(2, 2, 2)];
            Some(delta.ord_in_variables(&vars)?)
        } else {
            None
        };
        (Some(lead.iter().all(|&x| x == 1)), ord)
    } else {
        (None, None)
    };
    Ok(DeltaCheck { m, n, cover_ok, leading_squarefree, ord_counterexample })
}
