//! Exact integer packing: the largest number of generator factors whose
//! product divides a given monomial.
//!
//! `max Σ c_i  subject to  Σ c_i g_i <= cap,  c ∈ N^g`.
//!
//! Branch and bound over the generators in order. The bound at each node is
//! the LP relaxation of the remaining generators, evaluated through the
//! vertices of its dual polyhedron `{y >= 0 : g_i·y >= 1}`. Those vertices
//! depend only on the generators, so they are computed once per ideal and
//! every bound afterwards is a handful of integer dot products.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::geometry::Rational;

/// A nonnegative rational `num / den` with `den > 0`.
#[derive(Debug, Clone, Copy)]
struct Frac {
    num: i128,
    den: i128,
}

impl Frac {
    fn floor(self) -> i64 {
        self.num.div_euclid(self.den) as i64
    }

    fn plus_int(self, c: i64) -> Frac {
        Frac { num: self.num + c as i128 * self.den, den: self.den }
    }

    fn cmp(self, other: Frac) -> Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

/// Dual vertices, each scaled to integers: `y = coeffs / den`.
#[derive(Debug, Clone)]
struct DualBound {
    vertices: Vec<(Vec<i64>, i64)>,
}

impl DualBound {
    fn new(gens: &[Vec<i64>], n: usize) -> Self {
        // constraints a·y >= 1 (generators) and e_k·y >= 0
        let mut rows: Vec<(Vec<i64>, i64)> = gens.iter().map(|g| (g.clone(), 1)).collect();
        for k in 0..n {
            let mut e = vec![0; n];
            e[k] = 1;
            rows.push((e, 0));
        }
        let mut vertices: Vec<(Vec<i64>, i64)> = Vec::new();
        for subset in combinations(rows.len(), n) {
            let Some(y) = solve_square(&subset.iter().map(|&i| rows[i].clone()).collect::<Vec<_>>()) else {
                continue;
            };
            let feasible = rows.iter().all(|(a, rhs)| {
                let dot: Rational = a.iter().zip(&y).map(|(&ai, yi)| yi * Rational::from_integer(ai.into())).sum();
                dot >= Rational::from_integer((*rhs).into())
            });
            if !feasible {
                continue;
            }
            let den = y.iter().fold(BigInt::from(1), |acc, v| acc.lcm(v.denom()));
            let coeffs: Vec<i64> = y
                .iter()
                .map(|v| (v.numer() * (&den / v.denom())).to_i64().expect("small dual vertex"))
                .collect();
            let vertex = (coeffs, den.to_i64().expect("small dual vertex"));
            if !vertices.contains(&vertex) {
                vertices.push(vertex);
            }
        }
        Self { vertices }
    }

    fn lp_value(&self, cap: &[i64]) -> Frac {
        self.vertices
            .iter()
            .map(|(coeffs, den)| Frac {
                num: coeffs.iter().zip(cap).map(|(&a, &c)| a as i128 * c as i128).sum(),
                den: *den as i128,
            })
            .min_by(|a, b| a.cmp(*b))
            .expect("dual polyhedron has a vertex")
    }
}

fn combinations(len: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, len: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..len {
            current.push(i);
            go(i + 1, len, k, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(0, len, k, &mut Vec::new(), &mut out);
    out
}

/// Solves `a_i · y = rhs_i` for a square system; `None` when singular.
fn solve_square(rows: &[(Vec<i64>, i64)]) -> Option<Vec<Rational>> {
    let n = rows.len();
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .map(|(a, rhs)| {
            let mut row: Vec<Rational> = a.iter().map(|&x| Rational::from_integer(x.into())).collect();
            row.push(Rational::from_integer((*rhs).into()));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for x in &mut m[col] {
            *x /= &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Packing problem for a fixed list of nonzero generators.
#[derive(Debug, Clone)]
pub struct Packing {
    gens: Vec<Vec<i64>>,
    // bound for generators[j..], indexed by j
    suffix_bounds: Vec<DualBound>,
}

impl Packing {
    /// `gens` must be nonempty, nonzero and of equal length.
    pub fn new(gens: &[Vec<u32>]) -> Self {
        assert!(!gens.is_empty(), "packing needs generators");
        let n = gens[0].len();
        let gens: Vec<Vec<i64>> = gens.iter().map(|g| g.iter().map(|&x| x as i64).collect()).collect();
        assert!(gens.iter().all(|g| g.iter().any(|&x| x > 0)), "generators must be nonzero");
        let suffix_bounds = (0..gens.len()).map(|j| DualBound::new(&gens[j..], n)).collect();
        Self { gens, suffix_bounds }
    }

    /// Exact maximum number of factors fitting under `cap`.
    pub fn max_factors(&self, cap: &[i64]) -> i64 {
        let mut cap = cap.to_vec();
        self.best(0, &mut cap, -1)
    }

    fn room(&self, j: usize, cap: &[i64]) -> i64 {
        self.gens[j]
            .iter()
            .zip(cap)
            .filter(|(&g, _)| g > 0)
            .map(|(&g, &c)| c.div_euclid(g))
            .min()
            .expect("nonzero generator")
    }

    /// Returns `max(beat, best packing with generators j..)`.
    fn best(&self, j: usize, cap: &mut [i64], beat: i64) -> i64 {
        let room = self.room(j, cap);
        if j + 1 == self.gens.len() {
            return beat.max(room);
        }
        let bound = |cap: &[i64], c: i64| -> Frac {
            let rest: Vec<i64> = cap.iter().zip(&self.gens[j]).map(|(&x, &g)| x - c * g).collect();
            self.suffix_bounds[j + 1].lp_value(&rest).plus_int(c)
        };

        // argmax of the concave relaxation value over 0..=room
        let (mut lo, mut hi) = (0, room);
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if bound(cap, mid + 1).cmp(bound(cap, mid)) == Ordering::Greater {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        let peak = lo;

        let mut best = beat;
        let visit = |c: i64, best: &mut i64, cap: &mut [i64]| -> bool {
            if bound(cap, c).floor() <= *best {
                return false;
            }
            for (x, &g) in cap.iter_mut().zip(&self.gens[j]) {
                *x -= c * g;
            }
            let sub = self.best(j + 1, cap, *best - c);
            for (x, &g) in cap.iter_mut().zip(&self.gens[j]) {
                *x += c * g;
            }
            *best = (*best).max(sub + c);
            true
        };
        let mut c = peak;
        while c <= room && visit(c, &mut best, cap) {
            c += 1;
        }
        let mut c = peak;
        while c > 0 && visit(c - 1, &mut best, cap) {
            c -= 1;
        }
        best
    }
}
