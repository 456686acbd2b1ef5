//! Dense two-phase simplex over exact rationals.
//!
//! Pivoting follows Bland's rule (lowest eligible index enters, ties in the
//! ratio test leave by lowest basic index), so the method cannot cycle.
//! Problems here have a handful of rows and columns; density is fine.

use num_traits::{Signed, Zero};

use super::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// `minimize objective · x` subject to the constraints and `x >= 0`.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    num_vars: usize,
    objective: Vec<Rational>,
    constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { value: Rational, point: Vec<Rational> },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible)
    }
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        Self {
            num_vars,
            objective: vec![Rational::zero(); num_vars],
            constraints: Vec::new(),
        }
    }

    pub fn minimize(mut self, objective: Vec<Rational>) -> Self {
        assert_eq!(objective.len(), self.num_vars);
        self.objective = objective;
        self
    }

    pub fn constraint(mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> Self {
        assert_eq!(coeffs.len(), self.num_vars);
        self.constraints.push(Constraint { coeffs, relation, rhs });
        self
    }

    pub fn solve(&self) -> LpOutcome {
        Tableau::build(self).run(&self.objective, self.num_vars)
    }
}

struct Tableau {
    // rows x (cols + 1); last column is the right-hand side
    cells: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    cols: usize,
    first_artificial: usize,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Self {
        let n = lp.num_vars;
        let rows: Vec<(Vec<Rational>, Relation, Rational)> = lp
            .constraints
            .iter()
            .map(|c| {
                if c.rhs.is_negative() {
                    let rel = match c.relation {
                        Relation::Le => Relation::Ge,
                        Relation::Ge => Relation::Le,
                        Relation::Eq => Relation::Eq,
                    };
                    (c.coeffs.iter().map(|a| -a).collect(), rel, -&c.rhs)
                } else {
                    (c.coeffs.clone(), c.relation, c.rhs.clone())
                }
            })
            .collect();

        let slack_count = rows.iter().filter(|r| r.1 != Relation::Eq).count();
        let artificial_count = rows.iter().filter(|r| r.1 != Relation::Le).count();
        let first_artificial = n + slack_count;
        let cols = first_artificial + artificial_count;

        let mut cells = Vec::with_capacity(rows.len());
        let mut basis = Vec::with_capacity(rows.len());
        let (mut next_slack, mut next_art) = (n, first_artificial);
        for (coeffs, rel, rhs) in rows {
            let mut row = vec![Rational::zero(); cols + 1];
            row[..n].clone_from_slice(&coeffs);
            row[cols] = rhs;
            match rel {
                Relation::Le => {
                    row[next_slack] = Rational::from_integer(1.into());
                    basis.push(next_slack);
                    next_slack += 1;
                }
                Relation::Ge => {
                    row[next_slack] = Rational::from_integer((-1).into());
                    next_slack += 1;
                    row[next_art] = Rational::from_integer(1.into());
                    basis.push(next_art);
                    next_art += 1;
                }
                Relation::Eq => {
                    row[next_art] = Rational::from_integer(1.into());
                    basis.push(next_art);
                    next_art += 1;
                }
            }
            cells.push(row);
        }
        Self { cells, basis, cols, first_artificial }
    }

    fn run(mut self, objective: &[Rational], num_vars: usize) -> LpOutcome {
        if self.cols > self.first_artificial {
            let mut phase_one = vec![Rational::zero(); self.cols];
            for cost in &mut phase_one[self.first_artificial..] {
                *cost = Rational::from_integer(1.into());
            }
            if !self.optimize(&phase_one, self.cols) {
                unreachable!("phase one objective is bounded below by zero");
            }
            if !self.objective_value(&phase_one).is_zero() {
                return LpOutcome::Infeasible;
            }
            self.evict_artificials();
        }

        let mut costs = vec![Rational::zero(); self.cols];
        costs[..num_vars].clone_from_slice(objective);
        if !self.optimize(&costs, self.first_artificial) {
            return LpOutcome::Unbounded;
        }
        let mut point = vec![Rational::zero(); num_vars];
        for (row, &var) in self.basis.iter().enumerate() {
            if var < num_vars {
                point[var] = self.cells[row][self.cols].clone();
            }
        }
        LpOutcome::Optimal {
            value: self.objective_value(&costs),
            point,
        }
    }

    fn objective_value(&self, costs: &[Rational]) -> Rational {
        self.basis
            .iter()
            .enumerate()
            .map(|(row, &var)| &costs[var] * &self.cells[row][self.cols])
            .sum()
    }

    fn reduced_cost(&self, costs: &[Rational], col: usize) -> Rational {
        let mut value = costs[col].clone();
        for (row, &var) in self.basis.iter().enumerate() {
            let entry = &self.cells[row][col];
            if !entry.is_zero() && !costs[var].is_zero() {
                value -= &costs[var] * entry;
            }
        }
        value
    }

    /// Minimizes `costs` using only columns `< allowed` as entering
    /// candidates. Returns false when unbounded.
    fn optimize(&mut self, costs: &[Rational], allowed: usize) -> bool {
        loop {
            let entering = (0..allowed)
                .filter(|c| !self.basis.contains(c))
                .find(|&c| self.reduced_cost(costs, c).is_negative());
            let Some(col) = entering else { return true };

            let mut leaving: Option<(usize, Rational)> = None;
            for row in 0..self.cells.len() {
                let entry = &self.cells[row][col];
                if !entry.is_positive() {
                    continue;
                }
                let ratio = &self.cells[row][self.cols] / entry;
                let better = match &leaving {
                    None => true,
                    Some((best_row, best)) => {
                        ratio < *best || (ratio == *best && self.basis[row] < self.basis[*best_row])
                    }
                };
                if better {
                    leaving = Some((row, ratio));
                }
            }
            let Some((row, _)) = leaving else { return false };
            self.pivot(row, col);
        }
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let pivot = self.cells[row][col].clone();
        for cell in &mut self.cells[row] {
            *cell /= &pivot;
        }
        let pivot_row = self.cells[row].clone();
        for (r, other) in self.cells.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let factor = other[col].clone();
            for (cell, p) in other.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *cell -= &factor * p;
                }
            }
        }
        self.basis[row] = col;
    }

    fn evict_artificials(&mut self) {
        let mut row = 0;
        while row < self.cells.len() {
            if self.basis[row] >= self.first_artificial {
                let replacement = (0..self.first_artificial).find(|&c| !self.cells[row][c].is_zero());
                match replacement {
                    Some(col) => self.pivot(row, col),
                    None => {
                        // redundant equality
                        self.cells.remove(row);
                        self.basis.remove(row);
                        continue;
                    }
                }
            }
            row += 1;
        }
    }
}
