//! Dense two-phase primal simplex in exact arithmetic.
//!
//! Solves `min c·y` subject to `A y >= b`, `y >= 0`. Pivoting follows
//! Bland's rule (lowest eligible index enters, ties on the ratio test break
//! towards the lowest basic variable), which rules out cycling and makes
//! every run deterministic.

use crate::scalar::GameScalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome<T> {
    Optimal { objective: T, solution: Vec<T> },
    Infeasible,
    Unbounded,
}

struct Tableau<T> {
    rows: Vec<Vec<T>>,
    rhs: Vec<T>,
    basis: Vec<usize>,
    columns: usize,
}

impl<T: GameScalar> Tableau<T> {
    fn pivot(&mut self, row: usize, col: usize) {
        let pivot = self.rows[row][col].clone();
        debug_assert!(!pivot.is_zero());
        for entry in self.rows[row].iter_mut() {
            *entry = entry.clone() / pivot.clone();
        }
        self.rhs[row] = self.rhs[row].clone() / pivot;
        for r in 0..self.rows.len() {
            if r == row {
                continue;
            }
            let factor = self.rows[r][col].clone();
            if factor.is_zero() {
                continue;
            }
            for j in 0..self.columns {
                let delta = factor.clone() * self.rows[row][j].clone();
                self.rows[r][j] = self.rows[r][j].clone() - delta;
            }
            self.rhs[r] = self.rhs[r].clone() - factor * self.rhs[row].clone();
        }
        self.basis[row] = col;
    }

    /// Bland ratio test: among rows with a positive pivot-column entry,
    /// the smallest ratio wins, ties broken by the lowest basic variable.
    fn leaving_row(&self, col: usize) -> Option<usize> {
        let mut best: Option<(T, usize)> = None;
        for r in 0..self.rows.len() {
            let coeff = &self.rows[r][col];
            if !coeff.is_positive() {
                continue;
            }
            let ratio = self.rhs[r].clone() / coeff.clone();
            let better = match &best {
                None => true,
                Some((best_ratio, best_row)) => {
                    ratio < *best_ratio
                        || (ratio == *best_ratio && self.basis[r] < self.basis[*best_row])
                }
            };
            if better {
                best = Some((ratio, r));
            }
        }
        best.map(|(_, r)| r)
    }

    /// Reduced costs and objective value for the cost vector `costs`
    /// (zero-padded beyond its length) under the current basis.
    fn priced_out(&self, costs: &[T]) -> (Vec<T>, T) {
        let cost = |j: usize| costs.get(j).cloned().unwrap_or_else(T::zero);
        let mut reduced: Vec<T> = (0..self.columns).map(cost).collect();
        let mut objective = T::zero();
        for r in 0..self.rows.len() {
            let basic_cost = cost(self.basis[r]);
            if basic_cost.is_zero() {
                continue;
            }
            for (entry, row_entry) in reduced.iter_mut().zip(&self.rows[r]) {
                let delta = basic_cost.clone() * row_entry.clone();
                *entry = entry.clone() - delta;
            }
            objective = objective + basic_cost * self.rhs[r].clone();
        }
        (reduced, objective)
    }

    /// Run the simplex loop for the given cost vector, with entering
    /// columns restricted to `0..allowed`. Returns the objective value, or
    /// `None` when the problem is unbounded below.
    fn optimize(&mut self, costs: &[T], allowed: usize) -> Option<T> {
        let (mut reduced, mut objective) = self.priced_out(costs);
        loop {
            let entering = (0..allowed).find(|&j| reduced[j].is_negative());
            let Some(col) = entering else {
                return Some(objective);
            };
            let row = self.leaving_row(col)?;
            self.pivot(row, col);
            let rate = reduced[col].clone();
            for (entry, pivot_entry) in reduced.iter_mut().zip(&self.rows[row]) {
                let delta = rate.clone() * pivot_entry.clone();
                *entry = entry.clone() - delta;
            }
            objective = objective + rate * self.rhs[row].clone();
        }
    }
}

/// Minimize `objective · y` subject to `row · y >= rhs` for every row and
/// `y >= 0`.
pub fn minimize<T: GameScalar>(objective: &[T], rows: &[(Vec<T>, T)]) -> LpOutcome<T> {
    let nv = objective.len();
    let m = rows.len();
    let art_start = nv + m;
    let artificials = rows.iter().filter(|(_, b)| b.is_positive()).count();
    let columns = art_start + artificials;

    let mut tab = Tableau {
        rows: Vec::with_capacity(m),
        rhs: Vec::with_capacity(m),
        basis: Vec::with_capacity(m),
        columns,
    };
    let mut next_artificial = art_start;
    for (r, (coeffs, bound)) in rows.iter().enumerate() {
        assert_eq!(coeffs.len(), nv, "constraint row length mismatch");
        let mut row = vec![T::zero(); columns];
        if bound.is_positive() {
            // a·y - s + artificial = b, artificial starts basic.
            row[..nv].clone_from_slice(coeffs);
            row[nv + r] = -T::one();
            row[next_artificial] = T::one();
            tab.basis.push(next_artificial);
            tab.rhs.push(bound.clone());
            next_artificial += 1;
        } else {
            // -a·y + s = -b with -b >= 0, the slack starts basic.
            for (j, c) in coeffs.iter().enumerate() {
                row[j] = -c.clone();
            }
            row[nv + r] = T::one();
            tab.basis.push(nv + r);
            tab.rhs.push(-bound.clone());
        }
        tab.rows.push(row);
    }

    if artificials > 0 {
        let mut phase1 = vec![T::zero(); columns];
        for cost in phase1.iter_mut().skip(art_start) {
            *cost = T::one();
        }
        match tab.optimize(&phase1, columns) {
            Some(residual) if residual.is_zero() => {}
            Some(_) => return LpOutcome::Infeasible,
            // Phase 1 is bounded below by zero, so this cannot trigger.
            None => return LpOutcome::Infeasible,
        }
        // Drive basic artificials out. A row whose real columns are all
        // zero is redundant and stays inert: no later pivot can touch it.
        for r in 0..tab.rows.len() {
            if tab.basis[r] < art_start {
                continue;
            }
            if let Some(col) = (0..art_start).find(|&j| !tab.rows[r][j].is_zero()) {
                tab.pivot(r, col);
            }
        }
    }

    match tab.optimize(objective, art_start) {
        Some(objective_value) => {
            let mut solution = vec![T::zero(); nv];
            for (r, &basic) in tab.basis.iter().enumerate() {
                if basic < nv {
                    solution[basic] = tab.rhs[r].clone();
                }
            }
            LpOutcome::Optimal {
                objective: objective_value,
                solution,
            }
        }
        None => LpOutcome::Unbounded,
    }
}
