//! The core of a TU-game: membership, balancedness with a witness, and
//! exact vertex enumeration.

use std::collections::BTreeSet;

use crate::coalition::Coalition;
use crate::error::Error;
use crate::game::{Allocation, Orientation, TuGame};
use crate::scalar::GameScalar;
use crate::simplex::{self, LpOutcome};

/// Vertex enumeration solves one linear system per (n-1)-subset of the
/// proper coalitions; capped to keep that combinatorial count small.
pub const MAX_VERTEX_PLAYERS: usize = 5;

impl<T: GameScalar> TuGame<T> {
    /// Core membership: the allocation is efficient and no coalition can
    /// improve on it. For cost games the coalition inequalities reverse
    /// (no coalition pays more than its own cost).
    pub fn core_contains(&self, allocation: &Allocation<T>) -> Result<bool, Error> {
        if allocation.len() != self.n() {
            return Err(Error::AllocationLength {
                got: allocation.len(),
                expected: self.n(),
            });
        }
        if self.orientation() == Orientation::Cost {
            return self.negate().core_contains(&allocation.negated());
        }
        if allocation.total() != *self.worth(self.grand_coalition()) {
            return Ok(false);
        }
        Ok(Coalition::nonempty(self.n())
            .all(|s| allocation.coalition_total(s) >= *self.worth(s)))
    }

    /// Balancedness by exact linear programming: minimize the total payout
    /// subject to every coalition constraint. The core is non-empty exactly
    /// when the optimum meets the grand-coalition worth, and the optimal
    /// point is then a core element.
    pub fn core_witness(&self) -> Option<Allocation<T>> {
        if self.orientation() == Orientation::Cost {
            return self.negate().core_witness().map(|w| w.negated());
        }
        let n = self.n();
        // Substitute x_i = y_i + v({i}); the singleton constraints make
        // y >= 0 valid, and the remaining rows shift accordingly.
        let singles: Vec<T> = (0..n)
            .map(|i| self.worth(Coalition::singleton(i)).clone())
            .collect();
        let rows: Vec<(Vec<T>, T)> = Coalition::nonempty(n)
            .map(|s| {
                let coeffs: Vec<T> = (0..n)
                    .map(|i| if s.contains(i) { T::one() } else { T::zero() })
                    .collect();
                let shift: T = s.members().map(|i| singles[i].clone()).sum();
                (coeffs, self.worth(s).clone() - shift)
            })
            .collect();
        let objective = vec![T::one(); n];
        let LpOutcome::Optimal {
            objective: optimum,
            solution,
        } = simplex::minimize(&objective, &rows)
        else {
            // Feasible (large payouts satisfy every row) and bounded below
            // by the grand-coalition row.
            unreachable!("the balancedness LP is always feasible and bounded");
        };
        let shift_total: T = singles.iter().cloned().sum();
        if optimum + shift_total != *self.worth(self.grand_coalition()) {
            return None;
        }
        let x: Vec<T> = solution
            .into_iter()
            .zip(singles)
            .map(|(y, base)| y + base)
            .collect();
        Some(Allocation::new(x))
    }

    pub fn is_balanced(&self) -> bool {
        self.core_witness().is_some()
    }

    /// The exact vertex set of the core polytope, deduplicated and sorted
    /// lexicographically. Empty exactly when the core is empty.
    ///
    /// Every vertex is the unique solution of `n` tight constraints: the
    /// efficiency equality plus `n-1` coalition constraints, so all
    /// `(n-1)`-subsets of the proper coalitions are solved and filtered
    /// through membership.
    pub fn core_vertices(&self) -> Result<Vec<Allocation<T>>, Error> {
        let n = self.n();
        if n > MAX_VERTEX_PLAYERS {
            return Err(Error::VertexEnumerationSize {
                got: n,
                max: MAX_VERTEX_PLAYERS,
            });
        }
        if self.orientation() == Orientation::Cost {
            let vertices = self.negate().core_vertices()?;
            let flipped: BTreeSet<Vec<T>> = vertices
                .into_iter()
                .map(|v| v.negated().into_vec())
                .collect();
            return Ok(flipped.into_iter().map(Allocation::new).collect());
        }
        let proper: Vec<Coalition> = Coalition::nonempty(n)
            .filter(|s| *s != self.grand_coalition())
            .collect();
        let mut vertices: BTreeSet<Vec<T>> = BTreeSet::new();
        for choice in subsets_of_size(proper.len(), n - 1) {
            let mut matrix: Vec<Vec<T>> = Vec::with_capacity(n);
            let mut rhs: Vec<T> = Vec::with_capacity(n);
            for &k in &choice {
                let s = proper[k];
                matrix.push(indicator_row(s, n));
                rhs.push(self.worth(s).clone());
            }
            matrix.push(vec![T::one(); n]);
            rhs.push(self.worth(self.grand_coalition()).clone());
            let Some(point) = solve_square(matrix, rhs) else {
                continue;
            };
            let candidate = Allocation::new(point);
            if self.core_contains(&candidate)? {
                vertices.insert(candidate.into_vec());
            }
        }
        Ok(vertices.into_iter().map(Allocation::new).collect())
    }
}

fn indicator_row<T: GameScalar>(s: Coalition, n: usize) -> Vec<T> {
    (0..n)
        .map(|i| if s.contains(i) { T::one() } else { T::zero() })
        .collect()
}

/// All size-`k` index subsets of `0..len`, in lexicographic order.
fn subsets_of_size(len: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn recurse(len: usize, k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        let needed = k - current.len();
        for i in start..=len.saturating_sub(needed) {
            current.push(i);
            recurse(len, k, i + 1, current, out);
            current.pop();
        }
    }
    if k <= len {
        recurse(len, k, 0, &mut current, &mut out);
    }
    out
}

/// Gaussian elimination with exact arithmetic; `None` for singular systems.
fn solve_square<T: GameScalar>(mut m: Vec<Vec<T>>, mut rhs: Vec<T>) -> Option<Vec<T>> {
    let n = rhs.len();
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot_row);
        rhs.swap(col, pivot_row);
        let pivot = m[col][col].clone();
        for entry in m[col].iter_mut().skip(col) {
            *entry = entry.clone() / pivot.clone();
        }
        rhs[col] = rhs[col].clone() / pivot;
        let lead = m[col].clone();
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for (entry, lead_entry) in m[r].iter_mut().zip(&lead).skip(col) {
                let delta = factor.clone() * lead_entry.clone();
                *entry = entry.clone() - delta;
            }
            rhs[r] = rhs[r].clone() - factor * rhs[col].clone();
        }
    }
    Some(rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::Game;

    fn c(players: &[usize]) -> Coalition {
        Coalition::from_players(players.iter().copied())
    }

    // Worth order: {1}, {2}, {12}, {3}, {13}, {23}, {123}.
    fn game3(orientation: Orientation, w: [i64; 7]) -> Game {
        let mut table = vec![ratio(0, 1)];
        table.extend(w.iter().map(|&v| ratio(v, 1)));
        Game::from_worths(3, orientation, table).unwrap()
    }

    fn alloc(values: &[i64]) -> Allocation<crate::Rational> {
        Allocation::new(values.iter().map(|&v| ratio(v, 1)).collect())
    }

    #[test]
    fn membership_value_orientation() {
        let psi = game3(Orientation::Value, [2, 1, 5, 2, 7, 4, 9]);
        assert!(psi.core_contains(&alloc(&[3, 2, 4])).unwrap());
        assert!(!psi.core_contains(&alloc(&[3, 2, 5])).unwrap());
        assert!(!psi.core_contains(&alloc(&[9, 0, 0])).unwrap());
        assert!(matches!(
            psi.core_contains(&alloc(&[1, 2])),
            Err(Error::AllocationLength { .. })
        ));
    }

    #[test]
    fn membership_cost_orientation() {
        let psi = game3(Orientation::Cost, [2, 9, 7, 9, 5, 9, 8]);
        assert!(psi.core_contains(&alloc(&[0, 3, 5])).unwrap());
        // Coalition {1,3} would pay 6 > its own cost 5.
        assert!(!psi.core_contains(&alloc(&[1, 2, 5])).unwrap());
        assert!(!psi.core_contains(&alloc(&[0, 3, 6])).unwrap());
    }

    #[test]
    fn empty_core_detected() {
        let psi = game3(Orientation::Value, [1, 3, 7, 1, 6, 9, 10]);
        assert_eq!(psi.core_witness(), None);
        assert!(!psi.is_balanced());
        assert_eq!(psi.core_vertices().unwrap(), vec![]);
    }

    #[test]
    fn balanced_games_yield_a_member_witness() {
        let games = [
            game3(Orientation::Value, [1, 3, 7, 1, 6, 1, 9]),
            game3(Orientation::Value, [1, 1, 2, 1, 7, 9, 10]),
            game3(Orientation::Value, [2, 1, 5, 2, 7, 4, 9]),
            game3(Orientation::Value, [0, 0, 0, 0, 0, 0, 1]),
        ];
        for g in games {
            let witness = g.core_witness().expect("balanced");
            assert!(g.core_contains(&witness).unwrap());
        }
    }

    #[test]
    fn cost_witness_lives_in_cost_space() {
        let psi = game3(Orientation::Cost, [2, 9, 7, 9, 5, 9, 8]);
        let witness = psi.core_witness().expect("balanced");
        assert_eq!(witness.total(), ratio(8, 1));
        assert!(psi.core_contains(&witness).unwrap());
    }

    #[test]
    fn segment_core_vertices() {
        let g = game3(Orientation::Value, [1, 1, 2, 1, 6, 9, 10]);
        let vertices = g.core_vertices().unwrap();
        assert_eq!(vertices, vec![alloc(&[1, 1, 8]), alloc(&[1, 4, 5])]);
    }

    #[test]
    fn box_core_vertices() {
        let g = game3(Orientation::Value, [1, 3, 7, 1, 6, 1, 10]);
        let vertices = g.core_vertices().unwrap();
        assert_eq!(
            vertices,
            vec![
                alloc(&[3, 4, 3]),
                alloc(&[4, 3, 3]),
                alloc(&[5, 4, 1]),
                alloc(&[6, 3, 1]),
            ]
        );
    }

    #[test]
    fn additive_game_has_one_vertex() {
        let g = game3(Orientation::Value, [1, 2, 3, 3, 4, 5, 6]);
        assert_eq!(g.core_vertices().unwrap(), vec![alloc(&[1, 2, 3])]);
        let single = Game::from_entries(1, Orientation::Value, [(c(&[0]), ratio(5, 1))]).unwrap();
        assert_eq!(single.core_vertices().unwrap(), vec![alloc(&[5])]);
    }

    #[test]
    fn vertex_enumeration_size_guard() {
        let g = Game::zero(6, Orientation::Value).unwrap();
        assert!(matches!(
            g.core_vertices(),
            Err(Error::VertexEnumerationSize { got: 6, max: 5 })
        ));
    }

    #[test]
    fn subset_generation() {
        assert_eq!(subsets_of_size(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(subsets_of_size(2, 0), vec![Vec::<usize>::new()]);
        assert!(subsets_of_size(1, 2).is_empty());
    }
}
