//! Structural predicates on TU-games.
//!
//! All predicates read the stored worths with value-orientation semantics;
//! for cost games, test the negation (a cost game is concave when its
//! negation is convex).

use crate::coalition::Coalition;
use crate::game::TuGame;
use crate::scalar::GameScalar;

impl<T: GameScalar> TuGame<T> {
    /// `v(S ∪ T) >= v(S) + v(T)` for all disjoint pairs, by brute force.
    pub fn is_superadditive(&self) -> bool {
        for s in Coalition::nonempty(self.n()) {
            for t in s.complement(self.n()).subsets() {
                if t.is_empty() {
                    continue;
                }
                let joint = self.worth(s.union(t)).clone();
                if joint < self.worth(s).clone() + self.worth(t).clone() {
                    return false;
                }
            }
        }
        true
    }

    /// `v(S) <= v(T)` whenever `S ⊆ T`, by brute force over subset pairs.
    pub fn is_monotone(&self) -> bool {
        for t in Coalition::all(self.n()) {
            for s in t.subsets() {
                if self.worth(s) > self.worth(t) {
                    return false;
                }
            }
        }
        true
    }

    /// Marginal contributions grow with the coalition:
    /// `v(T ∪ i) - v(T) >= v(S ∪ i) - v(S)` for all `S ⊆ T ⊆ N∖{i}`.
    pub fn is_convex(&self) -> bool {
        for i in 0..self.n() {
            let rest = Coalition::grand(self.n()).without(i);
            for t in rest.subsets() {
                let gain_t = self.worth(t.with(i)).clone() - self.worth(t).clone();
                for s in t.subsets() {
                    let gain_s = self.worth(s.with(i)).clone() - self.worth(s).clone();
                    if gain_t < gain_s {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Simple game: every worth is 0 or 1, the grand coalition is worth 1,
    /// and worths are monotone.
    pub fn is_simple(&self) -> bool {
        if !self.worth(self.grand_coalition()).is_one() {
            return false;
        }
        let zero_or_one = self
            .worths()
            .all(|(_, w)| w.is_zero() || w.is_one());
        zero_or_one && self.is_monotone()
    }

    /// Veto player: the rest of the players are worth nothing without them.
    pub fn is_veto(&self, player: usize) -> bool {
        assert!(player < self.n(), "player {player} out of range");
        self.worth(self.grand_coalition().without(player)).is_zero()
    }
}
