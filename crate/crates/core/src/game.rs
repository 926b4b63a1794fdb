use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};

use crate::coalition::{Coalition, MAX_PLAYERS};
use crate::error::Error;
use crate::scalar::GameScalar;

/// Whether worths are read as gains (`Value`) or as costs (`Cost`).
///
/// Cost games reuse the value-orientation machinery through [`TuGame::negate`]:
/// the core of a cost game `c` is the sign-flipped core of the value game `-c`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Value,
    Cost,
}

impl Orientation {
    pub fn flipped(self) -> Self {
        match self {
            Orientation::Value => Orientation::Cost,
            Orientation::Cost => Orientation::Value,
        }
    }
}

/// A transferable-utility game: one worth per coalition, with worth 0 for
/// the empty coalition.
#[derive(Clone, PartialEq, Eq)]
pub struct TuGame<T> {
    n: usize,
    orientation: Orientation,
    worth: Vec<T>,
}

impl<T: GameScalar> TuGame<T> {
    /// The game where every coalition is worth 0.
    pub fn zero(n: usize, orientation: Orientation) -> Result<Self, Error> {
        check_player_count(n)?;
        Ok(TuGame {
            n,
            orientation,
            worth: vec![T::zero(); 1 << n],
        })
    }

    /// Build a game from explicit coalition worths; unspecified coalitions
    /// default to 0. A non-zero entry for the empty coalition is rejected,
    /// and later duplicate entries overwrite earlier ones (map semantics).
    pub fn from_entries<I>(n: usize, orientation: Orientation, entries: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (Coalition, T)>,
    {
        let mut game = TuGame::zero(n, orientation)?;
        for (coalition, worth) in entries {
            if coalition.index() >= game.worth.len() {
                return Err(Error::CoalitionOutOfRange {
                    coalition,
                    players: n,
                });
            }
            if coalition.is_empty() && !worth.is_zero() {
                return Err(Error::NonzeroEmptyWorth);
            }
            game.worth[coalition.index()] = worth;
        }
        Ok(game)
    }

    /// Build a game from a full worth table indexed by coalition bitmask.
    pub fn from_worths(n: usize, orientation: Orientation, worth: Vec<T>) -> Result<Self, Error> {
        check_player_count(n)?;
        if worth.len() != 1 << n {
            return Err(Error::WorthTableLength {
                got: worth.len(),
                expected: 1 << n,
            });
        }
        if !worth[0].is_zero() {
            return Err(Error::NonzeroEmptyWorth);
        }
        Ok(TuGame {
            n,
            orientation,
            worth,
        })
    }

    /// The airport cost game of one movement per player: a coalition pays
    /// the largest runway cost among its members.
    pub fn airport(costs: &[T]) -> Result<Self, Error> {
        check_player_count(costs.len())?;
        for (player, cost) in costs.iter().enumerate() {
            if cost.is_negative() {
                return Err(Error::NegativeAirportCost {
                    player,
                    cost: cost.to_string(),
                });
            }
        }
        let n = costs.len();
        let mut worth = vec![T::zero(); 1 << n];
        for coalition in Coalition::nonempty(n) {
            let max = coalition
                .members()
                .map(|i| costs[i].clone())
                .max()
                .expect("non-empty coalition");
            worth[coalition.index()] = max;
        }
        Ok(TuGame {
            n,
            orientation: Orientation::Cost,
            worth,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn grand_coalition(&self) -> Coalition {
        Coalition::grand(self.n)
    }

    /// Worth of a coalition. Panics on a coalition outside the player set;
    /// callers constructing coalitions from indices stay in range.
    pub fn worth(&self, coalition: Coalition) -> &T {
        assert!(
            coalition.index() < self.worth.len(),
            "coalition {coalition:?} out of range for {} players",
            self.n
        );
        &self.worth[coalition.index()]
    }

    /// All `(coalition, worth)` pairs, ascending by bitmask.
    pub fn worths(&self) -> impl Iterator<Item = (Coalition, &T)> {
        self.worth
            .iter()
            .enumerate()
            .map(|(bits, w)| (Coalition::from_bits(bits as u32), w))
    }

    /// Same player set, negated worths, flipped orientation.
    pub fn negate(&self) -> Self {
        TuGame {
            n: self.n,
            orientation: self.orientation.flipped(),
            worth: self.worth.iter().map(|w| -w.clone()).collect(),
        }
    }

    /// Pointwise comparison: `self(S) >= other(S)` for every coalition.
    pub fn dominates(&self, other: &Self) -> bool {
        self.n == other.n
            && self
                .worth
                .iter()
                .zip(other.worth.iter())
                .all(|(a, b)| a >= b)
    }
}

impl<T: fmt::Debug> fmt::Debug for TuGame<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TuGame")
            .field("n", &self.n)
            .field("orientation", &self.orientation)
            .field("worth", &self.worth)
            .finish()
    }
}

fn check_player_count(n: usize) -> Result<(), Error> {
    if n == 0 || n > MAX_PLAYERS {
        return Err(Error::PlayerCount {
            got: n,
            max: MAX_PLAYERS,
        });
    }
    Ok(())
}

/// A payoff (or cost-share) vector, one entry per player.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Allocation<T>(Vec<T>);

impl<T: GameScalar> Allocation<T> {
    pub fn new(values: Vec<T>) -> Self {
        Allocation(values)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[T] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<T> {
        self.0
    }

    pub fn total(&self) -> T {
        self.0.iter().cloned().sum()
    }

    pub fn coalition_total(&self, coalition: Coalition) -> T {
        coalition.members().map(|i| self.0[i].clone()).sum()
    }

    pub fn negated(&self) -> Self {
        Allocation(self.0.iter().map(|v| -v.clone()).collect())
    }
}

impl<T> Index<usize> for Allocation<T> {
    type Output = T;

    fn index(&self, i: usize) -> &T {
        &self.0[i]
    }
}

impl<T: GameScalar> From<Vec<T>> for Allocation<T> {
    fn from(values: Vec<T>) -> Self {
        Allocation(values)
    }
}

impl<T: fmt::Debug> fmt::Debug for Allocation<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl<T: fmt::Display> fmt::Display for Allocation<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}
