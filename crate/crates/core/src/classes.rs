//! Airport and simple game families, with the balancedness results specific
//! to them.

use crate::coalition::Coalition;
use crate::game::{Orientation, TuGame};
use crate::scalar::GameScalar;
use crate::strategic::GameWithStrategies;

/// Is this a cost game of airport shape: non-negative singleton costs with
/// every coalition paying the maximum over its members?
pub fn is_airport_game<T: GameScalar>(game: &TuGame<T>) -> bool {
    if game.orientation() != Orientation::Cost {
        return false;
    }
    let singles: Vec<&T> = (0..game.n())
        .map(|i| game.worth(Coalition::singleton(i)))
        .collect();
    if singles.iter().any(|c| c.is_negative()) {
        return false;
    }
    Coalition::nonempty(game.n()).all(|s| {
        let max = s.members().map(|i| singles[i]).max().expect("non-empty");
        game.worth(s) == max
    })
}

/// Every game in the table is an airport cost game.
pub fn is_airport_family<T: GameScalar>(gws: &GameWithStrategies<T>) -> bool {
    gws.orientation() == Orientation::Cost && gws.games().iter().all(is_airport_game)
}

/// Outcome of the pivot-player sufficient condition for balancedness of an
/// airport family's transform.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AirportCondition<T> {
    /// The first player whose every coalition is worth at least the grand
    /// coalition's cost, when one exists.
    pub pivot: Option<usize>,
    /// The airport minorant built from `d_i = min { psi(S) : i in S }`;
    /// its core sits inside the core of the transform.
    pub minorant: Option<TuGame<T>>,
}

impl<T> AirportCondition<T> {
    pub fn holds(&self) -> bool {
        self.pivot.is_some()
    }
}

/// Check, on the minmax transform `psi` of an airport family, whether some
/// pivot player `i` has `psi(S) >= psi(N)` for every coalition containing
/// `i`. When it holds the induced airport game `d` satisfies `d <= psi`
/// with `d(N) = psi(N)`, so its (non-empty) core certifies that `psi` is
/// balanced.
pub fn airport_sufficient_condition<T: GameScalar>(psi: &TuGame<T>) -> AirportCondition<T> {
    let n = psi.n();
    let grand_worth = psi.worth(psi.grand_coalition());
    let pivot = (0..n).find(|&i| {
        Coalition::nonempty(n)
            .filter(|s| s.contains(i))
            .all(|s| psi.worth(s) >= grand_worth)
    });
    let minorant = pivot.map(|_| {
        let costs: Vec<T> = (0..n)
            .map(|i| {
                Coalition::nonempty(n)
                    .filter(|s| s.contains(i))
                    .map(|s| psi.worth(s).clone())
                    .min()
                    .expect("non-empty range")
            })
            .collect();
        TuGame::airport(&costs).expect("non-negative airport costs")
    });
    AirportCondition { pivot, minorant }
}

/// A player whose runway is the most expensive at every profile; such a
/// player makes the pivot condition hold on the minmax transform.
pub fn most_costly_player<T: GameScalar>(gws: &GameWithStrategies<T>) -> Option<usize> {
    (0..gws.n()).find(|&i| {
        gws.games().iter().all(|g| {
            let own = g.worth(Coalition::singleton(i));
            (0..gws.n()).all(|j| own >= g.worth(Coalition::singleton(j)))
        })
    })
}

/// Every game in the table is a simple game (on a value family).
pub fn is_simple_family<T: GameScalar>(gws: &GameWithStrategies<T>) -> bool {
    gws.orientation() == Orientation::Value && gws.games().iter().all(|g| g.is_simple())
}

/// For a simple family, the maxmin transform has a non-empty core exactly
/// when some player can answer every profile of the others with a strategy
/// that makes them a veto player. Returns the first such player.
pub fn simple_veto_player<T: GameScalar>(gws: &GameWithStrategies<T>) -> Option<usize> {
    let n = gws.n();
    (0..n).find(|&i| {
        let rest = Coalition::grand(n).without(i);
        let others: Vec<usize> = rest.members().collect();
        let own_count = gws.strategy_counts()[i];
        assignments(gws, &others).into_iter().all(|assignment| {
            (0..own_count).any(|own| {
                let mut choices = vec![0usize; n];
                for (&p, &c) in others.iter().zip(&assignment) {
                    choices[p] = c;
                }
                choices[i] = own;
                let game = gws
                    .game_at(&crate::strategic::StrategyProfile::new(choices))
                    .expect("canonical profile");
                game.worth(rest).is_zero()
            })
        })
    })
}

fn assignments<T: GameScalar>(gws: &GameWithStrategies<T>, positions: &[usize]) -> Vec<Vec<usize>> {
    crate::strategic::mixed_radix(
        positions
            .iter()
            .map(|&p| gws.strategy_counts()[p])
            .collect(),
    )
    .collect()
}
