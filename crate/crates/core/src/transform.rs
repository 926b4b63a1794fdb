//! The maxmin, minmax and maxmax transforms from a game family to a single
//! TU-game, with the optimizing profile recorded per coalition.

use std::collections::BTreeMap;

use crate::coalition::Coalition;
use crate::error::Error;
use crate::game::{Orientation, TuGame};
use crate::scalar::GameScalar;
use crate::strategic::{mixed_radix, GameWithStrategies, StrategyProfile};

/// Which transform to apply.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Procedure {
    Maxmin,
    Minmax,
    Maxmax,
}

impl Procedure {
    pub fn name(self) -> &'static str {
        match self {
            Procedure::Maxmin => "maxmin",
            Procedure::Minmax => "minmax",
            Procedure::Maxmax => "maxmax",
        }
    }

    pub fn apply<T: GameScalar>(
        self,
        gws: &GameWithStrategies<T>,
    ) -> Result<TransformResult<T>, Error> {
        match self {
            Procedure::Maxmin => maxmin(gws),
            Procedure::Minmax => minmax(gws),
            Procedure::Maxmax => Ok(maxmax(gws)),
        }
    }
}

/// A transformed TU-game together with, for every non-empty coalition, the
/// full profile at which the optimum is attained. Ties break towards the
/// lexicographically smallest profile, so results are deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformResult<T> {
    game: TuGame<T>,
    witnesses: BTreeMap<Coalition, StrategyProfile>,
}

impl<T: GameScalar> TransformResult<T> {
    pub fn game(&self) -> &TuGame<T> {
        &self.game
    }

    pub fn witnesses(&self) -> &BTreeMap<Coalition, StrategyProfile> {
        &self.witnesses
    }

    pub fn witness(&self, s: Coalition) -> Option<&StrategyProfile> {
        self.witnesses.get(&s)
    }

    pub fn into_game(self) -> TuGame<T> {
        self.game
    }
}

/// Best worth each coalition can guarantee: maximize over the members'
/// strategies the minimum over outsiders' strategies. Value families only.
pub fn maxmin<T: GameScalar>(gws: &GameWithStrategies<T>) -> Result<TransformResult<T>, Error> {
    require_orientation(gws, Orientation::Value)?;
    Ok(guarantee_optimum(gws, true))
}

/// Cost dual of the maxmin transform: minimize over the members' strategies
/// the worst (largest) cost outsiders can force. Cost families only.
pub fn minmax<T: GameScalar>(gws: &GameWithStrategies<T>) -> Result<TransformResult<T>, Error> {
    require_orientation(gws, Orientation::Cost)?;
    Ok(guarantee_optimum(gws, false))
}

/// Maxmin for value families, minmax for cost families.
pub fn guarantee_transform<T: GameScalar>(gws: &GameWithStrategies<T>) -> TransformResult<T> {
    guarantee_optimum(gws, gws.orientation() == Orientation::Value)
}

/// The optimistic transform: each coalition gets its best worth over all
/// full profiles (the cheapest cost, for cost families).
pub fn maxmax<T: GameScalar>(gws: &GameWithStrategies<T>) -> TransformResult<T> {
    let n = gws.n();
    let prefer_max = gws.orientation() == Orientation::Value;
    let mut worth = vec![T::zero(); 1 << n];
    let mut witnesses = BTreeMap::new();
    for s in Coalition::nonempty(n) {
        let mut best: Option<(T, StrategyProfile)> = None;
        for profile in gws.profiles() {
            let value = gws.game_at(&profile).expect("canonical profile").worth(s);
            let better = match &best {
                None => true,
                Some((b, _)) => {
                    if prefer_max {
                        value > b
                    } else {
                        value < b
                    }
                }
            };
            if better {
                best = Some((value.clone(), profile));
            }
        }
        let (value, profile) = best.expect("non-empty profile table");
        worth[s.index()] = value;
        witnesses.insert(s, profile);
    }
    TransformResult {
        game: TuGame::from_worths(n, gws.orientation(), worth).expect("valid worth table"),
        witnesses,
    }
}

fn guarantee_optimum<T: GameScalar>(
    gws: &GameWithStrategies<T>,
    outer_prefers_max: bool,
) -> TransformResult<T> {
    let n = gws.n();
    let counts = gws.strategy_counts();
    let mut worth = vec![T::zero(); 1 << n];
    let mut witnesses = BTreeMap::new();
    for s in Coalition::nonempty(n) {
        let own: Vec<usize> = s.members().collect();
        let outside: Vec<usize> = s.complement(n).members().collect();
        let mut best: Option<(T, Vec<usize>)> = None;
        for own_choice in mixed_radix(own.iter().map(|&p| counts[p]).collect()) {
            let mut inner: Option<(T, Vec<usize>)> = None;
            for completion in mixed_radix(outside.iter().map(|&p| counts[p]).collect()) {
                let mut full = vec![0usize; n];
                for (&p, &c) in own.iter().zip(&own_choice) {
                    full[p] = c;
                }
                for (&p, &c) in outside.iter().zip(&completion) {
                    full[p] = c;
                }
                let profile = StrategyProfile::new(full);
                let value = gws.game_at(&profile).expect("canonical profile").worth(s);
                // The inner loop is adversarial: it picks the worst case.
                let better = match &inner {
                    None => true,
                    Some((b, _)) => {
                        if outer_prefers_max {
                            value < b
                        } else {
                            value > b
                        }
                    }
                };
                if better {
                    inner = Some((value.clone(), profile.choices().to_vec()));
                }
            }
            let (value, profile) = inner.expect("non-empty completion set");
            let better = match &best {
                None => true,
                Some((b, _)) => {
                    if outer_prefers_max {
                        value > *b
                    } else {
                        value < *b
                    }
                }
            };
            if better {
                best = Some((value, profile));
            }
        }
        let (value, profile) = best.expect("non-empty strategy sets");
        worth[s.index()] = value;
        witnesses.insert(s, StrategyProfile::new(profile));
    }
    TransformResult {
        game: TuGame::from_worths(n, gws.orientation(), worth).expect("valid worth table"),
        witnesses,
    }
}

fn require_orientation<T: GameScalar>(
    gws: &GameWithStrategies<T>,
    expected: Orientation,
) -> Result<(), Error> {
    if gws.orientation() != expected {
        return Err(Error::Orientation {
            expected,
            got: gws.orientation(),
        });
    }
    Ok(())
}
