//! Instance-level verification of the transform's characteristic properties
//! and of property transmission from the table games to the transform.

use crate::coalition::Coalition;
use crate::error::Error;
use crate::game::{Allocation, Orientation, TuGame};
use crate::scalar::GameScalar;
use crate::strategic::GameWithStrategies;
use crate::transform::guarantee_transform;

/// A conditional claim: the conclusion is only evaluated when the
/// hypothesis holds, and the check passes vacuously otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Conditional {
    pub hypothesis: bool,
    pub conclusion: Option<bool>,
}

impl Conditional {
    fn evaluate(hypothesis: bool, conclusion: impl FnOnce() -> bool) -> Self {
        Conditional {
            hypothesis,
            conclusion: hypothesis.then(conclusion),
        }
    }

    pub fn passes(&self) -> bool {
        self.conclusion.unwrap_or(true)
    }
}

/// Players whose singleton worth is the same at every profile keep exactly
/// that worth under the transform. Vacuously true without such players.
pub fn individual_objectivity<T: GameScalar>(gws: &GameWithStrategies<T>) -> bool {
    let transform = guarantee_transform(gws);
    (0..gws.n()).all(|i| {
        let singleton = Coalition::singleton(i);
        let first = gws.games()[0].worth(singleton);
        let constant = gws.games().iter().all(|g| g.worth(singleton) == first);
        !constant || transform.game().worth(singleton) == first
    })
}

/// If one family pointwise dominates another of the same shape, its
/// transform dominates too.
pub fn monotonicity_pair<T: GameScalar>(
    hi: &GameWithStrategies<T>,
    lo: &GameWithStrategies<T>,
) -> Result<Conditional, Error> {
    if hi.strategy_counts() != lo.strategy_counts()
        || hi.n() != lo.n()
        || hi.orientation() != lo.orientation()
    {
        return Err(Error::ShapeMismatch);
    }
    let hypothesis = hi
        .games()
        .iter()
        .zip(lo.games())
        .all(|(a, b)| a.dominates(b));
    Ok(Conditional::evaluate(hypothesis, || {
        guarantee_transform(hi)
            .game()
            .dominates(guarantee_transform(lo).game())
    }))
}

/// Deleting a strategy that is weakly dominated for some coalition leaves
/// that coalition's transform worth unchanged. Sweeps every candidate
/// `(player, strategy, coalition)` triple.
pub fn dominated_strategy_irrelevance<T: GameScalar>(gws: &GameWithStrategies<T>) -> bool {
    let transform = guarantee_transform(gws);
    for player in 0..gws.n() {
        if gws.strategy_counts()[player] < 2 {
            continue;
        }
        for strategy in 0..gws.strategy_counts()[player] {
            let mut reduced: Option<crate::transform::TransformResult<T>> = None;
            for s in Coalition::nonempty(gws.n()) {
                if !s.contains(player) {
                    continue;
                }
                let dominated = gws
                    .weakly_dominated_in(player, strategy, s)
                    .expect("valid sweep arguments")
                    .is_some();
                if !dominated {
                    continue;
                }
                let reduced = reduced.get_or_insert_with(|| {
                    let shrunk = gws
                        .delete_strategy(player, strategy)
                        .expect("at least two strategies");
                    guarantee_transform(&shrunk)
                });
                if transform.game().worth(s) != reduced.game().worth(s) {
                    return false;
                }
            }
        }
    }
    true
}

/// Deleting an outsider's weakly dominated threat leaves the threatened
/// coalition's transform worth unchanged.
pub fn dominated_threat_irrelevance<T: GameScalar>(gws: &GameWithStrategies<T>) -> bool {
    let transform = guarantee_transform(gws);
    for player in 0..gws.n() {
        if gws.strategy_counts()[player] < 2 {
            continue;
        }
        for strategy in 0..gws.strategy_counts()[player] {
            let mut reduced: Option<crate::transform::TransformResult<T>> = None;
            for s in Coalition::nonempty(gws.n()) {
                if s.contains(player) {
                    continue;
                }
                let threat = gws
                    .weakly_dominated_threat(player, strategy, s)
                    .expect("valid sweep arguments");
                if !threat {
                    continue;
                }
                let reduced = reduced.get_or_insert_with(|| {
                    let shrunk = gws
                        .delete_strategy(player, strategy)
                        .expect("at least two strategies");
                    guarantee_transform(&shrunk)
                });
                if transform.game().worth(s) != reduced.game().worth(s) {
                    return false;
                }
            }
        }
    }
    true
}

/// A coalition acting as one merged player neither gains nor loses: for all
/// `T` outside `s`, the transform agrees on `T` and on `T ∪ s` with the
/// merged family's transform.
pub fn merge_invariance<T: GameScalar>(
    gws: &GameWithStrategies<T>,
    s: Coalition,
) -> Result<bool, Error> {
    let merged = gws.merge_coalition(s)?;
    let transform = guarantee_transform(gws);
    let merged_transform = guarantee_transform(merged.game());
    for t in s.complement(gws.n()).subsets() {
        let mapped = merged.map_outside(t)?;
        if !t.is_empty() && transform.game().worth(t) != merged_transform.game().worth(mapped) {
            return Ok(false);
        }
        let with_merged = mapped.with(merged.merged_player());
        if transform.game().worth(t.union(s)) != merged_transform.game().worth(with_merged) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Merge invariance over every non-empty coalition.
pub fn merge_invariance_all<T: GameScalar>(gws: &GameWithStrategies<T>) -> bool {
    Coalition::nonempty(gws.n())
        .all(|s| merge_invariance(gws, s).expect("coalition within range"))
}

/// Superadditive table games yield a superadditive transform. Cost families
/// are checked through their negations, where the same claim applies to the
/// negated transform.
pub fn superadditivity_transmission<T: GameScalar>(gws: &GameWithStrategies<T>) -> Conditional {
    transmission(gws, |g| g.is_superadditive())
}

/// Monotone table games yield a monotone transform; negation-based for cost
/// families, as above.
pub fn monotonicity_transmission<T: GameScalar>(gws: &GameWithStrategies<T>) -> Conditional {
    transmission(gws, |g| g.is_monotone())
}

fn transmission<T: GameScalar>(
    gws: &GameWithStrategies<T>,
    property: impl Fn(&TuGame<T>) -> bool,
) -> Conditional {
    let value_view = |g: &TuGame<T>| match g.orientation() {
        Orientation::Value => property(g),
        Orientation::Cost => property(&g.negate()),
    };
    let hypothesis = gws.games().iter().all(value_view);
    Conditional::evaluate(hypothesis, || value_view(guarantee_transform(gws).game()))
}

/// Outcome of the core-intersection check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoreIntersection {
    /// The transform's worth at every coalition equals the best guarantee
    /// over fixed profiles, constraint by constraint, exactly.
    pub constraint_identity: bool,
    /// Membership in the transform's core coincides with membership in
    /// every guarantee game's core, on each sampled allocation.
    pub samples_agree: bool,
}

impl CoreIntersection {
    pub fn passes(&self) -> bool {
        self.constraint_identity && self.samples_agree
    }
}

/// The core of the transform is the intersection of the guarantee games'
/// cores: verified through the exact constraint identity plus membership
/// equivalence on the sampled allocations.
pub fn core_intersection<T: GameScalar>(
    gws: &GameWithStrategies<T>,
    samples: &[Allocation<T>],
) -> Result<CoreIntersection, Error> {
    let transform = guarantee_transform(gws);
    let grand = transform.game().worth(gws.grand_coalition()).clone();
    let guarantee_games: Vec<TuGame<T>> = gws
        .profiles()
        .map(|p| gws.guarantee_game(&p, grand.clone()))
        .collect::<Result<_, _>>()?;

    let prefer_max = gws.orientation() == Orientation::Value;
    let constraint_identity = Coalition::nonempty(gws.n()).all(|s| {
        if s == gws.grand_coalition() {
            return guarantee_games.iter().all(|g| g.worth(s) == &grand);
        }
        let best = guarantee_games
            .iter()
            .map(|g| g.worth(s))
            .reduce(|a, b| {
                if (b > a) == prefer_max {
                    b
                } else {
                    a
                }
            })
            .expect("non-empty table");
        transform.game().worth(s) == best
    });

    let mut samples_agree = true;
    for sample in samples {
        let in_transform_core = transform.game().core_contains(sample)?;
        let mut in_all = true;
        for g in &guarantee_games {
            if !g.core_contains(sample)? {
                in_all = false;
                break;
            }
        }
        if in_transform_core != in_all {
            samples_agree = false;
            break;
        }
    }

    Ok(CoreIntersection {
        constraint_identity,
        samples_agree,
    })
}
