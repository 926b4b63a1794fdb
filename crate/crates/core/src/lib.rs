//! Exact-arithmetic toolkit for TU-games with strategies.
//!
//! A *TU-game with strategies* attaches a transferable-utility game to every
//! strategy profile of a finite player set. This crate turns such families
//! into single TU-games via the guarantee-based maxmin transform (minmax for
//! cost families) or the optimistic maxmax transform, and supplies the
//! classical solution concepts on the result: the Shapley value, core
//! membership, balancedness via exact linear programming, and core vertex
//! enumeration. Airport and simple game families get their specialised
//! balancedness tests, and the `checks` module verifies the transform's
//! characteristic properties on concrete instances.
//!
//! All numeric work is generic over [`GameScalar`]; the shipped aliases
//! ([`Rational`], [`Game`], [`StrategicGame`]) instantiate everything with
//! arbitrary-precision rationals, so no operation ever rounds.

pub mod checks;
pub mod classes;
pub mod coalition;
mod core;
pub mod error;
pub mod game;
pub mod generator;
pub mod instance;
mod props;
pub mod rational;
pub mod scalar;
mod shapley;
pub mod simplex;
pub mod strategic;
pub mod transform;

pub use crate::coalition::{Coalition, MAX_PLAYERS};
pub use crate::core::MAX_VERTEX_PLAYERS;
pub use crate::error::Error;
pub use crate::game::{Allocation, Orientation, TuGame};
pub use crate::scalar::GameScalar;
pub use crate::strategic::{
    GameWithStrategies, MergedGame, StrategyProfile, DEFAULT_SIZE_GUARD,
};
pub use crate::transform::{
    guarantee_transform, maxmax, maxmin, minmax, Procedure, TransformResult,
};

/// Exact rational scalar backing the shipped aliases.
pub type Rational = num_rational::BigRational;
/// A TU-game over exact rationals.
pub type Game = TuGame<Rational>;
/// A TU-game with strategies over exact rationals.
pub type StrategicGame = GameWithStrategies<Rational>;
/// A payoff vector over exact rationals.
pub type RationalAllocation = Allocation<Rational>;

#[cfg(test)]
pub(crate) mod testfam;
