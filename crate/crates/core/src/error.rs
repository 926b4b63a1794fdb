use crate::coalition::Coalition;
use crate::game::Orientation;

/// Errors raised by game construction and the operations on games.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("player count must be between 1 and {max}, got {got}")]
    PlayerCount { got: usize, max: usize },
    #[error("coalition {coalition:?} is out of range for {players} players")]
    CoalitionOutOfRange {
        coalition: Coalition,
        players: usize,
    },
    #[error("the empty coalition must have worth 0")]
    NonzeroEmptyWorth,
    #[error("worth table has {got} entries, expected {expected}")]
    WorthTableLength { got: usize, expected: usize },
    #[error("negative cost {cost} for player {player} in an airport game")]
    NegativeAirportCost { player: usize, cost: String },
    #[error("allocation has {got} entries, game has {expected} players")]
    AllocationLength { got: usize, expected: usize },
    #[error("vertex enumeration is capped at {max} players, got {got}")]
    VertexEnumerationSize { got: usize, max: usize },
    #[error("player index {player} is out of range for {players} players")]
    PlayerOutOfRange { player: usize, players: usize },
    #[error("strategy table has {got} games, expected {expected}")]
    TableLength { got: usize, expected: usize },
    #[error("every player needs at least one strategy, player {player} has none")]
    EmptyStrategySet { player: usize },
    #[error("{got} strategy counts for {expected} players")]
    StrategyCounts { got: usize, expected: usize },
    #[error("all games in a strategy table must share player count and orientation")]
    MixedTable,
    #[error("strategy table needs at least one game")]
    EmptyTable,
    #[error("table size {cells} exceeds the size guard {guard}")]
    SizeGuard { cells: usize, guard: usize },
    #[error("profile has {got} choices, expected {expected}")]
    ProfileLength { got: usize, expected: usize },
    #[error("strategy index {strategy} is out of range for player {player} ({count} strategies)")]
    StrategyOutOfRange {
        player: usize,
        strategy: usize,
        count: usize,
    },
    #[error("cannot delete the last strategy of player {player}")]
    LastStrategy { player: usize },
    #[error("player {player} must belong to the coalition {coalition:?}")]
    PlayerNotInCoalition {
        player: usize,
        coalition: Coalition,
    },
    #[error("player {player} must stay outside the coalition {coalition:?}")]
    PlayerInCoalition {
        player: usize,
        coalition: Coalition,
    },
    #[error("operation needs a non-empty coalition")]
    EmptyCoalition,
    #[error("expected a {expected:?}-oriented input, got {got:?}")]
    Orientation {
        expected: Orientation,
        got: Orientation,
    },
    #[error("the two families must share players, strategy counts and orientation")]
    ShapeMismatch,
    #[error("generator parameters out of range: {0}")]
    GeneratorParameters(String),
}
