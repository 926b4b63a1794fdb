//! Deterministic random instances for the property suites and the `gen`
//! command. A small in-crate SplitMix64 keeps output stable across
//! platforms and releases.

use std::fmt;
use std::str::FromStr;

use crate::coalition::Coalition;
use crate::game::Orientation;
use crate::rational::ratio;
use crate::{Error, Game, Rational, StrategicGame};

/// Structural class the generated table games are drawn from; the class
/// constraint is enforced by construction.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GameClass {
    General,
    Superadditive,
    Monotone,
    Simple,
    Airport,
}

impl GameClass {
    pub const ALL: [GameClass; 5] = [
        GameClass::General,
        GameClass::Superadditive,
        GameClass::Monotone,
        GameClass::Simple,
        GameClass::Airport,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GameClass::General => "general",
            GameClass::Superadditive => "superadditive",
            GameClass::Monotone => "monotone",
            GameClass::Simple => "simple",
            GameClass::Airport => "airport",
        }
    }
}

impl fmt::Display for GameClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GameClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        GameClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::GeneratorParameters(format!("unknown class {s:?}")))
    }
}

const MAX_GEN_PLAYERS: usize = 4;
const MAX_GEN_STRATEGIES: usize = 3;

/// Generate a family of `n` players with up to `max_strats` strategies per
/// player. Deterministic for a fixed seed.
pub fn generate(
    seed: u64,
    n: usize,
    max_strats: usize,
    class: GameClass,
) -> Result<StrategicGame, Error> {
    if n == 0 || n > MAX_GEN_PLAYERS {
        return Err(Error::GeneratorParameters(format!(
            "player count must be between 1 and {MAX_GEN_PLAYERS}, got {n}"
        )));
    }
    if max_strats == 0 || max_strats > MAX_GEN_STRATEGIES {
        return Err(Error::GeneratorParameters(format!(
            "strategies per player must be between 1 and {MAX_GEN_STRATEGIES}, got {max_strats}"
        )));
    }
    let mut rng = SplitMix64::new(seed ^ class_salt(class));
    let counts: Vec<usize> = (0..n).map(|_| 1 + rng.below(max_strats as u64) as usize).collect();
    let profile_count: usize = counts.iter().product();

    // A shared most-costly player (half the time) keeps the airport pivot
    // condition non-vacuous across a seed sweep.
    let dominant_player = (class == GameClass::Airport && rng.below(2) == 0).then(|| n - 1);

    let games: Vec<Game> = (0..profile_count)
        .map(|_| random_game(&mut rng, n, class, dominant_player))
        .collect();
    StrategicGame::new(counts, games)
}

fn class_salt(class: GameClass) -> u64 {
    match class {
        GameClass::General => 0x67656e,
        GameClass::Superadditive => 0x737570,
        GameClass::Monotone => 0x6d6f6e,
        GameClass::Simple => 0x73696d,
        GameClass::Airport => 0x616972,
    }
}

fn random_game(rng: &mut SplitMix64, n: usize, class: GameClass, dominant: Option<usize>) -> Game {
    match class {
        GameClass::General => {
            let worth = random_worths(rng, n);
            Game::from_worths(n, Orientation::Value, worth).expect("valid table")
        }
        GameClass::Superadditive => {
            // The superadditive cover of an arbitrary game: the best worth
            // over all partitions, computed by submask dynamic programming.
            let mut worth = random_worths(rng, n);
            for s in Coalition::nonempty(n) {
                let mut best = worth[s.index()].clone();
                for t in s.subsets() {
                    if t.is_empty() || t == s {
                        continue;
                    }
                    let split = worth[t.index()].clone() + worth[s.minus(t).index()].clone();
                    if split > best {
                        best = split;
                    }
                }
                worth[s.index()] = best;
            }
            Game::from_worths(n, Orientation::Value, worth).expect("valid table")
        }
        GameClass::Monotone => {
            // Running maxima over non-negative raw worths.
            let mut worth: Vec<Rational> = (0..1usize << n)
                .map(|_| ratio(rng.below(11) as i64, 1))
                .collect();
            worth[0] = ratio(0, 1);
            for s in Coalition::nonempty(n) {
                for i in s.members() {
                    let below = worth[s.without(i).index()].clone();
                    if below > worth[s.index()] {
                        worth[s.index()] = below;
                    }
                }
            }
            Game::from_worths(n, Orientation::Value, worth).expect("valid table")
        }
        GameClass::Simple => {
            // Random winning seeds, closed upwards, grand coalition forced.
            let mut worth = vec![ratio(0, 1); 1 << n];
            for s in Coalition::nonempty(n) {
                if rng.below(4) == 0 {
                    worth[s.index()] = ratio(1, 1);
                }
                for i in s.members() {
                    if worth[s.without(i).index()] == ratio(1, 1) {
                        worth[s.index()] = ratio(1, 1);
                    }
                }
            }
            worth[Coalition::grand(n).index()] = ratio(1, 1);
            Game::from_worths(n, Orientation::Value, worth).expect("valid table")
        }
        GameClass::Airport => {
            let mut costs: Vec<Rational> =
                (0..n).map(|_| ratio(rng.below(10) as i64, 1)).collect();
            if let Some(player) = dominant {
                let max = costs.iter().cloned().max().expect("non-empty");
                costs[player] = max + ratio(rng.below(3) as i64, 1);
            }
            Game::airport(&costs).expect("non-negative costs")
        }
    }
}

fn random_worths(rng: &mut SplitMix64, n: usize) -> Vec<Rational> {
    let mut worth: Vec<Rational> = (0..1usize << n)
        .map(|_| {
            let numer = rng.below(41) as i64 - 20;
            let denom = [1, 1, 1, 2, 4][rng.below(5) as usize];
            ratio(numer, denom)
        })
        .collect();
    worth[0] = ratio(0, 1);
    worth
}

/// SplitMix64: tiny, seedable, stable.
pub struct SplitMix64(u64);

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}
