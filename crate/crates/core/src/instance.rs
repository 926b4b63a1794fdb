//! The JSON document format for game families and raw TU-games.
//!
//! A family document lists players, per-player strategy names, and one worth
//! map per strategy profile. Profile keys join strategy names with `,`;
//! coalition keys join player names with `+`. Worths are exact rational
//! strings (integers, `p/q`, or finite decimals); unlisted coalitions
//! default to 0 and the empty coalition may only appear with worth 0.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::coalition::Coalition;
use crate::error::Error;
use crate::game::Orientation;
use crate::rational::{parse_rational, ParseRationalError};
use crate::strategic::{StrategyProfile, DEFAULT_SIZE_GUARD};
use crate::{Game, Rational, StrategicGame};

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("document must contain either \"games\" (a family) or \"worths\" (a single game)")]
    UnknownDocument,
    #[error("duplicate player name {0:?}")]
    DuplicatePlayerName(String),
    #[error("invalid player name {0:?} (names are non-empty and avoid '+' and ',')")]
    BadPlayerName(String),
    #[error("expected {players} strategy lists, got {lists}")]
    StrategyListCount { players: usize, lists: usize },
    #[error("duplicate strategy name {name:?} for player {player:?}")]
    DuplicateStrategyName { player: String, name: String },
    #[error("invalid strategy name {0:?} (names are non-empty and avoid ',')")]
    BadStrategyName(String),
    #[error("profile key {key:?} has {got} names, expected {expected}")]
    ProfileKeyArity {
        key: String,
        got: usize,
        expected: usize,
    },
    #[error("unknown strategy {name:?} for player {player:?} in profile key {key:?}")]
    UnknownStrategy {
        key: String,
        player: String,
        name: String,
    },
    #[error("duplicate profile {0:?}")]
    DuplicateProfile(String),
    #[error("missing profile {0:?}")]
    MissingProfile(String),
    #[error("unknown player {name:?} in coalition key {key:?}")]
    UnknownPlayer { key: String, name: String },
    #[error("player {name:?} listed twice in coalition key {key:?}")]
    RepeatedPlayer { key: String, name: String },
    #[error("the empty coalition in profile {profile:?} must have worth 0")]
    NonzeroEmptyCoalition { profile: String },
    #[error("bad worth for coalition {key:?} in profile {profile:?}: {source}")]
    BadWorth {
        profile: String,
        key: String,
        source: ParseRationalError,
    },
    #[error(transparent)]
    Game(#[from] Error),
}

/// Player names plus per-player strategy names, for reading and writing
/// documents and reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceNames {
    pub players: Vec<String>,
    pub strategies: Vec<Vec<String>>,
}

impl InstanceNames {
    /// Numbered players and strategy names `s1, s2, ...` per player.
    pub fn default_for(strategy_counts: &[usize]) -> Self {
        InstanceNames {
            players: (1..=strategy_counts.len()).map(|i| i.to_string()).collect(),
            strategies: strategy_counts
                .iter()
                .map(|&c| (1..=c).map(|k| format!("s{k}")).collect())
                .collect(),
        }
    }

    pub fn coalition_key(&self, s: Coalition) -> String {
        let names: Vec<&str> = s.members().map(|i| self.players[i].as_str()).collect();
        names.join("+")
    }

    pub fn profile_key(&self, profile: &StrategyProfile) -> String {
        let names: Vec<&str> = profile
            .choices()
            .iter()
            .enumerate()
            .map(|(player, &s)| self.strategies[player][s].as_str())
            .collect();
        names.join(",")
    }
}

/// A loaded family document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedInstance {
    pub names: InstanceNames,
    pub family: StrategicGame,
}

/// A loaded raw-game document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedGame {
    pub players: Vec<String>,
    pub game: Game,
}

/// Either kind of document.
#[derive(Clone, Debug)]
pub enum Document {
    Family(NamedInstance),
    Single(NamedGame),
}

#[derive(Serialize, Deserialize)]
struct FamilyDoc {
    orientation: Orientation,
    players: Vec<String>,
    strategies: Vec<Vec<String>>,
    games: BTreeMap<String, BTreeMap<String, String>>,
}

#[derive(Serialize, Deserialize)]
struct GameDoc {
    orientation: Orientation,
    players: Vec<String>,
    worths: BTreeMap<String, String>,
}

/// Load either document kind from a file, with the default size guard.
pub fn load_path(path: &Path) -> Result<Document, LoadError> {
    load_path_with_guard(path, DEFAULT_SIZE_GUARD)
}

pub fn load_path_with_guard(path: &Path, guard: usize) -> Result<Document, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.display().to_string(),
        source,
    })?;
    load_str_with_guard(&text, guard)
}

pub fn load_str_with_guard(text: &str, guard: usize) -> Result<Document, LoadError> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let object = value.as_object();
    if object.is_some_and(|o| o.contains_key("games")) {
        Ok(Document::Family(instance_from_value(value, guard)?))
    } else if object.is_some_and(|o| o.contains_key("worths")) {
        Ok(Document::Single(game_from_value(value)?))
    } else {
        Err(LoadError::UnknownDocument)
    }
}

/// Load a family document from a string.
pub fn load_instance_str(text: &str, guard: usize) -> Result<NamedInstance, LoadError> {
    instance_from_value(serde_json::from_str(text)?, guard)
}

fn instance_from_value(value: serde_json::Value, guard: usize) -> Result<NamedInstance, LoadError> {
    let doc: FamilyDoc = serde_json::from_value(value)?;
    let names = validated_names(&doc.players, Some(&doc.strategies))?;
    let n = names.players.len();
    let player_index = index_map(&names.players);
    let counts: Vec<usize> = names.strategies.iter().map(Vec::len).collect();

    // Keys are normalized (trimmed names) before the duplicate check, so
    // re-spellings of one profile are caught; exact byte-duplicate keys
    // collapse earlier under standard JSON object semantics.
    let mut by_profile: HashMap<Vec<usize>, BTreeMap<String, String>> = HashMap::new();
    for (key, worths) in doc.games {
        let profile = parse_profile_key(&key, &names)?;
        if by_profile.insert(profile, worths).is_some() {
            return Err(LoadError::DuplicateProfile(key));
        }
    }

    let mut table = Vec::with_capacity(by_profile.len());
    for choices in crate::strategic::mixed_radix(counts.clone()) {
        let key = names.profile_key(&StrategyProfile::new(choices.clone()));
        let worths = by_profile
            .remove(&choices)
            .ok_or_else(|| LoadError::MissingProfile(key.clone()))?;
        table.push(parse_worth_map(&key, worths, n, doc.orientation, &player_index)?);
    }
    let family = StrategicGame::with_size_guard(counts, table, guard)?;
    Ok(NamedInstance { names, family })
}

fn game_from_value(value: serde_json::Value) -> Result<NamedGame, LoadError> {
    let doc: GameDoc = serde_json::from_value(value)?;
    let names = validated_names(&doc.players, None)?;
    let player_index = index_map(&names.players);
    let game = parse_worth_map(
        "(single game)",
        doc.worths,
        names.players.len(),
        doc.orientation,
        &player_index,
    )?;
    Ok(NamedGame {
        players: names.players,
        game,
    })
}

fn validated_names(
    players: &[String],
    strategies: Option<&Vec<Vec<String>>>,
) -> Result<InstanceNames, LoadError> {
    for name in players {
        if name.is_empty() || name.contains('+') || name.contains(',') {
            return Err(LoadError::BadPlayerName(name.clone()));
        }
    }
    let mut seen = std::collections::HashSet::new();
    for name in players {
        if !seen.insert(name.trim()) {
            return Err(LoadError::DuplicatePlayerName(name.clone()));
        }
    }
    let strategies = match strategies {
        None => vec![],
        Some(lists) => {
            if lists.len() != players.len() {
                return Err(LoadError::StrategyListCount {
                    players: players.len(),
                    lists: lists.len(),
                });
            }
            for (player, list) in players.iter().zip(lists) {
                let mut seen = std::collections::HashSet::new();
                for name in list {
                    if name.is_empty() || name.contains(',') {
                        return Err(LoadError::BadStrategyName(name.clone()));
                    }
                    if !seen.insert(name.trim()) {
                        return Err(LoadError::DuplicateStrategyName {
                            player: player.clone(),
                            name: name.clone(),
                        });
                    }
                }
            }
            lists.clone()
        }
    };
    Ok(InstanceNames {
        players: players.to_vec(),
        strategies,
    })
}

fn index_map(names: &[String]) -> HashMap<&str, usize> {
    names
        .iter()
        .enumerate()
        .map(|(i, name)| (name.as_str(), i))
        .collect()
}

fn parse_profile_key(key: &str, names: &InstanceNames) -> Result<Vec<usize>, LoadError> {
    let parts: Vec<&str> = key.split(',').map(str::trim).collect();
    if parts.len() != names.players.len() {
        return Err(LoadError::ProfileKeyArity {
            key: key.to_owned(),
            got: parts.len(),
            expected: names.players.len(),
        });
    }
    parts
        .iter()
        .enumerate()
        .map(|(player, part)| {
            names.strategies[player]
                .iter()
                .position(|s| s.trim() == *part)
                .ok_or_else(|| LoadError::UnknownStrategy {
                    key: key.to_owned(),
                    player: names.players[player].clone(),
                    name: (*part).to_owned(),
                })
        })
        .collect()
}

fn parse_coalition_key(
    key: &str,
    player_index: &HashMap<&str, usize>,
) -> Result<Coalition, LoadError> {
    let trimmed = key.trim();
    if trimmed.is_empty() || trimmed == "∅" {
        return Ok(Coalition::EMPTY);
    }
    let mut coalition = Coalition::EMPTY;
    for name in trimmed.split('+').map(str::trim) {
        let &index = player_index
            .get(name)
            .ok_or_else(|| LoadError::UnknownPlayer {
                key: key.to_owned(),
                name: name.to_owned(),
            })?;
        if coalition.contains(index) {
            return Err(LoadError::RepeatedPlayer {
                key: key.to_owned(),
                name: name.to_owned(),
            });
        }
        coalition = coalition.with(index);
    }
    Ok(coalition)
}

fn parse_worth_map(
    profile_key: &str,
    worths: BTreeMap<String, String>,
    n: usize,
    orientation: Orientation,
    player_index: &HashMap<&str, usize>,
) -> Result<Game, LoadError> {
    let mut entries: Vec<(Coalition, Rational)> = Vec::with_capacity(worths.len());
    for (key, text) in worths {
        let coalition = parse_coalition_key(&key, player_index)?;
        let worth = parse_rational(&text).map_err(|source| LoadError::BadWorth {
            profile: profile_key.to_owned(),
            key: key.clone(),
            source,
        })?;
        if coalition.is_empty() && !num_traits::Zero::is_zero(&worth) {
            return Err(LoadError::NonzeroEmptyCoalition {
                profile: profile_key.to_owned(),
            });
        }
        entries.push((coalition, worth));
    }
    Ok(Game::from_entries(n, orientation, entries)?)
}

/// Serialize a family with its names back into the document format, with
/// deterministic key order. Zero worths are omitted (they are the default).
pub fn instance_to_string(instance: &NamedInstance) -> String {
    let names = &instance.names;
    let family = &instance.family;
    let mut games: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
    for profile in family.profiles() {
        let game = family.game_at(&profile).expect("canonical profile");
        let mut worths = BTreeMap::new();
        for (s, w) in game.worths() {
            if !num_traits::Zero::is_zero(w) {
                worths.insert(names.coalition_key(s), w.to_string());
            }
        }
        games.insert(names.profile_key(&profile), worths);
    }
    let doc = FamilyDoc {
        orientation: family.orientation(),
        players: names.players.clone(),
        strategies: names.strategies.clone(),
        games,
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("serializable document");
    out.push('\n');
    out
}
