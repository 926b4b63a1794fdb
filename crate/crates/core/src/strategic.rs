//! TU-games with strategies: a finite strategy set per player and a TU-game
//! attached to every strategy profile.

use crate::coalition::Coalition;
use crate::error::Error;
use crate::game::{Orientation, TuGame};
use crate::scalar::GameScalar;

/// Default cap on `profile count * 2^n`; loaders may override it.
pub const DEFAULT_SIZE_GUARD: usize = 1 << 20;

/// One strategy index per player.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct StrategyProfile(Vec<usize>);

impl StrategyProfile {
    pub fn new(choices: Vec<usize>) -> Self {
        StrategyProfile(choices)
    }

    pub fn choices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<usize>> for StrategyProfile {
    fn from(choices: Vec<usize>) -> Self {
        StrategyProfile(choices)
    }
}

/// A family of TU-games indexed by strategy profiles. The table is dense:
/// profiles are enumerated in mixed-radix order with player 0 as the most
/// significant digit, so enumeration order and lexicographic order agree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GameWithStrategies<T> {
    n: usize,
    orientation: Orientation,
    strategy_counts: Vec<usize>,
    table: Vec<TuGame<T>>,
}

impl<T: GameScalar> GameWithStrategies<T> {
    pub fn new(strategy_counts: Vec<usize>, games: Vec<TuGame<T>>) -> Result<Self, Error> {
        Self::with_size_guard(strategy_counts, games, DEFAULT_SIZE_GUARD)
    }

    pub fn with_size_guard(
        strategy_counts: Vec<usize>,
        games: Vec<TuGame<T>>,
        guard: usize,
    ) -> Result<Self, Error> {
        let first = games.first().ok_or(Error::EmptyTable)?;
        let n = first.n();
        let orientation = first.orientation();
        if strategy_counts.len() != n {
            return Err(Error::StrategyCounts {
                got: strategy_counts.len(),
                expected: n,
            });
        }
        let mut profile_count = 1u128;
        for (player, &count) in strategy_counts.iter().enumerate() {
            if count == 0 {
                return Err(Error::EmptyStrategySet { player });
            }
            profile_count *= count as u128;
        }
        let cells = profile_count.saturating_mul(1u128 << n);
        if cells > guard as u128 {
            return Err(Error::SizeGuard {
                cells: cells.min(usize::MAX as u128) as usize,
                guard,
            });
        }
        if games.len() as u128 != profile_count {
            return Err(Error::TableLength {
                got: games.len(),
                expected: profile_count as usize,
            });
        }
        if games
            .iter()
            .any(|g| g.n() != n || g.orientation() != orientation)
        {
            return Err(Error::MixedTable);
        }
        Ok(GameWithStrategies {
            n,
            orientation,
            strategy_counts,
            table: games,
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

    pub fn strategy_counts(&self) -> &[usize] {
        &self.strategy_counts
    }

    pub fn profile_count(&self) -> usize {
        self.table.len()
    }

    pub fn games(&self) -> &[TuGame<T>] {
        &self.table
    }

    /// All profiles in canonical (lexicographic) order.
    pub fn profiles(&self) -> impl Iterator<Item = StrategyProfile> {
        mixed_radix(self.strategy_counts.clone()).map(StrategyProfile)
    }

    /// Canonical table position of a profile, validating every choice.
    pub fn profile_index(&self, profile: &StrategyProfile) -> Result<usize, Error> {
        if profile.len() != self.n {
            return Err(Error::ProfileLength {
                got: profile.len(),
                expected: self.n,
            });
        }
        let mut index = 0usize;
        for (player, (&choice, &count)) in profile
            .choices()
            .iter()
            .zip(&self.strategy_counts)
            .enumerate()
        {
            if choice >= count {
                return Err(Error::StrategyOutOfRange {
                    player,
                    strategy: choice,
                    count,
                });
            }
            index = index * count + choice;
        }
        Ok(index)
    }

    pub fn game_at(&self, profile: &StrategyProfile) -> Result<&TuGame<T>, Error> {
        Ok(&self.table[self.profile_index(profile)?])
    }

    /// Remove one strategy of one player; the table restricts accordingly.
    pub fn delete_strategy(&self, player: usize, strategy: usize) -> Result<Self, Error> {
        self.check_player(player)?;
        let count = self.strategy_counts[player];
        if strategy >= count {
            return Err(Error::StrategyOutOfRange {
                player,
                strategy,
                count,
            });
        }
        if count == 1 {
            return Err(Error::LastStrategy { player });
        }
        let mut counts = self.strategy_counts.clone();
        counts[player] -= 1;
        // Filtering the canonical enumeration preserves canonical order for
        // the shrunken radix.
        let table: Vec<TuGame<T>> = self
            .profiles()
            .zip(&self.table)
            .filter(|(p, _)| p.choices()[player] != strategy)
            .map(|(_, g)| g.clone())
            .collect();
        GameWithStrategies::with_size_guard(counts, table, usize::MAX)
    }

    /// Is `strategy` weakly dominated for `player` in coalition `s`: does a
    /// single alternative do at least as well for `s` against every profile
    /// of the other players? Returns the dominating strategy when one
    /// exists. For cost families "at least as well" means "at most as
    /// costly".
    pub fn weakly_dominated_in(
        &self,
        player: usize,
        strategy: usize,
        s: Coalition,
    ) -> Result<Option<usize>, Error> {
        self.check_player(player)?;
        self.check_coalition(s)?;
        if !s.contains(player) {
            return Err(Error::PlayerNotInCoalition {
                player,
                coalition: s,
            });
        }
        let count = self.strategy_counts[player];
        if strategy >= count {
            return Err(Error::StrategyOutOfRange {
                player,
                strategy,
                count,
            });
        }
        let others = self.players_except(player);
        for alternative in 0..count {
            if alternative == strategy {
                continue;
            }
            let dominates = self.assignments_over(&others).all(|assignment| {
                let with_alt = self.worth_at(&others, &assignment, player, alternative, s);
                let with_orig = self.worth_at(&others, &assignment, player, strategy, s);
                match self.orientation {
                    Orientation::Value => with_alt >= with_orig,
                    Orientation::Cost => with_alt <= with_orig,
                }
            });
            if dominates {
                return Ok(Some(alternative));
            }
        }
        Ok(None)
    }

    /// Is `strategy` a weakly dominated threat by outsider `player` against
    /// coalition `s`: against every profile of the other players, does some
    /// alternative (possibly a different one each time) hurt `s` at least
    /// as much? For cost families "hurt" means raising the cost.
    pub fn weakly_dominated_threat(
        &self,
        player: usize,
        strategy: usize,
        s: Coalition,
    ) -> Result<bool, Error> {
        self.check_player(player)?;
        self.check_coalition(s)?;
        if s.is_empty() {
            return Err(Error::EmptyCoalition);
        }
        if s.contains(player) {
            return Err(Error::PlayerInCoalition {
                player,
                coalition: s,
            });
        }
        let count = self.strategy_counts[player];
        if strategy >= count {
            return Err(Error::StrategyOutOfRange {
                player,
                strategy,
                count,
            });
        }
        if count == 1 {
            return Ok(false);
        }
        let others = self.players_except(player);
        let all_covered = self.assignments_over(&others).all(|assignment| {
            let with_orig = self.worth_at(&others, &assignment, player, strategy, s);
            (0..count).filter(|&alt| alt != strategy).any(|alt| {
                let with_alt = self.worth_at(&others, &assignment, player, alt, s);
                match self.orientation {
                    Orientation::Value => with_alt <= with_orig,
                    Orientation::Cost => with_alt >= with_orig,
                }
            })
        });
        Ok(all_covered)
    }

    /// Worst case for coalition `s` once its members commit to their part of
    /// `profile`: the minimum over outsider completions for value families,
    /// the maximum for cost families.
    pub fn coalition_guarantee(&self, s: Coalition, profile: &StrategyProfile) -> Result<T, Error> {
        self.check_coalition(s)?;
        if s.is_empty() {
            return Err(Error::EmptyCoalition);
        }
        self.profile_index(profile)?;
        let outside = self.members_of(s.complement(self.n));
        let mut full = profile.choices().to_vec();
        let mut best: Option<T> = None;
        for completion in self.assignments_over(&outside) {
            for (&pos, &choice) in outside.iter().zip(&completion) {
                full[pos] = choice;
            }
            let index = self.raw_index(&full);
            let worth = self.table[index].worth(s);
            let better = match (&best, self.orientation) {
                (None, _) => true,
                (Some(b), Orientation::Value) => worth < b,
                (Some(b), Orientation::Cost) => worth > b,
            };
            if better {
                best = Some(worth.clone());
            }
        }
        Ok(best.expect("strategy sets are non-empty"))
    }

    /// The guarantee game for a fixed profile: every proper coalition gets
    /// its worst case over outsider deviations, and the grand coalition is
    /// pinned to the supplied transform worth.
    pub fn guarantee_game(
        &self,
        profile: &StrategyProfile,
        grand_worth: T,
    ) -> Result<TuGame<T>, Error> {
        self.profile_index(profile)?;
        let mut worth = vec![T::zero(); 1 << self.n];
        for s in Coalition::nonempty(self.n) {
            if s == self.grand_coalition() {
                worth[s.index()] = grand_worth.clone();
            } else {
                worth[s.index()] = self.coalition_guarantee(s, profile)?;
            }
        }
        TuGame::from_worths(self.n, self.orientation, worth)
    }

    /// Treat coalition `s` as a single merged player, indexed first; the
    /// remaining players keep their relative order. The merged player's
    /// strategies are the `s`-profiles in mixed-radix order (members
    /// ascending, first member most significant).
    pub fn merge_coalition(&self, s: Coalition) -> Result<MergedGame<T>, Error> {
        self.check_coalition(s)?;
        if s.is_empty() {
            return Err(Error::EmptyCoalition);
        }
        let members = self.members_of(s);
        let outside = self.members_of(s.complement(self.n));
        let merged_count: usize = members.iter().map(|&p| self.strategy_counts[p]).product();
        let mut counts = Vec::with_capacity(outside.len() + 1);
        counts.push(merged_count);
        counts.extend(outside.iter().map(|&p| self.strategy_counts[p]));

        let merged_n = outside.len() + 1;
        let mut games = Vec::with_capacity(self.table.len());
        for assignment in mixed_radix(counts.clone()) {
            let original = self.unmerge_profile(&members, &outside, &assignment);
            let source = &self.table[self.raw_index(&original)];
            let mut worth = vec![T::zero(); 1 << merged_n];
            for merged in Coalition::nonempty(merged_n) {
                let mut orig = if merged.contains(0) { s } else { Coalition::EMPTY };
                for k in merged.members().filter(|&k| k > 0) {
                    orig = orig.with(outside[k - 1]);
                }
                worth[merged.index()] = source.worth(orig).clone();
            }
            games.push(TuGame::from_worths(merged_n, self.orientation, worth)?);
        }
        let game = GameWithStrategies::with_size_guard(counts, games, usize::MAX)?;
        let member_counts = members.iter().map(|&p| self.strategy_counts[p]).collect();
        Ok(MergedGame {
            game,
            source: s,
            members,
            member_counts,
            outside,
        })
    }

    fn unmerge_profile(
        &self,
        members: &[usize],
        outside: &[usize],
        merged: &[usize],
    ) -> Vec<usize> {
        let mut original = vec![0usize; self.n];
        let mut sigma = merged[0];
        for &p in members.iter().rev() {
            original[p] = sigma % self.strategy_counts[p];
            sigma /= self.strategy_counts[p];
        }
        for (&p, &choice) in outside.iter().zip(&merged[1..]) {
            original[p] = choice;
        }
        original
    }

    fn raw_index(&self, choices: &[usize]) -> usize {
        let mut index = 0usize;
        for (&choice, &count) in choices.iter().zip(&self.strategy_counts) {
            index = index * count + choice;
        }
        index
    }

    fn members_of(&self, s: Coalition) -> Vec<usize> {
        s.members().collect()
    }

    fn players_except(&self, player: usize) -> Vec<usize> {
        (0..self.n).filter(|&p| p != player).collect()
    }

    fn assignments_over(&self, positions: &[usize]) -> impl Iterator<Item = Vec<usize>> {
        mixed_radix(positions.iter().map(|&p| self.strategy_counts[p]).collect())
    }

    fn worth_at(
        &self,
        positions: &[usize],
        assignment: &[usize],
        player: usize,
        strategy: usize,
        s: Coalition,
    ) -> &T {
        let mut choices = vec![0usize; self.n];
        for (&pos, &choice) in positions.iter().zip(assignment) {
            choices[pos] = choice;
        }
        choices[player] = strategy;
        self.table[self.raw_index(&choices)].worth(s)
    }

    fn check_player(&self, player: usize) -> Result<(), Error> {
        if player >= self.n {
            return Err(Error::PlayerOutOfRange {
                player,
                players: self.n,
            });
        }
        Ok(())
    }

    fn check_coalition(&self, s: Coalition) -> Result<(), Error> {
        if !s.is_subset_of(self.grand_coalition()) {
            return Err(Error::CoalitionOutOfRange {
                coalition: s,
                players: self.n,
            });
        }
        Ok(())
    }
}

/// The result of merging a coalition into one player.
#[derive(Clone, Debug)]
pub struct MergedGame<T> {
    game: GameWithStrategies<T>,
    source: Coalition,
    members: Vec<usize>,
    member_counts: Vec<usize>,
    outside: Vec<usize>,
}

impl<T: GameScalar> MergedGame<T> {
    pub fn game(&self) -> &GameWithStrategies<T> {
        &self.game
    }

    pub fn source(&self) -> Coalition {
        self.source
    }

    /// The merged player's index in the new game.
    pub fn merged_player(&self) -> usize {
        0
    }

    /// Map a coalition of original outside players into the merged game.
    pub fn map_outside(&self, t: Coalition) -> Result<Coalition, Error> {
        if !t.is_disjoint_from(self.source) {
            return Err(Error::PlayerInCoalition {
                player: t.intersection(self.source).members().next().unwrap(),
                coalition: self.source,
            });
        }
        let mut mapped = Coalition::EMPTY;
        for p in t.members() {
            let k = self
                .outside
                .iter()
                .position(|&o| o == p)
                .ok_or(Error::CoalitionOutOfRange {
                    coalition: t,
                    players: self.outside.len() + 1,
                })?;
            mapped = mapped.with(k + 1);
        }
        Ok(mapped)
    }

    /// Decode a merged profile back into a profile of the original game.
    pub fn original_profile(&self, merged: &StrategyProfile) -> Result<StrategyProfile, Error> {
        self.game.profile_index(merged)?;
        let n = self.members.len() + self.outside.len();
        let mut original = vec![0usize; n];
        let mut sigma = merged.choices()[0];
        for (&p, &count) in self.members.iter().zip(&self.member_counts).rev() {
            original[p] = sigma % count;
            sigma /= count;
        }
        for (&p, &choice) in self.outside.iter().zip(&merged.choices()[1..]) {
            original[p] = choice;
        }
        Ok(StrategyProfile::new(original))
    }

    /// Encode an original profile as a merged one (the bijection inverse).
    pub fn merged_profile(&self, original: &StrategyProfile) -> Result<StrategyProfile, Error> {
        if original.len() != self.members.len() + self.outside.len() {
            return Err(Error::ProfileLength {
                got: original.len(),
                expected: self.members.len() + self.outside.len(),
            });
        }
        let mut sigma = 0usize;
        for (&p, &count) in self.members.iter().zip(&self.member_counts) {
            sigma = sigma * count + original.choices()[p];
        }
        let mut choices = Vec::with_capacity(self.outside.len() + 1);
        choices.push(sigma);
        choices.extend(self.outside.iter().map(|&p| original.choices()[p]));
        let merged = StrategyProfile::new(choices);
        self.game.profile_index(&merged)?;
        Ok(merged)
    }
}

/// Mixed-radix counter yielding assignments in lexicographic order; an empty
/// radix vector yields exactly one empty assignment.
pub(crate) fn mixed_radix(radices: Vec<usize>) -> MixedRadix {
    let start = if radices.contains(&0) {
        None
    } else {
        Some(vec![0; radices.len()])
    };
    MixedRadix {
        radices,
        next: start,
    }
}

pub(crate) struct MixedRadix {
    radices: Vec<usize>,
    next: Option<Vec<usize>>,
}

impl Iterator for MixedRadix {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut pos = self.radices.len();
        while pos > 0 {
            pos -= 1;
            succ[pos] += 1;
            if succ[pos] < self.radices[pos] {
                self.next = Some(succ);
                return Some(current);
            }
            succ[pos] = 0;
        }
        Some(current)
    }
}
