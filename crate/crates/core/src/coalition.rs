use std::fmt;

/// Hard cap on the player count; coalitions are bitmasks over `0..n`.
pub const MAX_PLAYERS: usize = 16;

/// A subset of players, encoded as a bitmask over player indices `0..n-1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Coalition(u32);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub fn from_bits(bits: u32) -> Self {
        Coalition(bits)
    }

    pub fn singleton(player: usize) -> Self {
        debug_assert!(player < MAX_PLAYERS);
        Coalition(1 << player)
    }

    /// The grand coalition of an `n`-player game.
    pub fn grand(n: usize) -> Self {
        debug_assert!(n <= MAX_PLAYERS);
        Coalition(((1u64 << n) - 1) as u32)
    }

    pub fn from_players<I: IntoIterator<Item = usize>>(players: I) -> Self {
        let mut bits = 0u32;
        for p in players {
            debug_assert!(p < MAX_PLAYERS);
            bits |= 1 << p;
        }
        Coalition(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// Index into a worth table of length `2^n`.
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, player: usize) -> bool {
        self.0 & (1 << player) != 0
    }

    pub fn with(self, player: usize) -> Self {
        Coalition(self.0 | (1 << player))
    }

    pub fn without(self, player: usize) -> Self {
        Coalition(self.0 & !(1 << player))
    }

    pub fn union(self, other: Self) -> Self {
        Coalition(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        Coalition(self.0 & other.0)
    }

    pub fn minus(self, other: Self) -> Self {
        Coalition(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint_from(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Complement within an `n`-player game.
    pub fn complement(self, n: usize) -> Self {
        Coalition(Self::grand(n).0 & !self.0)
    }

    /// Members in ascending player order.
    pub fn members(self) -> Members {
        Members(self.0)
    }

    /// All coalitions of an `n`-player game, the empty one first.
    pub fn all(n: usize) -> impl Iterator<Item = Coalition> {
        (0..(1u64 << n)).map(|bits| Coalition(bits as u32))
    }

    /// All non-empty coalitions of an `n`-player game, ascending by bitmask.
    pub fn nonempty(n: usize) -> impl Iterator<Item = Coalition> {
        Self::all(n).skip(1)
    }

    /// All subsets of this coalition (including the empty set and itself),
    /// by the carry-rippler enumeration.
    pub fn subsets(self) -> Subsets {
        Subsets {
            set: self.0,
            subset: 0,
            done: false,
        }
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, p) in self.members().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// Iterator over the members of a coalition.
pub struct Members(u32);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let p = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(p)
    }
}

/// Iterator over all submasks of a mask.
pub struct Subsets {
    set: u32,
    subset: u32,
    done: bool,
}

impl Iterator for Subsets {
    type Item = Coalition;

    fn next(&mut self) -> Option<Coalition> {
        if self.done {
            return None;
        }
        let current = self.subset;
        self.subset = self.subset.wrapping_sub(self.set) & self.set;
        self.done = self.subset == 0;
        Some(Coalition(current))
    }
}
