use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A subset `α` of `{0, .., n-1}`, stored as a bitmask.
///
/// Indices are 0-based in the API. `Display` and JSON use the 1-based
/// convention of the mathematics (`{1,3}`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet {
    universe: usize,
    mask: u64,
}

impl IndexSet {
    /// Largest supported universe.
    pub const MAX_UNIVERSE: usize = 63;

    /// Builds a nonempty index set. Duplicates are rejected.
    pub fn new(universe: usize, members: &[usize]) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::EmptyIndexSet);
        }
        Self::with_members(universe, members)
    }

    /// Like [`IndexSet::new`] but allows the empty set.
    pub fn with_members(universe: usize, members: &[usize]) -> Result<Self> {
        if universe > Self::MAX_UNIVERSE {
            return Err(Error::OrderTooLarge { order: universe, max: Self::MAX_UNIVERSE });
        }
        let mut mask = 0u64;
        for &i in members {
            if i >= universe {
                return Err(Error::IndexOutOfRange { index: i, order: universe });
            }
            if mask & (1 << i) != 0 {
                return Err(Error::DuplicateIndex(i));
            }
            mask |= 1 << i;
        }
        Ok(IndexSet { universe, mask })
    }

    pub fn empty(universe: usize) -> Self {
        assert!(universe <= Self::MAX_UNIVERSE);
        IndexSet { universe, mask: 0 }
    }

    pub fn full(universe: usize) -> Self {
        assert!(universe <= Self::MAX_UNIVERSE);
        IndexSet { universe, mask: full_mask(universe) }
    }

    pub(crate) fn mask(&self) -> u64 {
        self.mask
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.mask & (1 << i) != 0
    }

    /// Members in increasing order.
    pub fn members(&self) -> Vec<usize> {
        (0..self.universe).filter(|&i| self.contains(i)).collect()
    }

    pub fn complement(&self) -> IndexSet {
        IndexSet { universe: self.universe, mask: !self.mask & full_mask(self.universe) }
    }

    /// All subsets of `{0..n-1}` with exactly `size` members, in
    /// lexicographic order of their member lists.
    pub fn of_size(universe: usize, size: usize) -> impl Iterator<Item = IndexSet> {
        Combinations::new(universe, size).map(move |members| {
            let mask = members.iter().fold(0u64, |m, &i| m | (1 << i));
            IndexSet { universe, mask }
        })
    }

    /// Every nonempty subset of `{0..n-1}`, ordered by size and then
    /// lexicographically. This is the canonical support order used when a
    /// classifier reports its "first" witness.
    pub fn nonempty_subsets(universe: usize) -> impl Iterator<Item = IndexSet> {
        (1..=universe).flat_map(move |size| IndexSet::of_size(universe, size))
    }
}

pub(crate) fn full_mask(universe: usize) -> u64 {
    if universe == 64 {
        u64::MAX
    } else {
        (1u64 << universe) - 1
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.members().into_iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

impl Serialize for IndexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let one_based: Vec<usize> = self.members().into_iter().map(|i| i + 1).collect();
        one_based.serialize(serializer)
    }
}

struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        let current = if k <= n { Some((0..k).collect()) } else { None };
        Combinations { n, current }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let k = out.len();
        let mut next = out.clone();
        // advance to the next combination, if any
        let mut i = k;
        while i > 0 {
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}
