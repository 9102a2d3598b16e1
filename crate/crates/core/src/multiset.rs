//! Finite multisets of positive integers.
//!
//! A [`Multiset`] maps each part size to its multiplicity. It is the common
//! currency of the crate: partitions, family members and the unions used by
//! the sieve are all multisets.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;

/// A finite multiset of positive integers.
///
/// Sizes and multiplicities are always at least 1; a size with multiplicity
/// zero is simply absent. Iteration is in increasing order of size.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multiset {
    entries: BTreeMap<u64, u64>,
}

impl Multiset {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a multiset from `(size, multiplicity)` pairs, merging repeated
    /// sizes. Fails on a zero size or zero multiplicity.
    pub fn from_pairs<I>(pairs: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let mut m = Self::new();
        for (size, mult) in pairs {
            if size == 0 {
                return Err(Error::InvalidMultiset("part size 0".into()));
            }
            if mult == 0 {
                return Err(Error::InvalidMultiset(format!(
                    "multiplicity 0 for size {size}"
                )));
            }
            m.insert(size, mult);
        }
        Ok(m)
    }

    /// Builds a multiset from a list of parts, e.g. `[1, 1, 2, 2]`.
    pub fn from_parts<I>(parts: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = u64>,
    {
        Self::from_pairs(parts.into_iter().map(|p| (p, 1)))
    }

    /// Adds `mult` copies of `size`.
    ///
    /// # Panics
    ///
    /// Panics if `size` is zero.
    pub fn insert(&mut self, size: u64, mult: u64) {
        assert!(size >= 1, "multiset sizes must be positive");
        if mult > 0 {
            *self.entries.entry(size).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, size: u64) -> u64 {
        self.entries.get(&size).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of distinct sizes.
    pub fn distinct_sizes(&self) -> usize {
        self.entries.len()
    }

    /// Total number of elements counted with multiplicity.
    pub fn cardinality(&self) -> u64 {
        self.entries.values().sum()
    }

    /// `(size, multiplicity)` pairs in increasing order of size.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (u64, u64)> + '_ {
        self.entries.iter().map(|(&s, &m)| (s, m))
    }

    pub fn sizes(&self) -> impl DoubleEndedIterator<Item = u64> + '_ {
        self.entries.keys().copied()
    }

    /// Sum of the elements counted with multiplicity.
    pub fn weight(&self) -> u64 {
        self.entries.iter().map(|(&s, &m)| s * m).sum()
    }

    /// True iff every size occurs in `self` at least as often as in `pattern`.
    pub fn contains(&self, pattern: &Multiset) -> bool {
        pattern
            .entries
            .iter()
            .all(|(s, &m)| self.entries.get(s).is_some_and(|&have| have >= m))
    }

    /// Removes `pattern` from `self`, multiplicity by multiplicity.
    pub fn remove(&self, pattern: &Multiset) -> Result<Multiset, Error> {
        if !self.contains(pattern) {
            return Err(Error::NotContained);
        }
        let mut out = self.clone();
        for (s, m) in pattern.iter() {
            let slot = out.entries.get_mut(&s).expect("checked by contains");
            *slot -= m;
            if *slot == 0 {
                out.entries.remove(&s);
            }
        }
        Ok(out)
    }

    /// Multiset sum: multiplicities add.
    pub fn sum(&self, other: &Multiset) -> Multiset {
        let mut out = self.clone();
        for (s, m) in other.iter() {
            out.insert(s, m);
        }
        out
    }

    /// Max-multiplicity union. A multiset contains both `self` and `other`
    /// iff it contains their union.
    pub fn union(&self, other: &Multiset) -> Multiset {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    /// In-place form of [`Multiset::union`].
    pub fn union_with(&mut self, other: &Multiset) {
        for (s, m) in other.iter() {
            let slot = self.entries.entry(s).or_insert(0);
            *slot = (*slot).max(m);
        }
    }

    /// Smallest size occurring in both multisets, if any.
    pub fn shared_size(&self, other: &Multiset) -> Option<u64> {
        let (small, large) = if self.entries.len() <= other.entries.len() {
            (self, other)
        } else {
            (other, self)
        };
        small.sizes().find(|s| large.entries.contains_key(s))
    }

    /// Parts in weakly decreasing order.
    pub fn parts_descending(&self) -> Vec<u64> {
        let mut parts = Vec::with_capacity(self.cardinality() as usize);
        for (s, m) in self.entries.iter().rev() {
            parts.extend(std::iter::repeat_n(*s, *m as usize));
        }
        parts
    }
}

impl fmt::Debug for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries.iter()).finish()
    }
}

/// Renders as `{1,1,2,2}` with elements in increasing order.
impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = self.parts_descending();
        parts.reverse();
        write!(f, "{{")?;
        for (i, p) in parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}
