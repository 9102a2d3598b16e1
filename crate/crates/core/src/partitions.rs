//! Partitions of an integer: enumeration in reverse lexicographic order,
//! exact counting with the pentagonal recurrence, and counting partitions
//! that contain a fixed multiset.

use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::multiset::Multiset;

/// Arbitrary-size nonnegative count. Counts never saturate or wrap.
pub type ExactCount = BigUint;

/// A partition of `n`: a multiset of positive parts with weight `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Multiset,
    n: u64,
}

impl Partition {
    /// The unique partition of 0.
    pub fn empty() -> Self {
        Self {
            parts: Multiset::new(),
            n: 0,
        }
    }

    pub fn from_multiset(parts: Multiset) -> Self {
        let n = parts.weight();
        Self { parts, n }
    }

    /// Builds a partition from its parts in any order. Zero parts are rejected.
    pub fn from_parts<I: IntoIterator<Item = u64>>(parts: I) -> Result<Self, crate::Error> {
        Multiset::from_parts(parts).map(Self::from_multiset)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn parts(&self) -> &Multiset {
        &self.parts
    }

    /// Parts in weakly decreasing order.
    pub fn to_vec(&self) -> Vec<u64> {
        self.parts.parts_descending()
    }
}

impl AsRef<Multiset> for Partition {
    fn as_ref(&self) -> &Multiset {
        &self.parts
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Canonical rendering: parts weakly decreasing, comma separated (`4,2,2,1`).
/// The empty partition renders as the empty string.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in self.to_vec() {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Iterator over the partitions of `n` with every part at most `max_part`,
/// in reverse lexicographic order of the weakly decreasing part sequences.
#[derive(Debug, Clone)]
pub struct Partitions {
    // Current partition as a weakly decreasing sequence; `None` when done.
    current: Option<Vec<u64>>,
}

impl Partitions {
    fn bounded(n: u64, max_part: u64) -> Self {
        let current = if n == 0 {
            Some(Vec::new())
        } else if max_part == 0 {
            None
        } else {
            Some(greedy_fill(Vec::new(), n, max_part))
        };
        Self { current }
    }
}

// Appends the lexicographically largest tail summing to `rest` with parts <= `cap`.
fn greedy_fill(mut parts: Vec<u64>, mut rest: u64, cap: u64) -> Vec<u64> {
    while rest > 0 {
        let p = rest.min(cap);
        parts.push(p);
        rest -= p;
    }
    parts
}

fn successor(parts: &[u64]) -> Option<Vec<u64>> {
    let ones = parts.iter().rev().take_while(|&&p| p == 1).count();
    let head = parts.len() - ones;
    if head == 0 {
        return None;
    }
    let k = parts[head - 1];
    let mut next = parts[..head - 1].to_vec();
    next.push(k - 1);
    Some(greedy_fill(next, ones as u64 + 1, k - 1))
}

impl Iterator for Partitions {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let cur = self.current.take()?;
        self.current = successor(&cur);
        Some(cur)
    }
}

/// Part sequences of `n` (weakly decreasing) in canonical order.
pub fn part_sequences(n: u64) -> Partitions {
    Partitions::bounded(n, n)
}

/// Part sequences of `n` whose largest part is exactly `largest`, in
/// canonical order. Concatenating these for `largest = n, n-1, …, 1` gives
/// [`part_sequences`] for `n > 0`.
pub fn part_sequences_with_largest(n: u64, largest: u64) -> impl Iterator<Item = Vec<u64>> {
    let tail = if largest == 0 || largest > n {
        None
    } else {
        Some(Partitions::bounded(n - largest, largest))
    };
    tail.into_iter().flatten().map(move |mut rest| {
        rest.insert(0, largest);
        rest
    })
}

/// Every partition of `n` exactly once, in canonical order.
pub fn enumerate_partitions(n: u64) -> impl Iterator<Item = Partition> {
    part_sequences(n).map(|seq| Partition::from_parts(seq).expect("enumerated parts are positive"))
}

fn pcache() -> &'static RwLock<Vec<BigUint>> {
    static CACHE: OnceLock<RwLock<Vec<BigUint>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(vec![BigUint::one()]))
}

/// Generalized pentagonal numbers k(3k−1)/2 and k(3k+1)/2 for k ≥ 1, with the
/// sign (−1)^(k+1), in increasing order while they do not exceed `limit`.
fn pentagonal_terms(limit: u64) -> impl Iterator<Item = (u64, bool)> {
    (1u64..)
        .flat_map(|k| {
            [
                (k * (3 * k - 1) / 2, k % 2 == 1),
                (k * (3 * k + 1) / 2, k % 2 == 1),
            ]
        })
        .take_while(move |&(g, _)| g <= limit)
}

/// p(n), the number of partitions of `n`; 0 for negative `n`, 1 for `n = 0`.
///
/// Values are memoized in a process-wide table that is extended on demand.
pub fn count_partitions(n: i64) -> ExactCount {
    if n < 0 {
        return BigUint::zero();
    }
    let n = n as usize;
    if let Some(v) = pcache().read().expect("p(n) cache poisoned").get(n) {
        return v.clone();
    }
    let mut table = pcache().write().expect("p(n) cache poisoned");
    while table.len() <= n {
        let i = table.len() as u64;
        let mut plus = BigUint::zero();
        let mut minus = BigUint::zero();
        for (g, positive) in pentagonal_terms(i) {
            let term = &table[(i - g) as usize];
            if positive {
                plus += term;
            } else {
                minus += term;
            }
        }
        table.push(plus - minus);
    }
    table[n].clone()
}

/// Number of partitions of `n` that contain `pattern` as a sub-multiset.
///
/// Removing the pattern is a bijection onto the partitions of
/// `n − weight(pattern)`, so this is p(n − weight(pattern)).
pub fn count_containing(n: i64, pattern: &Multiset) -> ExactCount {
    let w = i64::try_from(pattern.weight()).unwrap_or(i64::MAX);
    count_partitions(n.saturating_sub(w))
}
