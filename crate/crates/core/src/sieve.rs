//! Inclusion-exclusion over family members, and checkers for the two
//! sufficient conditions for identical distribution.
//!
//! For a set `S` of family indices, the partitions of `n` containing every
//! `F_i` with `i ∈ S` are exactly those containing the max-union `F_S`, and
//! there are `p(n − weight(F_S))` of them. Summing over `|S| = t` gives the
//! superset counts `N_t`, from which the number of partitions with exactly
//! `j` members present follows by inclusion-exclusion:
//! `e_j = Σ_{t≥j} (−1)^(t−j) C(t, j) N_t`.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::distribution::DistributionTable;
use crate::families::{FamilyIndex, FamilyPair, Member, MultisetFamily, Side};
use crate::multiset::Multiset;
use crate::partitions::{count_partitions, ExactCount};

/// Default limit on explored subsets.
pub const DEFAULT_SUBSET_CAP: u64 = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SieveResult {
    /// Exact distribution; `None` when the subset cap was hit.
    pub table: Option<DistributionTable>,
    /// `N_t` for `t = 0, 1, …` (partial when truncated).
    pub superset_counts: Vec<ExactCount>,
    /// Subsets visited, including the empty set.
    pub subsets_explored: u64,
    pub truncated: bool,
}

// Shared budget for a depth-first subset search.
struct Budget {
    explored: AtomicU64,
    cap: u64,
    exhausted: AtomicBool,
}

impl Budget {
    fn new(cap: u64) -> Self {
        Self {
            explored: AtomicU64::new(0),
            cap,
            exhausted: AtomicBool::new(false),
        }
    }

    /// Counts one subset; false once the cap is exceeded.
    fn take(&self) -> bool {
        if self.exhausted.load(Ordering::Relaxed) {
            return false;
        }
        if self.explored.fetch_add(1, Ordering::Relaxed) + 1 > self.cap {
            self.exhausted.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    fn explored(&self) -> u64 {
        self.explored.load(Ordering::Relaxed).min(self.cap)
    }
}

struct SieveSearch<'a> {
    members: &'a [Member],
    n: u64,
    p: &'a [BigUint],
    budget: &'a Budget,
}

impl SieveSearch<'_> {
    // Adds member `i` to `union` (a subset of size `depth`), records it and
    // recurses into members after `i`.
    fn visit(&self, i: usize, union: &Multiset, depth: usize, acc: &mut Vec<BigUint>) {
        let next = union.union(&self.members[i].multiset);
        let w = next.weight();
        if w > self.n || !self.budget.take() {
            return;
        }
        if acc.len() <= depth + 1 {
            acc.resize(depth + 2, BigUint::zero());
        }
        acc[depth + 1] += &self.p[(self.n - w) as usize];
        for k in i + 1..self.members.len() {
            if self.members[k].weight > self.n || self.budget.exhausted.load(Ordering::Relaxed) {
                break;
            }
            self.visit(k, &next, depth + 1, acc);
        }
    }
}

/// Exact `C(t, j)` for `0 ≤ j ≤ t ≤ max_t`, by Pascal's rule.
fn binomial_rows(max_t: usize) -> Vec<Vec<BigUint>> {
    let mut rows: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]];
    for t in 1..=max_t {
        let prev = &rows[t - 1];
        let mut row = vec![BigUint::one(); t + 1];
        for j in 1..t {
            row[j] = &prev[j - 1] + &prev[j];
        }
        rows.push(row);
    }
    rows
}

/// Exactly-`j` counts from superset counts `N_t`.
pub fn inclusion_exclusion(superset_counts: &[BigUint]) -> Vec<BigInt> {
    let max_t = superset_counts.len().saturating_sub(1);
    let binom = binomial_rows(max_t);
    (0..superset_counts.len())
        .map(|j| {
            let mut e = BigInt::zero();
            for (t, nt) in superset_counts.iter().enumerate().skip(j) {
                let term = BigInt::from(&binom[t][j] * nt);
                if (t - j) % 2 == 0 {
                    e += term;
                } else {
                    e -= term;
                }
            }
            e
        })
        .collect()
}

/// Distribution of the statistic induced by `fam` on partitions of `n`,
/// computed from partition counts alone.
pub fn sieve_distribution(fam: &MultisetFamily, n: u64, subset_cap: u64) -> SieveResult {
    sieve_distribution_threaded(fam, n, subset_cap, 1)
}

/// As [`sieve_distribution`], splitting the subsets by their first member
/// across `threads` workers. Untruncated results do not depend on `threads`.
pub fn sieve_distribution_threaded(
    fam: &MultisetFamily,
    n: u64,
    subset_cap: u64,
    threads: usize,
) -> SieveResult {
    let members = fam.relevant_members(n);
    let p: Vec<BigUint> = (0..=n as i64).map(count_partitions).collect();
    let budget = Budget::new(subset_cap.max(1));
    let search = SieveSearch {
        members: &members,
        n,
        p: &p,
        budget: &budget,
    };

    let mut superset_counts = vec![p[n as usize].clone()];
    budget.take();
    let empty = Multiset::new();
    let threads = threads.max(1);
    if threads == 1 {
        for i in 0..members.len() {
            search.visit(i, &empty, 0, &mut superset_counts);
        }
    } else {
        let partials = Mutex::new(Vec::new());
        std::thread::scope(|scope| {
            for w in 0..threads {
                let (search, partials, empty) = (&search, &partials, &empty);
                scope.spawn(move || {
                    let mut acc = Vec::new();
                    for i in (w..search.members.len()).step_by(threads) {
                        search.visit(i, empty, 0, &mut acc);
                    }
                    partials.lock().unwrap().push(acc);
                });
            }
        });
        // Slot 0 of a worker accumulator stays zero.
        for acc in partials.into_inner().unwrap() {
            if acc.len() > superset_counts.len() {
                superset_counts.resize(acc.len(), BigUint::zero());
            }
            for (t, v) in acc.into_iter().enumerate() {
                superset_counts[t] += v;
            }
        }
    }
    let truncated = budget.exhausted.load(Ordering::Relaxed);
    let table = (!truncated).then(|| {
        let exact = inclusion_exclusion(&superset_counts);
        DistributionTable::from_counts(
            n,
            exact.into_iter().enumerate().map(|(j, e)| {
                assert!(
                    !e.is_negative(),
                    "negative exactly-{j} count in an untruncated sieve"
                );
                (j as u64, e.magnitude().clone())
            }),
        )
    });
    SieveResult {
        table,
        superset_counts,
        subsets_explored: budget.explored(),
        truncated,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// Pairwise support-disjoint lists with equal weights index by index.
    B,
    /// Equal max-union weights for every finite index set.
    C,
}

/// A concrete violation of a hypothesis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Two distinct members on one side share a part size.
    SharedElement {
        side: Side,
        first: FamilyIndex,
        second: FamilyIndex,
        element: u64,
    },
    /// Aligned members with different weights.
    WeightMismatch {
        index: FamilyIndex,
        f_weight: u64,
        g_weight: u64,
    },
    /// An index set whose F-union and G-union have different weights.
    UnionWeightMismatch {
        subset: Vec<FamilyIndex>,
        f_weight: u64,
        g_weight: u64,
    },
}

impl Witness {
    /// Recomputes the violation from the pair's members.
    pub fn revalidate(&self, pair: &FamilyPair) -> bool {
        match self {
            Witness::SharedElement {
                side,
                first,
                second,
                element,
            } => {
                let fam = pair.side(*side);
                match (fam.member(*first), fam.member(*second)) {
                    (Ok(a), Ok(b)) => {
                        first != second
                            && a.multiplicity(*element) > 0
                            && b.multiplicity(*element) > 0
                    }
                    _ => false,
                }
            }
            Witness::WeightMismatch {
                index,
                f_weight,
                g_weight,
            } => match (pair.f().member(*index), pair.g().member(*index)) {
                (Ok(a), Ok(b)) => {
                    a.weight() == *f_weight && b.weight() == *g_weight && f_weight != g_weight
                }
                _ => false,
            },
            Witness::UnionWeightMismatch {
                subset,
                f_weight,
                g_weight,
            } => {
                let union = |fam: &MultisetFamily| -> Option<u64> {
                    let mut u = Multiset::new();
                    for idx in subset {
                        u.union_with(&fam.member(*idx).ok()?);
                    }
                    Some(u.weight())
                };
                !subset.is_empty()
                    && union(pair.f()) == Some(*f_weight)
                    && union(pair.g()) == Some(*g_weight)
                    && f_weight != g_weight
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    Violated(Witness),
    /// The subset cap was hit before a violation was found.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisReport {
    pub theorem: Theorem,
    pub verified_up_to: u64,
    pub outcome: Outcome,
    /// Index sets examined (Theorem C only).
    pub subsets_explored: Option<u64>,
}

impl HypothesisReport {
    pub fn holds(&self) -> bool {
        self.outcome == Outcome::Holds
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.outcome {
            Outcome::Violated(w) => Some(w),
            _ => None,
        }
    }
}

fn first_shared(members: &[&Member], side: Side) -> Option<Witness> {
    for (a, ma) in members.iter().enumerate() {
        for mb in &members[a + 1..] {
            if let Some(element) = ma.multiset.shared_size(&mb.multiset) {
                return Some(Witness::SharedElement {
                    side,
                    first: ma.index,
                    second: mb.index,
                    element,
                });
            }
        }
    }
    None
}

/// Checks support-disjointness within each list and aligned weight equality
/// over every position whose F or G member has weight at most `n_max`.
pub fn check_theorem_b(pair: &FamilyPair, n_max: u64) -> HypothesisReport {
    let aligned = pair.aligned_members(n_max);
    let fs: Vec<&Member> = aligned.iter().map(|(f, _)| f).collect();
    let gs: Vec<&Member> = aligned.iter().map(|(_, g)| g).collect();
    let witness = first_shared(&fs, Side::X)
        .or_else(|| first_shared(&gs, Side::Y))
        .or_else(|| {
            aligned
                .iter()
                .find(|(f, g)| f.weight != g.weight)
                .map(|(f, g)| Witness::WeightMismatch {
                    index: f.index,
                    f_weight: f.weight,
                    g_weight: g.weight,
                })
        });
    HypothesisReport {
        theorem: Theorem::B,
        verified_up_to: n_max,
        outcome: witness.map_or(Outcome::Holds, Outcome::Violated),
        subsets_explored: None,
    }
}

struct UnionSearch<'a> {
    aligned: &'a [(Member, Member)],
    n_max: u64,
    budget: Budget,
    path: Vec<FamilyIndex>,
}

impl UnionSearch<'_> {
    fn min_weight(&self, i: usize) -> u64 {
        let (f, g) = &self.aligned[i];
        f.weight.min(g.weight)
    }

    fn visit(&mut self, i: usize, fu: &Multiset, gu: &Multiset) -> Option<Result<Witness, ()>> {
        let (f, g) = &self.aligned[i];
        let fu = fu.union(&f.multiset);
        let gu = gu.union(&g.multiset);
        let (fw, gw) = (fu.weight(), gu.weight());
        if fw.min(gw) > self.n_max {
            return None;
        }
        if !self.budget.take() {
            return Some(Err(()));
        }
        self.path.push(f.index);
        if fw != gw {
            let mut subset = self.path.clone();
            subset.sort();
            return Some(Ok(Witness::UnionWeightMismatch {
                subset,
                f_weight: fw,
                g_weight: gw,
            }));
        }
        for k in i + 1..self.aligned.len() {
            if self.min_weight(k) > self.n_max {
                break;
            }
            if let Some(stop) = self.visit(k, &fu, &gu) {
                return Some(stop);
            }
        }
        self.path.pop();
        None
    }
}

/// Checks that every index set `S` with `min(weight(F_S), weight(G_S)) ≤
/// n_max` has equal max-union weights on both sides.
pub fn check_theorem_c(pair: &FamilyPair, n_max: u64, subset_cap: u64) -> HypothesisReport {
    let aligned = pair.aligned_members(n_max);
    let mut search = UnionSearch {
        aligned: &aligned,
        n_max,
        budget: Budget::new(subset_cap.max(1)),
        path: Vec::new(),
    };
    let empty = Multiset::new();
    let mut outcome = Outcome::Holds;
    for i in 0..aligned.len() {
        if search.min_weight(i) > n_max {
            break;
        }
        match search.visit(i, &empty, &empty) {
            None => {}
            Some(Ok(w)) => {
                outcome = Outcome::Violated(w);
                break;
            }
            Some(Err(())) => {
                outcome = Outcome::Inconclusive;
                break;
            }
        }
    }
    HypothesisReport {
        theorem: Theorem::C,
        verified_up_to: n_max,
        outcome,
        subsets_explored: Some(search.budget.explored()),
    }
}
