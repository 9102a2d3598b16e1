//! Exact distribution tables `#{π ∈ P(n) : X(π) = j}` and comparison of two
//! statistics over a range of `n`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::multiset::Multiset;
use crate::partitions::{
    count_partitions, part_sequences, part_sequences_with_largest, ExactCount,
};
use crate::statistics::{Evaluator, Statistic};

/// Exact counts of a statistic's values over the partitions of `n`.
///
/// Absent keys have count zero. Probabilities are the exact ratios
/// `count / total`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributionTable {
    n: u64,
    counts: BTreeMap<u64, ExactCount>,
    total: ExactCount,
}

impl DistributionTable {
    /// Builds a table from counts, dropping zero entries. The total is the
    /// sum of the counts.
    pub fn from_counts(n: u64, counts: impl IntoIterator<Item = (u64, ExactCount)>) -> Self {
        let counts: BTreeMap<u64, ExactCount> =
            counts.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let total = counts.values().sum();
        Self { n, counts, total }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn total(&self) -> &ExactCount {
        &self.total
    }

    pub fn counts(&self) -> &BTreeMap<u64, ExactCount> {
        &self.counts
    }

    /// `counts[j]`, zero when absent.
    pub fn marginal(&self, j: u64) -> ExactCount {
        self.counts.get(&j).cloned().unwrap_or_default()
    }

    /// Exact probability of `X = j` as `(numerator, denominator)`, unreduced.
    pub fn probability(&self, j: u64) -> (ExactCount, ExactCount) {
        (self.marginal(j), self.total.clone())
    }

    /// Smallest `j` where the two tables differ, with both counts.
    pub fn first_difference(&self, other: &Self) -> Option<(u64, ExactCount, ExactCount)> {
        let keys: std::collections::BTreeSet<u64> = self
            .counts
            .keys()
            .chain(other.counts.keys())
            .copied()
            .collect();
        keys.into_iter().find_map(|j| {
            let (a, b) = (self.marginal(j), other.marginal(j));
            (a != b).then_some((j, a, b))
        })
    }

    /// Aligned text with a `j  count` row per nonzero value and a total row.
    pub fn to_text(&self) -> String {
        let width = self
            .counts
            .values()
            .chain(std::iter::once(&self.total))
            .map(|c| c.to_string().len())
            .max()
            .unwrap_or(1);
        let jw = self
            .counts
            .keys()
            .last()
            .map(|j| j.to_string().len())
            .unwrap_or(1)
            .max(5);
        let mut out = format!("n = {}\n", self.n);
        writeln!(out, "{:>jw$}  {:>width$}", "j", "count").unwrap();
        for (j, c) in &self.counts {
            writeln!(out, "{:>jw$}  {:>width$}", j, c.to_string()).unwrap();
        }
        writeln!(out, "{:>jw$}  {:>width$}", "total", self.total.to_string()).unwrap();
        out
    }

    /// CSV rows `n,j,count,total`, without the header.
    pub fn csv_rows(&self) -> String {
        let mut out = String::new();
        for (j, c) in &self.counts {
            writeln!(out, "{},{},{},{}", self.n, j, c, self.total).unwrap();
        }
        out
    }

    pub const CSV_HEADER: &'static str = "n,j,count,total";

    /// CSV including the header line.
    pub fn to_csv(&self) -> String {
        format!("{}\n{}", Self::CSV_HEADER, self.csv_rows())
    }

    /// `{"n":"4","counts":{"0":"2","1":"3"},"total":"5"}`; all numbers are
    /// decimal strings.
    pub fn to_json_value(&self) -> Value {
        let counts: Map<String, Value> = self
            .counts
            .iter()
            .map(|(j, c)| (j.to_string(), Value::String(c.to_string())))
            .collect();
        json!({
            "n": self.n.to_string(),
            "counts": counts,
            "total": self.total.to_string(),
        })
    }
}

fn tally(
    eval: &Evaluator<'_>,
    seqs: impl Iterator<Item = Vec<u64>>,
    into: &mut BTreeMap<u64, u64>,
) {
    for seq in seqs {
        let parts = Multiset::from_parts(seq).expect("enumerated parts are positive");
        *into.entry(eval.evaluate(&parts)).or_insert(0) += 1;
    }
}

/// Distribution of `stat` over the partitions of `n` by full enumeration.
pub fn distribution_bruteforce(stat: &Statistic, n: u64) -> DistributionTable {
    distribution_bruteforce_threaded(stat, n, 1)
}

/// As [`distribution_bruteforce`], splitting the partitions by largest part
/// across `threads` workers. The result does not depend on `threads`.
pub fn distribution_bruteforce_threaded(
    stat: &Statistic,
    n: u64,
    threads: usize,
) -> DistributionTable {
    let eval = stat.prepare(n);
    let mut counts = BTreeMap::new();
    let threads = threads.max(1);
    if threads == 1 || n < 2 {
        tally(&eval, part_sequences(n), &mut counts);
    } else {
        let partials: Vec<BTreeMap<u64, u64>> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads)
                .map(|w| {
                    let eval = &eval;
                    scope.spawn(move || {
                        let mut local = BTreeMap::new();
                        let mine = (1..=n).filter(move |k| (*k as usize) % threads == w);
                        tally(
                            eval,
                            mine.flat_map(|k| part_sequences_with_largest(n, k)),
                            &mut local,
                        );
                        local
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .collect()
        });
        for partial in partials {
            for (j, c) in partial {
                *counts.entry(j).or_insert(0) += c;
            }
        }
    }
    let table =
        DistributionTable::from_counts(n, counts.into_iter().map(|(j, c)| (j, BigUint::from(c))));
    debug_assert_eq!(table.total, count_partitions(n as i64));
    table
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Identical,
    /// Smallest differing `j` with the X and Y counts there.
    Divergent {
        j: u64,
        x_count: ExactCount,
        y_count: ExactCount,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NComparison {
    pub n: u64,
    pub verdict: Verdict,
    pub x: DistributionTable,
    pub y: DistributionTable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonReport {
    pub n_from: u64,
    pub n_to: u64,
    pub rows: Vec<NComparison>,
}

impl ComparisonReport {
    pub fn all_identical(&self) -> bool {
        self.rows.iter().all(|r| r.verdict == Verdict::Identical)
    }

    pub fn first_divergence(&self) -> Option<&NComparison> {
        self.rows.iter().find(|r| r.verdict != Verdict::Identical)
    }
}

/// Compares the exact distributions of `x` and `y` for every `n` in
/// `n_from..=n_to`.
pub fn compare(x: &Statistic, y: &Statistic, n_from: u64, n_to: u64) -> ComparisonReport {
    compare_threaded(x, y, n_from, n_to, 1)
}

pub fn compare_threaded(
    x: &Statistic,
    y: &Statistic,
    n_from: u64,
    n_to: u64,
    threads: usize,
) -> ComparisonReport {
    let rows = (n_from..=n_to)
        .map(|n| {
            let xt = distribution_bruteforce_threaded(x, n, threads);
            let yt = distribution_bruteforce_threaded(y, n, threads);
            let verdict = match xt.first_difference(&yt) {
                None => Verdict::Identical,
                Some((j, x_count, y_count)) => Verdict::Divergent {
                    j,
                    x_count,
                    y_count,
                },
            };
            NComparison {
                n,
                verdict,
                x: xt,
                y: yt,
            }
        })
        .collect();
    ComparisonReport { n_from, n_to, rows }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::statistics::native;

    fn table(pairs: &[(u64, u32)]) -> BTreeMap<u64, ExactCount> {
        pairs.iter().map(|&(j, c)| (j, BigUint::from(c))).collect()
    }

    #[test]
    fn euler_natives_at_four() {
        for name in ["even_sizes", "repeated_sizes"] {
            let t = distribution_bruteforce(&native(name, None, None).unwrap(), 4);
            assert_eq!(t.counts(), &table(&[(0, 2), (1, 3)]), "{name}");
            assert_eq!(t.total(), &BigUint::from(5u32));
        }
    }

    #[test]
    fn zero_is_single_empty_partition() {
        let t = distribution_bruteforce(&native("mod6_Y_prose", None, None).unwrap(), 0);
        assert_eq!(t.counts(), &table(&[(0, 1)]));
    }

    #[test]
    fn marginals_at_five() {
        let rep = distribution_bruteforce(&native("repeated_sizes", None, None).unwrap(), 5);
        let even = distribution_bruteforce(&native("even_sizes", None, None).unwrap(), 5);
        assert_eq!(rep.marginal(0), BigUint::from(3u32));
        assert_eq!(even.marginal(0), BigUint::from(3u32));
        assert_eq!(even.marginal(99), BigUint::zero());
    }

    #[test]
    fn mod6_prose_diverges_at_six() {
        let x = native("mod6_X", None, None).unwrap();
        let y = native("mod6_Y_prose", None, None).unwrap();
        let report = compare(&x, &y, 6, 6);
        let row = &report.rows[0];
        assert_eq!(row.x.counts(), &table(&[(0, 3), (1, 6), (2, 2)]));
        assert_eq!(row.y.counts(), &table(&[(0, 2), (1, 7), (2, 2)]));
        assert_eq!(
            row.verdict,
            Verdict::Divergent {
                j: 0,
                x_count: BigUint::from(3u32),
                y_count: BigUint::from(2u32)
            }
        );
    }

    #[test]
    fn reflexive() {
        let x = native("square_sizes", None, None).unwrap();
        assert!(compare(&x, &x, 0, 12).all_identical());
    }

    #[test]
    fn threads_do_not_change_tables() {
        let x = native("consecutive_repeated", None, None).unwrap();
        for n in [0, 1, 7, 18] {
            let seq = distribution_bruteforce(&x, n);
            for threads in [2, 3, 8] {
                assert_eq!(distribution_bruteforce_threaded(&x, n, threads), seq);
            }
        }
    }

    #[test]
    fn renderings() {
        let t = distribution_bruteforce(&native("even_sizes", None, None).unwrap(), 4);
        assert_eq!(t.to_csv(), "n,j,count,total\n4,0,2,5\n4,1,3,5\n");
        assert_eq!(
            t.to_json_value().to_string(),
            r#"{"n":"4","counts":{"0":"2","1":"3"},"total":"5"}"#
        );
        let text = t.to_text();
        assert!(text.contains("total"), "{text}");
    }
}
