use std::collections::{BTreeMap, HashSet};

use num_bigint::BigUint;
use partition_sieve::catalog::{Builtin, DoublingSet};
use partition_sieve::distribution::{compare, distribution_bruteforce};
use partition_sieve::families::{FamilyIndex, MultisetFamily, Side, Strand};
use partition_sieve::sieve::{
    check_theorem_b, check_theorem_c, sieve_distribution, DEFAULT_SUBSET_CAP,
};
use partition_sieve::statistics::Statistic;
use partition_sieve::{count_containing, count_partitions, enumerate_partitions, Multiset};
use proptest::prelude::*;

fn multiset() -> impl Strategy<Value = Multiset> {
    prop::collection::btree_map(1u64..8, 1u64..4, 0..5)
        .prop_map(|m| Multiset::from_pairs(m).unwrap())
}

fn builtins() -> Vec<Builtin> {
    let mut all = vec![
        Builtin::Euler,
        Builtin::Squares,
        Builtin::Mod6,
        Builtin::RemmelConsecutive,
    ];
    all.extend((2..=5).map(|d| Builtin::Glaisher { d }));
    all.push(Builtin::Andrews(DoublingSet::new(1..=30, 30).unwrap()));
    all.push(Builtin::Andrews(
        DoublingSet::new([1, 2, 4, 8, 16], 30).unwrap(),
    ));
    all.push(Builtin::Andrews(
        DoublingSet::new([3, 5, 6, 10, 12, 20, 24], 30).unwrap(),
    ));
    all
}

#[test]
fn enumeration_length_matches_count() {
    for n in 0..=30u64 {
        assert_eq!(
            BigUint::from(enumerate_partitions(n).count()),
            count_partitions(n as i64),
            "n={n}"
        );
    }
}

#[test]
fn enumeration_is_sorted_and_duplicate_free() {
    for n in 0..=20u64 {
        let seqs: Vec<Vec<u64>> = enumerate_partitions(n).map(|p| p.to_vec()).collect();
        for s in &seqs {
            assert!(s.windows(2).all(|w| w[0] >= w[1]));
            assert_eq!(s.iter().sum::<u64>(), n);
        }
        // Reverse lexicographic order implies strictly decreasing neighbours.
        assert!(seqs.windows(2).all(|w| w[0] > w[1]), "n={n}");
        let distinct: HashSet<String> = enumerate_partitions(n).map(|p| p.to_string()).collect();
        assert_eq!(distinct.len(), seqs.len());
    }
}

#[test]
fn enumeration_is_deterministic() {
    let a: Vec<String> = enumerate_partitions(18).map(|p| p.to_string()).collect();
    let b: Vec<String> = enumerate_partitions(18).map(|p| p.to_string()).collect();
    assert_eq!(a, b);
}

#[test]
fn p_cache_is_safe_under_concurrent_readers() {
    let expected: Vec<BigUint> = (0..=300).map(count_partitions).collect();
    std::thread::scope(|s| {
        for k in 0..8i64 {
            let expected = &expected;
            s.spawn(move || {
                for n in (0..=300).rev().skip(k as usize) {
                    assert_eq!(count_partitions(n), expected[n as usize]);
                }
            });
        }
    });
}

proptest! {
    #[test]
    fn count_containing_matches_brute_force(n in 0u64..=20, m in multiset()) {
        prop_assume!(m.weight() <= n);
        let brute = enumerate_partitions(n).filter(|p| p.parts().contains(&m)).count();
        prop_assert_eq!(count_containing(n as i64, &m), BigUint::from(brute));
    }

    #[test]
    fn remove_then_add_restores(a in multiset(), b in multiset()) {
        let outer = a.sum(&b);
        let rest = outer.remove(&b).unwrap();
        prop_assert_eq!(rest.weight(), outer.weight() - b.weight());
        prop_assert_eq!(rest.sum(&b), outer);
    }

    #[test]
    fn union_laws(a in multiset(), b in multiset(), c in multiset()) {
        prop_assert_eq!(a.union(&b), b.union(&a));
        prop_assert_eq!(a.union(&b).union(&c), a.union(&b.union(&c)));
        prop_assert_eq!(a.union(&a), a.clone());
    }

    #[test]
    fn union_is_joint_containment(pi in multiset(), a in multiset(), b in multiset()) {
        prop_assert_eq!(pi.contains(&a) && pi.contains(&b), pi.contains(&a.union(&b)));
    }
}

#[test]
fn relevant_indices_are_exactly_the_light_members() {
    for b in builtins() {
        let pair = b.pair();
        for side in [Side::X, Side::Y] {
            let fam = pair.side(side);
            for n in [0u64, 1, 5, 13, 30] {
                let got: HashSet<FamilyIndex> = fam.relevant_indices(n).into_iter().collect();
                // Scan ten steps past the first overweight member of each strand.
                let mut want = HashSet::new();
                for (s, strand) in fam.strands().iter().enumerate() {
                    let ts: Vec<u64> = match strand {
                        Strand::Template { tmin, .. } => {
                            let mut t = *tmin;
                            while fam.member(FamilyIndex::new(s, t)).unwrap().weight() <= n {
                                t += 1;
                            }
                            (*tmin..t + 10).collect()
                        }
                        Strand::Explicit(_) => vec![0],
                    };
                    for t in ts {
                        let idx = FamilyIndex::new(s, t);
                        if fam.member(idx).unwrap().weight() <= n {
                            want.insert(idx);
                        }
                    }
                }
                assert_eq!(got, want, "{} {side} n={n}", pair.name());
            }
        }
    }
}

fn reversed(fam: &MultisetFamily) -> MultisetFamily {
    let order: Vec<usize> = (0..fam.strands().len()).rev().collect();
    fam.permuted(&order)
}

#[test]
fn family_statistics_equal_their_natives() {
    for b in builtins() {
        let pair = b.pair();
        let (nx, ny) = b.native_sides();
        let fx = Statistic::from_family(pair.f().clone());
        let fy = Statistic::from_family(pair.g().clone());
        let rx = Statistic::from_family(reversed(pair.f()));
        for n in 0..=25u64 {
            let bound_x = pair.f().relevant_indices(n).len() as u64;
            for pi in enumerate_partitions(n) {
                let x = fx.evaluate(&pi);
                assert_eq!(x, nx.evaluate(&pi), "{} X on {pi}", pair.name());
                assert_eq!(
                    fy.evaluate(&pi),
                    ny.evaluate(&pi),
                    "{} Y on {pi}",
                    pair.name()
                );
                assert_eq!(rx.evaluate(&pi), x, "{} strand order on {pi}", pair.name());
                assert!(x <= bound_x);
            }
        }
    }
}

#[test]
fn tables_sum_to_p_n_and_compare_is_symmetric() {
    let pair = Builtin::Mod6.pair();
    let x = Statistic::from_family(pair.f().clone());
    let prose = partition_sieve::statistics::native("mod6_Y_prose", None, None).unwrap();
    for n in 0..=20u64 {
        let t = distribution_bruteforce(&prose, n);
        assert_eq!(
            t.counts().values().sum::<BigUint>(),
            count_partitions(n as i64)
        );
    }
    let xy = compare(&x, &prose, 1, 12);
    let yx = compare(&prose, &x, 1, 12);
    let verdicts = |r: &partition_sieve::distribution::ComparisonReport| -> Vec<bool> {
        r.rows
            .iter()
            .map(|row| row.verdict == partition_sieve::distribution::Verdict::Identical)
            .collect()
    };
    assert_eq!(verdicts(&xy), verdicts(&yx));
}

// Independent count of partitions with distinct parts, by coefficient DP on
// the product of (1 + q^k).
fn distinct_part_counts(max: usize) -> Vec<u64> {
    let mut c = vec![0u64; max + 1];
    c[0] = 1;
    for k in 1..=max {
        for n in (k..=max).rev() {
            c[n] += c[n - k];
        }
    }
    c
}

// Independent count of partitions into odd parts: product of 1/(1 − q^k), k odd.
fn odd_part_counts(max: usize) -> Vec<u64> {
    let mut c = vec![0u64; max + 1];
    c[0] = 1;
    for k in (1..=max).step_by(2) {
        for n in k..=max {
            c[n] += c[n - k];
        }
    }
    c
}

#[test]
fn euler_zero_marginals_match_direct_counts() {
    let pair = Builtin::Euler.pair();
    let x = Statistic::from_family(pair.f().clone());
    let y = Statistic::from_family(pair.g().clone());
    let distinct = distinct_part_counts(40);
    let odd = odd_part_counts(40);
    for n in 0..=40usize {
        assert_eq!(
            distribution_bruteforce(&y, n as u64).marginal(0),
            BigUint::from(distinct[n])
        );
        assert_eq!(
            distribution_bruteforce(&x, n as u64).marginal(0),
            BigUint::from(odd[n])
        );
    }
}

#[test]
fn sieve_tables_are_nonnegative_and_total_p_n() {
    for b in builtins() {
        let pair = b.pair();
        for side in [Side::X, Side::Y] {
            for n in [0u64, 7, 19] {
                let r = sieve_distribution(pair.side(side), n, DEFAULT_SUBSET_CAP);
                let t = r.table.expect("untruncated");
                assert_eq!(t.total(), &count_partitions(n as i64));
                let summed: BTreeMap<u64, BigUint> = t.counts().clone();
                assert_eq!(summed.values().sum::<BigUint>(), count_partitions(n as i64));
            }
        }
    }
}

#[test]
fn theorem_b_implies_theorem_c_on_builtins() {
    for b in builtins().into_iter().filter(|b| b.is_disjoint_type()) {
        let pair = b.pair();
        assert!(check_theorem_b(&pair, 30).holds(), "{}", pair.name());
        assert!(
            check_theorem_c(&pair, 30, DEFAULT_SUBSET_CAP).holds(),
            "{}",
            pair.name()
        );
    }
}

#[test]
fn theorem_c_implies_identical_distributions() {
    for b in builtins() {
        let pair = b.pair();
        let n_max = 18;
        assert!(check_theorem_c(&pair, n_max, DEFAULT_SUBSET_CAP).holds());
        let x = Statistic::from_family(pair.f().clone());
        let y = Statistic::from_family(pair.g().clone());
        assert!(compare(&x, &y, 1, n_max).all_identical(), "{}", pair.name());
    }
}

#[test]
fn threads_do_not_change_sieve_or_bruteforce() {
    let pair = Builtin::Squares.pair();
    let stat = Statistic::from_family(pair.g().clone());
    for n in [3u64, 16, 24] {
        let seq = distribution_bruteforce(&stat, n);
        assert_eq!(
            partition_sieve::distribution::distribution_bruteforce_threaded(&stat, n, 5),
            seq
        );
        let s1 = sieve_distribution(pair.g(), n, DEFAULT_SUBSET_CAP);
        let s4 =
            partition_sieve::sieve::sieve_distribution_threaded(pair.g(), n, DEFAULT_SUBSET_CAP, 4);
        assert_eq!(s1, s4);
    }
}
