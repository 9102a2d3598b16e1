//! Built-in family pairs.

use std::collections::BTreeSet;

use crate::error::Error;
use crate::families::{FamilyPair, MultisetFamily, Strand, TemplateEntry, DEFAULT_HORIZON};
use crate::multiset::Multiset;
use crate::statistics::{NativeRule, Statistic};

/// A doubling-closed set `M₁ ⊆ [1, bound]`, the parameter of the Andrews pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DoublingSet {
    members: BTreeSet<u64>,
    bound: u64,
}

impl DoublingSet {
    /// Keeps the values of `values` in `[1, bound]` and checks that `2m`
    /// belongs to the set whenever `m` does and `2m ≤ bound`.
    pub fn new(values: impl IntoIterator<Item = u64>, bound: u64) -> Result<Self, Error> {
        let mut members = BTreeSet::new();
        for v in values {
            if v == 0 {
                return Err(Error::InvalidParameter("M1 contains 0".into()));
            }
            if v <= bound {
                members.insert(v);
            }
        }
        for &m in &members {
            if m.checked_mul(2).is_some_and(|d| d <= bound) && !members.contains(&(2 * m)) {
                return Err(Error::InvalidParameter(format!(
                    "M1 is not closed under doubling: {m} is present but {} is not",
                    2 * m
                )));
            }
        }
        Ok(Self { members, bound })
    }

    pub fn contains(&self, v: u64) -> bool {
        self.members.contains(&v)
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn members(&self) -> impl Iterator<Item = u64> + '_ {
        self.members.iter().copied()
    }

    /// `M₂ = M₁ − 2M₁`: members whose half is not a member.
    pub fn in_m2(&self, v: u64) -> bool {
        self.contains(v) && !(v.is_multiple_of(2) && self.contains(v / 2))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Builtin {
    Euler,
    Squares,
    Mod6,
    Glaisher { d: u64 },
    Andrews(DoublingSet),
    RemmelConsecutive,
}

/// Catalog rows: name, parameters, the result each pair realizes.
pub const CATALOG: &[(&str, &str, &str)] = &[
    (
        "euler",
        "",
        "Theorem 1: even part sizes vs repeated part sizes",
    ),
    (
        "squares",
        "",
        "Theorem B example: perfect-square sizes vs sizes i with multiplicity >= i",
    ),
    (
        "mod6",
        "",
        "Theorem B example: sizes = 2,3,4 mod 6 vs odd multiples of 3 or repeated non-multiples of 3",
    ),
    (
        "glaisher",
        "d > 1",
        "Theorem B example: multiples of d vs sizes with multiplicity >= d",
    ),
    (
        "andrews",
        "M1 (doubling-closed), bound",
        "Theorem B example: sizes not in M2 vs sizes outside M1 or in M1 and repeated",
    ),
    (
        "remmel_consecutive",
        "",
        "Theorem C application: consecutive even sizes vs consecutive repeated sizes",
    ),
];

fn strand(tmin: u64, entries: &[([i64; 3], [i64; 2])]) -> Strand {
    Strand::template(
        tmin,
        entries
            .iter()
            .map(|&(s, m)| TemplateEntry::new(s, m))
            .collect(),
    )
}

fn family(name: &str, strands: Vec<Strand>) -> MultisetFamily {
    MultisetFamily::new(name, strands, DEFAULT_HORIZON).expect("catalog families are valid")
}

impl Builtin {
    /// Looks up a pair by catalog name. `d` is required for `glaisher`,
    /// `m1` for `andrews`.
    pub fn from_name(name: &str, d: Option<u64>, m1: Option<DoublingSet>) -> Result<Self, Error> {
        Ok(match name {
            "euler" => Builtin::Euler,
            "squares" => Builtin::Squares,
            "mod6" => Builtin::Mod6,
            "glaisher" => {
                let d = d.ok_or_else(|| Error::InvalidParameter("glaisher requires d".into()))?;
                Builtin::glaisher(d)?
            }
            "andrews" => Builtin::Andrews(
                m1.ok_or_else(|| Error::InvalidParameter("andrews requires M1".into()))?,
            ),
            "remmel_consecutive" => Builtin::RemmelConsecutive,
            other => return Err(Error::UnknownPair(other.to_string())),
        })
    }

    pub fn glaisher(d: u64) -> Result<Self, Error> {
        if d <= 1 {
            return Err(Error::InvalidParameter(format!(
                "glaisher needs d > 1, got {d}"
            )));
        }
        if d > i64::MAX as u64 {
            return Err(Error::InvalidParameter(format!("d = {d} is too large")));
        }
        Ok(Builtin::Glaisher { d })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Builtin::Euler => "euler",
            Builtin::Squares => "squares",
            Builtin::Mod6 => "mod6",
            Builtin::Glaisher { .. } => "glaisher",
            Builtin::Andrews(_) => "andrews",
            Builtin::RemmelConsecutive => "remmel_consecutive",
        }
    }

    /// True for pairs that satisfy the disjoint-family hypotheses.
    pub fn is_disjoint_type(&self) -> bool {
        !matches!(self, Builtin::RemmelConsecutive)
    }

    pub fn pair(&self) -> FamilyPair {
        let (f, g) = match self {
            Builtin::Euler => (
                vec![strand(1, &[([0, 2, 0], [0, 1])])],
                vec![strand(1, &[([0, 1, 0], [0, 2])])],
            ),
            Builtin::Squares => (
                vec![strand(1, &[([1, 0, 0], [0, 1])])],
                vec![strand(1, &[([0, 1, 0], [1, 0])])],
            ),
            Builtin::Mod6 => (
                vec![
                    strand(0, &[([0, 6, 2], [0, 1])]),
                    strand(0, &[([0, 6, 3], [0, 1])]),
                    strand(0, &[([0, 6, 4], [0, 1])]),
                ],
                vec![
                    strand(0, &[([0, 3, 1], [0, 2])]),
                    strand(0, &[([0, 6, 3], [0, 1])]),
                    strand(0, &[([0, 3, 2], [0, 2])]),
                ],
            ),
            Builtin::Glaisher { d } => {
                let d = *d as i64;
                (
                    vec![strand(1, &[([0, d, 0], [0, 1])])],
                    vec![strand(1, &[([0, 1, 0], [0, d])])],
                )
            }
            Builtin::Andrews(m1) => {
                let mut f = Vec::new();
                let mut g = Vec::new();
                for s in (1..=m1.bound()).filter(|&s| !m1.in_m2(s)) {
                    f.push(Strand::Explicit(Multiset::from_pairs([(s, 1)]).unwrap()));
                    let partner = if m1.contains(s) {
                        Multiset::from_pairs([(s / 2, 2)]).unwrap()
                    } else {
                        Multiset::from_pairs([(s, 1)]).unwrap()
                    };
                    g.push(Strand::Explicit(partner));
                }
                (f, g)
            }
            Builtin::RemmelConsecutive => (
                vec![strand(1, &[([0, 2, 0], [0, 1]), ([0, 2, 2], [0, 1])])],
                vec![strand(1, &[([0, 1, 0], [0, 2]), ([0, 1, 1], [0, 2])])],
            ),
        };
        let name = self.name();
        FamilyPair::new(
            name,
            family(&format!("{name}-F"), f),
            family(&format!("{name}-G"), g),
        )
        .expect("catalog pairs are aligned")
    }

    /// Closed-form statistics equal to the family-induced X and Y.
    pub fn native_sides(&self) -> (Statistic, Statistic) {
        let (x, y) = match self {
            Builtin::Euler => (NativeRule::EvenSizes, NativeRule::RepeatedSizes),
            Builtin::Squares => (NativeRule::SquareSizes, NativeRule::MultAtLeastSize),
            Builtin::Mod6 => (NativeRule::Mod6X, NativeRule::Mod6Y),
            Builtin::Glaisher { d } => (NativeRule::MultiplesOf(*d), NativeRule::MultAtLeast(*d)),
            Builtin::Andrews(m1) => (
                NativeRule::NotInM2(m1.clone()),
                NativeRule::AndrewsY(m1.clone()),
            ),
            Builtin::RemmelConsecutive => {
                (NativeRule::ConsecutiveEven, NativeRule::ConsecutiveRepeated)
            }
        };
        (Statistic::native(x), Statistic::native(y))
    }
}

/// `builtin_pair("glaisher", Some(3), None)` and friends.
pub fn builtin_pair(
    name: &str,
    d: Option<u64>,
    m1: Option<DoublingSet>,
) -> Result<FamilyPair, Error> {
    Ok(Builtin::from_name(name, d, m1)?.pair())
}
