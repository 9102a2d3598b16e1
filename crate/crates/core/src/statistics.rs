//! Partition statistics.
//!
//! A family-induced statistic counts the members of a family contained in a
//! partition. Native statistics compute the same quantities from closed-form
//! rules over part sizes and multiplicities; they share no code with the
//! family path and serve as its cross-check.

use std::fmt;

use crate::catalog::DoublingSet;
use crate::error::Error;
use crate::families::MultisetFamily;
use crate::multiset::Multiset;
use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum NativeRule {
    /// Even part sizes that occur.
    EvenSizes,
    /// Part sizes with multiplicity at least 2.
    RepeatedSizes,
    /// Part sizes that are perfect squares.
    SquareSizes,
    /// Part sizes with multiplicity at least `d`.
    MultAtLeast(u64),
    /// Part sizes `i` with multiplicity at least `i`.
    MultAtLeastSize,
    /// Part sizes that are multiples of `d`.
    MultiplesOf(u64),
    /// Part sizes congruent to 2, 3 or 4 mod 6.
    Mod6X,
    /// Odd multiples of 3, or repeated sizes that are not multiples of 3.
    Mod6Y,
    /// Multiples of 3, or repeated sizes that are not multiples of 3.
    Mod6YProse,
    /// Part sizes not in `M₂ = M₁ − 2M₁`.
    NotInM2(DoublingSet),
    /// Part sizes outside `M₁`, or in `M₁` and repeated.
    AndrewsY(DoublingSet),
    /// `i ≥ 1` such that `2i` and `2i+2` both occur.
    ConsecutiveEven,
    /// `i ≥ 1` such that `i` and `i+1` are both repeated.
    ConsecutiveRepeated,
}

fn is_square(v: u64) -> bool {
    let r = (v as f64).sqrt() as u64;
    (r.saturating_sub(1)..=r + 1).any(|c| c.checked_mul(c) == Some(v))
}

impl NativeRule {
    pub fn label(&self) -> String {
        match self {
            NativeRule::EvenSizes => "even_sizes".into(),
            NativeRule::RepeatedSizes => "repeated_sizes".into(),
            NativeRule::SquareSizes => "square_sizes".into(),
            NativeRule::MultAtLeast(d) => format!("mult_ge({d})"),
            NativeRule::MultAtLeastSize => "mult_ge_size".into(),
            NativeRule::MultiplesOf(d) => format!("multiples_of({d})"),
            NativeRule::Mod6X => "mod6_X".into(),
            NativeRule::Mod6Y => "mod6_Y".into(),
            NativeRule::Mod6YProse => "mod6_Y_prose".into(),
            NativeRule::NotInM2(_) => "not_in_M2".into(),
            NativeRule::AndrewsY(_) => "andrews_Y".into(),
            NativeRule::ConsecutiveEven => "consecutive_even".into(),
            NativeRule::ConsecutiveRepeated => "consecutive_repeated".into(),
        }
    }

    pub fn evaluate(&self, parts: &Multiset) -> u64 {
        let count = |pred: &dyn Fn(u64, u64) -> bool| {
            parts.iter().filter(|&(s, m)| pred(s, m)).count() as u64
        };
        match self {
            NativeRule::EvenSizes => count(&|s, _| s % 2 == 0),
            NativeRule::RepeatedSizes => count(&|_, m| m >= 2),
            NativeRule::SquareSizes => count(&|s, _| is_square(s)),
            NativeRule::MultAtLeast(d) => count(&|_, m| m >= *d),
            NativeRule::MultAtLeastSize => count(&|s, m| m >= s),
            NativeRule::MultiplesOf(d) => count(&|s, _| s % d == 0),
            NativeRule::Mod6X => count(&|s, _| matches!(s % 6, 2..=4)),
            NativeRule::Mod6Y => count(&|s, m| s % 6 == 3 || (s % 3 != 0 && m >= 2)),
            NativeRule::Mod6YProse => count(&|s, m| s % 3 == 0 || m >= 2),
            NativeRule::NotInM2(m1) => count(&|s, _| !m1.in_m2(s)),
            NativeRule::AndrewsY(m1) => count(&|s, m| !m1.contains(s) || m >= 2),
            NativeRule::ConsecutiveEven => {
                count(&|s, _| s % 2 == 0 && parts.multiplicity(s + 2) >= 1)
            }
            NativeRule::ConsecutiveRepeated => {
                count(&|s, m| m >= 2 && parts.multiplicity(s + 1) >= 2)
            }
        }
    }
}

/// A nonnegative-integer-valued function on partitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Statistic {
    Family {
        label: String,
        family: MultisetFamily,
    },
    Native {
        label: String,
        rule: NativeRule,
    },
}

impl Statistic {
    pub fn from_family(family: MultisetFamily) -> Self {
        Statistic::Family {
            label: family.name().to_string(),
            family,
        }
    }

    pub fn native(rule: NativeRule) -> Self {
        Statistic::Native {
            label: rule.label(),
            rule,
        }
    }

    pub fn label(&self) -> &str {
        match self {
            Statistic::Family { label, .. } | Statistic::Native { label, .. } => label,
        }
    }

    /// X(π) for a single partition.
    pub fn evaluate(&self, pi: &Partition) -> u64 {
        self.prepare(pi.n()).evaluate(pi.parts())
    }

    /// An evaluator valid for every partition of weight at most `n`.
    ///
    /// For family statistics this materializes the members of weight at most
    /// `n` once, instead of once per partition.
    pub fn prepare(&self, n: u64) -> Evaluator<'_> {
        match self {
            Statistic::Family { family, .. } => Evaluator::Members(
                family
                    .relevant_members(n)
                    .into_iter()
                    .map(|m| m.multiset)
                    .collect(),
            ),
            Statistic::Native { rule, .. } => Evaluator::Rule(rule),
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone)]
pub enum Evaluator<'a> {
    Members(Vec<Multiset>),
    Rule(&'a NativeRule),
}

impl Evaluator<'_> {
    pub fn evaluate(&self, parts: &Multiset) -> u64 {
        match self {
            Evaluator::Members(members) => {
                members.iter().filter(|m| parts.contains(m)).count() as u64
            }
            Evaluator::Rule(rule) => rule.evaluate(parts),
        }
    }
}

/// Looks up a native statistic by name. `d` parameterizes `mult_ge` and
/// `multiples_of`; `m1` parameterizes `not_in_M2` and `andrews_Y`.
pub fn native(name: &str, d: Option<u64>, m1: Option<DoublingSet>) -> Result<Statistic, Error> {
    let need_d = || d.ok_or_else(|| Error::InvalidParameter(format!("{name} requires d")));
    let need_m1 = || {
        m1.clone()
            .ok_or_else(|| Error::InvalidParameter(format!("{name} requires M1")))
    };
    let rule = match name {
        "even_sizes" => NativeRule::EvenSizes,
        "repeated_sizes" => NativeRule::RepeatedSizes,
        "square_sizes" => NativeRule::SquareSizes,
        "mult_ge" => NativeRule::MultAtLeast(need_d()?),
        "mult_ge_size" => NativeRule::MultAtLeastSize,
        "multiples_of" => {
            let d = need_d()?;
            if d == 0 {
                return Err(Error::InvalidParameter("multiples_of needs d >= 1".into()));
            }
            NativeRule::MultiplesOf(d)
        }
        "mod6_X" => NativeRule::Mod6X,
        "mod6_Y" => NativeRule::Mod6Y,
        "mod6_Y_prose" => NativeRule::Mod6YProse,
        "not_in_M2" => NativeRule::NotInM2(need_m1()?),
        "andrews_Y" => NativeRule::AndrewsY(need_m1()?),
        "consecutive_even" => NativeRule::ConsecutiveEven,
        "consecutive_repeated" => NativeRule::ConsecutiveRepeated,
        other => return Err(Error::UnknownStatistic(other.to_string())),
    };
    Ok(Statistic::native(rule))
}
