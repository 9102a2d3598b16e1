//! Indexed multiset families `F_1, F_2, …` presented finitely as strands.
//!
//! A strand is either a template, whose entries have sizes quadratic and
//! multiplicities linear in a parameter `t ≥ tmin`, or a single explicit
//! multiset. Every family member is addressed by a [`FamilyIndex`].

use std::fmt;

use crate::error::Error;
use crate::multiset::Multiset;

/// How far past `tmin` template strands are validated numerically.
pub const DEFAULT_HORIZON: u64 = 200;

/// Quadratic part-size polynomial `c2·t² + c1·t + c0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SizePoly(pub [i64; 3]);

/// Linear multiplicity polynomial `m1·t + m0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MultPoly(pub [i64; 2]);

impl SizePoly {
    pub fn eval(&self, t: u64) -> Option<i128> {
        let t = i128::from(t);
        let [c2, c1, c0] = self.0.map(i128::from);
        c2.checked_mul(t)?
            .checked_mul(t)?
            .checked_add(c1.checked_mul(t)?)?
            .checked_add(c0)
    }

    fn leading_nonconstant(&self) -> Option<i64> {
        self.0[..2].iter().copied().find(|&c| c != 0)
    }
}

impl MultPoly {
    pub fn eval(&self, t: u64) -> Option<i128> {
        let [m1, m0] = self.0.map(i128::from);
        m1.checked_mul(i128::from(t))?.checked_add(m0)
    }

    fn leading_nonconstant(&self) -> Option<i64> {
        (self.0[0] != 0).then_some(self.0[0])
    }
}

/// One `(size(t), mult(t))` entry of a template strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TemplateEntry {
    pub size: SizePoly,
    pub mult: MultPoly,
}

impl TemplateEntry {
    pub fn new(size: [i64; 3], mult: [i64; 2]) -> Self {
        Self {
            size: SizePoly(size),
            mult: MultPoly(mult),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Strand {
    /// Members at every `t ≥ tmin`.
    Template {
        entries: Vec<TemplateEntry>,
        tmin: u64,
    },
    /// A single member, addressed with `t = 0`.
    Explicit(Multiset),
}

impl Strand {
    pub fn template(tmin: u64, entries: Vec<TemplateEntry>) -> Self {
        Strand::Template { entries, tmin }
    }

    /// True when `other` is indexed by the same set of `t` values.
    pub fn same_domain(&self, other: &Strand) -> bool {
        match (self, other) {
            (Strand::Template { tmin: a, .. }, Strand::Template { tmin: b, .. }) => a == b,
            (Strand::Explicit(_), Strand::Explicit(_)) => true,
            _ => false,
        }
    }

    fn first_t(&self) -> u64 {
        match self {
            Strand::Template { tmin, .. } => *tmin,
            Strand::Explicit(_) => 0,
        }
    }

    fn in_domain(&self, t: u64) -> bool {
        match self {
            Strand::Template { tmin, .. } => t >= *tmin,
            Strand::Explicit(_) => t == 0,
        }
    }

    // Member at `t` (assumed in domain), or a message naming the failing entry.
    fn eval(&self, t: u64) -> Result<Multiset, String> {
        match self {
            Strand::Explicit(m) => Ok(m.clone()),
            Strand::Template { entries, .. } => {
                let mut m = Multiset::new();
                for (e, entry) in entries.iter().enumerate() {
                    let size = entry
                        .size
                        .eval(t)
                        .ok_or(format!("entry {e}: size overflows at t={t}"))?;
                    let mult = entry
                        .mult
                        .eval(t)
                        .ok_or(format!("entry {e}: multiplicity overflows at t={t}"))?;
                    if size < 1 {
                        return Err(format!("entry {e}: size {size} < 1 at t={t}"));
                    }
                    if mult < 1 {
                        return Err(format!("entry {e}: multiplicity {mult} < 1 at t={t}"));
                    }
                    let size = u64::try_from(size)
                        .map_err(|_| format!("entry {e}: size too large at t={t}"))?;
                    let mult = u64::try_from(mult)
                        .map_err(|_| format!("entry {e}: multiplicity too large at t={t}"))?;
                    size.checked_mul(mult)
                        .ok_or(format!("entry {e}: weight overflows at t={t}"))?;
                    m.insert(size, mult);
                }
                Ok(m)
            }
        }
    }

    fn validate(&self, horizon: u64) -> Result<(), String> {
        match self {
            Strand::Explicit(m) => {
                if m.is_empty() {
                    return Err("explicit multiset is empty".into());
                }
                Ok(())
            }
            Strand::Template { entries, tmin } => {
                if entries.is_empty() {
                    return Err("template has no entries".into());
                }
                let mut grows = false;
                for (e, entry) in entries.iter().enumerate() {
                    for (what, lead) in [
                        ("size", entry.size.leading_nonconstant()),
                        ("multiplicity", entry.mult.leading_nonconstant()),
                    ] {
                        match lead {
                            Some(c) if c < 0 => {
                                return Err(format!(
                                    "entry {e}: {what} has negative leading coefficient {c}"
                                ))
                            }
                            Some(_) => grows = true,
                            None => {}
                        }
                    }
                }
                if !grows {
                    return Err("weight does not grow with t (all entries constant)".into());
                }
                let mut prev = 0u64;
                for t in *tmin..=tmin.saturating_add(horizon) {
                    let w = self.eval(t)?.weight();
                    if w < prev {
                        return Err(format!("weight decreases from {prev} to {w} at t={t}"));
                    }
                    prev = w;
                }
                Ok(())
            }
        }
    }
}

/// Address of a family member: strand number and strand parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyIndex {
    pub strand: usize,
    pub t: u64,
}

impl FamilyIndex {
    pub fn new(strand: usize, t: u64) -> Self {
        Self { strand, t }
    }
}

impl fmt::Display for FamilyIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(strand {}, t={})", self.strand, self.t)
    }
}

/// A member together with its index and weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Member {
    pub index: FamilyIndex,
    pub multiset: Multiset,
    pub weight: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultisetFamily {
    name: String,
    strands: Vec<Strand>,
}

impl MultisetFamily {
    /// Builds and validates a family. Template strands are checked for
    /// positive sizes and multiplicities and nondecreasing weight over
    /// `horizon` steps past their `tmin`.
    pub fn new(name: impl Into<String>, strands: Vec<Strand>, horizon: u64) -> Result<Self, Error> {
        let name = name.into();
        for (i, s) in strands.iter().enumerate() {
            s.validate(horizon)
                .map_err(|msg| Error::InvalidFamily(format!("{name} strand {i}: {msg}")))?;
        }
        Ok(Self { name, strands })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn strands(&self) -> &[Strand] {
        &self.strands
    }

    /// The member at `idx`.
    pub fn member(&self, idx: FamilyIndex) -> Result<Multiset, Error> {
        let invalid = || Error::InvalidIndex {
            strand: idx.strand,
            t: idx.t,
        };
        let strand = self.strands.get(idx.strand).ok_or_else(invalid)?;
        if !strand.in_domain(idx.t) {
            return Err(invalid());
        }
        strand.eval(idx.t).map_err(|msg| {
            Error::InvalidFamily(format!("{} strand {}: {msg}", self.name, idx.strand))
        })
    }

    /// Members of one strand in increasing `t` while their weight is at most
    /// `n`. Relies on weight being nondecreasing along the strand.
    fn strand_members(&self, strand: usize, n: u64) -> Vec<Member> {
        let s = &self.strands[strand];
        let mut out = Vec::new();
        let mut t = s.first_t();
        while s.in_domain(t) {
            let multiset = match s.eval(t) {
                Ok(m) => m,
                Err(_) => break,
            };
            let weight = multiset.weight();
            if weight > n {
                break;
            }
            out.push(Member {
                index: FamilyIndex::new(strand, t),
                multiset,
                weight,
            });
            t += 1;
        }
        out
    }

    /// All members of weight at most `n`, sorted by `(weight, strand, t)`.
    pub fn relevant_members(&self, n: u64) -> Vec<Member> {
        let mut all: Vec<Member> = (0..self.strands.len())
            .flat_map(|s| self.strand_members(s, n))
            .collect();
        all.sort_by_key(|m| (m.weight, m.index.strand, m.index.t));
        all
    }

    /// Indices of all members of weight at most `n`, sorted by
    /// `(weight, strand, t)`.
    pub fn relevant_indices(&self, n: u64) -> Vec<FamilyIndex> {
        self.relevant_members(n)
            .into_iter()
            .map(|m| m.index)
            .collect()
    }

    /// The same family with its strands reordered by `order`.
    pub fn permuted(&self, order: &[usize]) -> Self {
        Self {
            name: self.name.clone(),
            strands: order.iter().map(|&i| self.strands[i].clone()).collect(),
        }
    }
}

/// Two families whose strands are aligned index by index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyPair {
    name: String,
    f: MultisetFamily,
    g: MultisetFamily,
}

impl FamilyPair {
    pub fn new(
        name: impl Into<String>,
        f: MultisetFamily,
        g: MultisetFamily,
    ) -> Result<Self, Error> {
        let name = name.into();
        if f.strands.len() != g.strands.len() {
            return Err(Error::InvalidFamily(format!(
                "{name}: F has {} strands but G has {}",
                f.strands.len(),
                g.strands.len()
            )));
        }
        for (i, (a, b)) in f.strands.iter().zip(&g.strands).enumerate() {
            if !a.same_domain(b) {
                return Err(Error::InvalidFamily(format!(
                    "{name}: strand {i} has different domains in F and G"
                )));
            }
        }
        Ok(Self { name, f, g })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn f(&self) -> &MultisetFamily {
        &self.f
    }

    pub fn g(&self) -> &MultisetFamily {
        &self.g
    }

    pub fn side(&self, side: Side) -> &MultisetFamily {
        match side {
            Side::X => &self.f,
            Side::Y => &self.g,
        }
    }

    /// Aligned positions where the F or the G member has weight at most `n`,
    /// each with both members, sorted by `(min weight, strand, t)`.
    pub fn aligned_members(&self, n: u64) -> Vec<(Member, Member)> {
        let mut out = Vec::new();
        for strand in 0..self.f.strands.len() {
            let fs = &self.f.strands[strand];
            let gs = &self.g.strands[strand];
            let mut t = fs.first_t();
            while fs.in_domain(t) {
                let (Ok(fm), Ok(gm)) = (fs.eval(t), gs.eval(t)) else {
                    break;
                };
                let (fw, gw) = (fm.weight(), gm.weight());
                if fw.min(gw) > n {
                    break;
                }
                let index = FamilyIndex::new(strand, t);
                out.push((
                    Member {
                        index,
                        multiset: fm,
                        weight: fw,
                    },
                    Member {
                        index,
                        multiset: gm,
                        weight: gw,
                    },
                ));
                t += 1;
            }
        }
        out.sort_by_key(|(a, b)| (a.weight.min(b.weight), a.index.strand, a.index.t));
        out
    }
}

/// Which list of a pair a statistic is induced by: `X` from F, `Y` from G.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    X,
    Y,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::X => "X",
            Side::Y => "Y",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn euler_f() -> MultisetFamily {
        MultisetFamily::new(
            "F",
            vec![Strand::template(
                1,
                vec![TemplateEntry::new([0, 2, 0], [0, 1])],
            )],
            DEFAULT_HORIZON,
        )
        .unwrap()
    }

    #[test]
    fn member_evaluates_template() {
        let f = euler_f();
        assert_eq!(
            f.member(FamilyIndex::new(0, 3)).unwrap(),
            Multiset::from_parts([6]).unwrap()
        );
    }

    #[test]
    fn member_rejects_bad_index() {
        let f = euler_f();
        assert!(matches!(
            f.member(FamilyIndex::new(0, 0)),
            Err(Error::InvalidIndex { .. })
        ));
        assert!(matches!(
            f.member(FamilyIndex::new(1, 1)),
            Err(Error::InvalidIndex { .. })
        ));
    }

    #[test]
    fn relevant_indices_truncate_by_weight() {
        let f = euler_f();
        assert_eq!(
            f.relevant_indices(5),
            vec![FamilyIndex::new(0, 1), FamilyIndex::new(0, 2)]
        );
        assert!(f.relevant_indices(0).is_empty());
    }

    #[test]
    fn rejects_size_below_one() {
        let err = MultisetFamily::new(
            "bad",
            vec![Strand::template(
                1,
                vec![TemplateEntry::new([0, 1, -1], [0, 1])],
            )],
            DEFAULT_HORIZON,
        )
        .unwrap_err();
        assert!(err.to_string().contains("strand 0"), "{err}");
        assert!(err.to_string().contains("entry 0"), "{err}");
    }

    #[test]
    fn rejects_constant_strand() {
        assert!(MultisetFamily::new(
            "flat",
            vec![Strand::template(
                1,
                vec![TemplateEntry::new([0, 0, 3], [0, 1])]
            )],
            DEFAULT_HORIZON,
        )
        .is_err());
    }

    #[test]
    fn rejects_decreasing_weight() {
        // size = t² − 6t + 10 is positive but dips before t = 3.
        assert!(MultisetFamily::new(
            "dip",
            vec![Strand::template(
                1,
                vec![TemplateEntry::new([1, -6, 10], [0, 1])]
            )],
            DEFAULT_HORIZON,
        )
        .is_err());
    }

    #[test]
    fn pair_requires_aligned_strands() {
        let f = euler_f();
        let g2 = MultisetFamily::new(
            "G",
            vec![
                Strand::template(1, vec![TemplateEntry::new([0, 1, 0], [0, 2])]),
                Strand::template(1, vec![TemplateEntry::new([0, 1, 0], [0, 3])]),
            ],
            DEFAULT_HORIZON,
        )
        .unwrap();
        assert!(FamilyPair::new("p", f.clone(), g2).is_err());
        let g0 = MultisetFamily::new(
            "G",
            vec![Strand::template(
                0,
                vec![TemplateEntry::new([0, 1, 1], [0, 2])],
            )],
            DEFAULT_HORIZON,
        )
        .unwrap();
        assert!(FamilyPair::new("p", f, g0).is_err());
    }
}
