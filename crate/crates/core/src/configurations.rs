//! Finite specifications of periodic and weakly periodic configurations.
//!
//! With respect to an index-two subgroup `H_A`, a *periodic* configuration is
//! a two-value table read off a vertex's own coset, and a *weakly periodic*
//! one is a four-value table σ_ij read off the pair (parent's coset, own
//! coset). Both are evaluated pointwise at arbitrary vertices; `realize`
//! materializes them on a finite tree for the brute-force oracle.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::group_words::{GroupWord, SubgroupDescriptor};
use crate::model::{Region, Spin};
use crate::tree::{vertices_up_to, TreeError};

/// k is fixed at 2 for everything above the group layer: the four-case table
/// below is specific to index-two subgroups of the order-two tree's group.
pub(crate) const K: u8 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("malformed spec {input:?}: expected \"wp:\" + four spin digits or \"p:\" + two spin digits, each in 1..=3")]
    MalformedSpec { input: String },
}

/// Two-value spec: σ0 on coset 0 (the subgroup itself), σ1 on coset 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PeriodicSpec {
    pub sigma0: Spin,
    pub sigma1: Spin,
}

impl PeriodicSpec {
    pub fn new(sigma0: Spin, sigma1: Spin) -> Self {
        PeriodicSpec { sigma0, sigma1 }
    }

    /// All 9 periodic specs, lexicographic.
    pub fn all() -> Vec<PeriodicSpec> {
        let mut out = Vec::with_capacity(9);
        for s0 in Spin::ALL {
            for s1 in Spin::ALL {
                out.push(PeriodicSpec::new(s0, s1));
            }
        }
        out
    }
}

impl fmt::Display for PeriodicSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p:{}{}", self.sigma0, self.sigma1)
    }
}

/// Four-value spec: σ_ij applies when the parent lies in coset i and the
/// vertex in coset j. Stored in the order (σ00, σ01, σ10, σ11).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeaklyPeriodicSpec {
    sigma: [Spin; 4],
}

impl WeaklyPeriodicSpec {
    pub fn new(s00: Spin, s01: Spin, s10: Spin, s11: Spin) -> Self {
        WeaklyPeriodicSpec {
            sigma: [s00, s01, s10, s11],
        }
    }

    /// Construct from raw digits, e.g. `(1,1,2,2)`.
    pub fn from_digits(d: [u8; 4]) -> Result<Self, crate::model::ModelError> {
        Ok(WeaklyPeriodicSpec {
            sigma: [
                Spin::new(d[0])?,
                Spin::new(d[1])?,
                Spin::new(d[2])?,
                Spin::new(d[3])?,
            ],
        })
    }

    /// σ_ij for parent coset i and own coset j.
    pub fn get(&self, parent_coset: u8, own_coset: u8) -> Spin {
        self.sigma[(2 * parent_coset + own_coset) as usize]
    }

    /// (σ00, σ01, σ10, σ11).
    pub fn values(&self) -> [Spin; 4] {
        self.sigma
    }

    /// The coset-relabeled spec σ'_ij = σ_(1−i)(1−j) (swap the roles of the
    /// two cosets).
    pub fn coset_swapped(&self) -> Self {
        let [s00, s01, s10, s11] = self.sigma;
        WeaklyPeriodicSpec {
            sigma: [s11, s10, s01, s00],
        }
    }

    /// The spin reflection v ↦ 4 − v applied to all four values.
    pub fn spin_reflected(&self) -> Self {
        WeaklyPeriodicSpec {
            sigma: self.sigma.map(Spin::reflected),
        }
    }

    /// Lift a periodic spec: the value ignores the parent's coset.
    pub fn from_periodic(p: &PeriodicSpec) -> Self {
        WeaklyPeriodicSpec {
            sigma: [p.sigma0, p.sigma1, p.sigma0, p.sigma1],
        }
    }

    /// All 81 weakly periodic specs, lexicographic in (σ00, σ01, σ10, σ11).
    pub fn all() -> Vec<WeaklyPeriodicSpec> {
        let mut out = Vec::with_capacity(81);
        for s00 in Spin::ALL {
            for s01 in Spin::ALL {
                for s10 in Spin::ALL {
                    for s11 in Spin::ALL {
                        out.push(WeaklyPeriodicSpec::new(s00, s01, s10, s11));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for WeaklyPeriodicSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "wp:{}{}{}{}",
            self.sigma[0], self.sigma[1], self.sigma[2], self.sigma[3]
        )
    }
}

/// How a weakly periodic spec degenerates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SpecKind {
    /// All four values equal: constant configuration.
    TranslationInvariant,
    /// Value depends on the vertex's own coset only, but is not constant.
    PeriodicNonTi,
    /// Genuinely depends on the parent's coset.
    WeaklyPeriodicStrict,
}

impl fmt::Display for SpecKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpecKind::TranslationInvariant => "translation-invariant",
            SpecKind::PeriodicNonTi => "periodic-non-TI",
            SpecKind::WeaklyPeriodicStrict => "weakly-periodic-strict",
        })
    }
}

/// Which coset the root's (nonexistent) parent is imagined in. The root is
/// the one vertex with no parent, so a weakly periodic table needs this one
/// extra bit; interior balls never see it, and verification confirms results
/// are identical under both choices.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootConvention {
    /// Treat the root's virtual parent as lying in coset 0.
    #[default]
    ParentInH0,
    /// Treat the root's virtual parent as lying in coset 1.
    ParentInH1,
}

impl RootConvention {
    pub const BOTH: [RootConvention; 2] = [RootConvention::ParentInH0, RootConvention::ParentInH1];

    fn root_parent_coset(self) -> u8 {
        match self {
            RootConvention::ParentInH0 => 0,
            RootConvention::ParentInH1 => 1,
        }
    }
}

impl fmt::Display for RootConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootConvention::ParentInH0 => "h0",
            RootConvention::ParentInH1 => "h1",
        })
    }
}

/// Value of a periodic configuration at `x`: read the table at x's coset.
pub fn periodic_value(s: &PeriodicSpec, x: &GroupWord, a: &SubgroupDescriptor) -> Spin {
    if a.coset(x) == 0 {
        s.sigma0
    } else {
        s.sigma1
    }
}

/// Value of a weakly periodic configuration at `x`: read the table at
/// (parent's coset, x's coset); the root's parent coset comes from the rule.
pub fn weakly_periodic_value(
    s: &WeaklyPeriodicSpec,
    x: &GroupWord,
    a: &SubgroupDescriptor,
    root_rule: RootConvention,
) -> Spin {
    let own = a.coset(x);
    let parent = match x.parent() {
        Ok(p) => a.coset(&p),
        Err(_) => root_rule.root_parent_coset(),
    };
    s.get(parent, own)
}

/// Classify how a spec degenerates.
pub fn classify_spec(s: &WeaklyPeriodicSpec) -> SpecKind {
    let [s00, s01, s10, s11] = s.values();
    if s00 == s01 && s01 == s10 && s10 == s11 {
        SpecKind::TranslationInvariant
    } else if s00 == s10 && s01 == s11 {
        SpecKind::PeriodicNonTi
    } else {
        SpecKind::WeaklyPeriodicStrict
    }
}

/// Materialize a spec on all of `V_n` (k = 2).
pub fn realize(
    s: &WeaklyPeriodicSpec,
    n: u32,
    a: &SubgroupDescriptor,
    root_rule: RootConvention,
) -> Result<BTreeMap<GroupWord, Spin>, TreeError> {
    Ok(vertices_up_to(n, K)?
        .into_iter()
        .map(|x| {
            let v = weakly_periodic_value(s, &x, a, root_rule);
            (x, v)
        })
        .collect())
}

/// Either kind of spec, as parsed from its textual form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnySpec {
    Periodic(PeriodicSpec),
    WeaklyPeriodic(WeaklyPeriodicSpec),
}

impl AnySpec {
    /// Parse `"wp:1122"` or `"p:12"`; bit-exact inverse of `Display`.
    pub fn parse(input: &str) -> Result<AnySpec, ConfigError> {
        let err = || ConfigError::MalformedSpec {
            input: input.to_owned(),
        };
        let spin_digits = |s: &str| -> Option<Vec<Spin>> {
            s.bytes()
                .map(|b| {
                    if b.is_ascii_digit() {
                        Spin::new(b - b'0').ok()
                    } else {
                        None
                    }
                })
                .collect()
        };
        if let Some(rest) = input.strip_prefix("wp:") {
            let d = spin_digits(rest).ok_or_else(err)?;
            if d.len() != 4 {
                return Err(err());
            }
            return Ok(AnySpec::WeaklyPeriodic(WeaklyPeriodicSpec::new(
                d[0], d[1], d[2], d[3],
            )));
        }
        if let Some(rest) = input.strip_prefix("p:") {
            let d = spin_digits(rest).ok_or_else(err)?;
            if d.len() != 2 {
                return Err(err());
            }
            return Ok(AnySpec::Periodic(PeriodicSpec::new(d[0], d[1])));
        }
        Err(err())
    }

    /// The four-value form: periodic specs lift by ignoring the parent coset.
    pub fn lift(&self) -> WeaklyPeriodicSpec {
        match self {
            AnySpec::Periodic(s) => WeaklyPeriodicSpec::from_periodic(s),
            AnySpec::WeaklyPeriodic(s) => *s,
        }
    }
}

impl fmt::Display for AnySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnySpec::Periodic(s) => s.fmt(f),
            AnySpec::WeaklyPeriodic(s) => s.fmt(f),
        }
    }
}

/// A catalog entry: one of the twenty classical weakly periodic ground-state
/// candidates φ_1..φ_20, with the region claimed for it. The claim is input
/// data for verification — the engine recomputes every region from scratch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub index: u8,
    pub spec: WeaklyPeriodicSpec,
    pub claimed_region: Region,
}

impl CatalogEntry {
    pub fn label(&self) -> String {
        format!("phi_{}", self.index)
    }
}

/// The classical catalog: entries 1–14 are claimed to be ground states
/// exactly on T={b,c}, entries 15–20 exactly on T={a,c}.
pub fn catalog() -> Vec<CatalogEntry> {
    use crate::model::Coupling::{A, B, C};
    const DIGITS: [[u8; 4]; 20] = [
        [1, 1, 2, 2],
        [1, 2, 2, 1],
        [1, 2, 2, 3],
        [2, 1, 1, 1],
        [2, 1, 2, 2],
        [2, 1, 3, 2],
        [2, 2, 1, 2],
        [2, 2, 2, 1],
        [2, 2, 2, 3],
        [2, 2, 3, 2],
        [2, 2, 1, 1],
        [3, 3, 3, 2],
        [1, 1, 1, 2],
        [1, 2, 2, 2],
        [1, 3, 3, 3],
        [3, 1, 1, 3],
        [3, 3, 1, 1],
        [3, 3, 1, 3],
        [3, 3, 3, 1],
        [1, 3, 3, 1],
    ];
    DIGITS
        .iter()
        .enumerate()
        .map(|(i, d)| {
            let claimed = if i < 14 {
                Region::new([B, C]).expect("nonempty")
            } else {
                Region::new([A, C]).expect("nonempty")
            };
            CatalogEntry {
                index: i as u8 + 1,
                spec: WeaklyPeriodicSpec::from_digits(*d).expect("catalog digits are spins"),
                claimed_region: claimed,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_words::neighbors;

    fn a1() -> SubgroupDescriptor {
        SubgroupDescriptor::single(1, 2).unwrap()
    }

    fn sp(v: u8) -> Spin {
        Spin::new(v).unwrap()
    }

    fn wp(d: [u8; 4]) -> WeaklyPeriodicSpec {
        WeaklyPeriodicSpec::from_digits(d).unwrap()
    }

    fn w(s: &str) -> GroupWord {
        GroupWord::parse(s, 2).unwrap()
    }

    #[test]
    fn periodic_value_reads_the_coset() {
        let s = PeriodicSpec::new(sp(1), sp(2));
        assert_eq!(periodic_value(&s, &GroupWord::identity(), &a1()), sp(1));
        assert_eq!(periodic_value(&s, &w("1"), &a1()), sp(2));
        let constant = PeriodicSpec::new(sp(3), sp(3));
        for x in vertices_up_to(4, 2).unwrap() {
            assert_eq!(periodic_value(&constant, &x, &a1()), sp(3));
        }
    }

    #[test]
    fn weakly_periodic_value_reads_the_coset_pair() {
        let phi1 = wp([1, 1, 2, 2]);
        // a_2: parent e in coset 0, own coset 0 (no letter 1) → σ00.
        assert_eq!(
            weakly_periodic_value(&phi1, &w("2"), &a1(), RootConvention::ParentInH0),
            sp(1)
        );
        // 1.2: parent a_1 in coset 1, own coset 1 → σ11.
        assert_eq!(
            weakly_periodic_value(&phi1, &w("1.2"), &a1(), RootConvention::ParentInH0),
            sp(2)
        );
        let phi17 = wp([3, 3, 1, 1]);
        // a_1: parent e in coset 0, own coset 1 → σ01.
        assert_eq!(
            weakly_periodic_value(&phi17, &w("1"), &a1(), RootConvention::ParentInH0),
            sp(3)
        );
    }

    #[test]
    fn root_rule_only_affects_the_root() {
        let s = wp([1, 2, 3, 1]);
        let e = GroupWord::identity();
        assert_eq!(
            weakly_periodic_value(&s, &e, &a1(), RootConvention::ParentInH0),
            sp(1)
        );
        assert_eq!(
            weakly_periodic_value(&s, &e, &a1(), RootConvention::ParentInH1),
            sp(3)
        );
        for x in vertices_up_to(5, 2).unwrap() {
            if !x.is_identity() {
                assert_eq!(
                    weakly_periodic_value(&s, &x, &a1(), RootConvention::ParentInH0),
                    weakly_periodic_value(&s, &x, &a1(), RootConvention::ParentInH1)
                );
            }
        }
    }

    #[test]
    fn classify_spec_cases() {
        assert_eq!(
            classify_spec(&wp([2, 2, 2, 2])),
            SpecKind::TranslationInvariant
        );
        assert_eq!(classify_spec(&wp([1, 2, 1, 2])), SpecKind::PeriodicNonTi);
        assert_eq!(
            classify_spec(&wp([1, 2, 2, 1])),
            SpecKind::WeaklyPeriodicStrict
        );
    }

    #[test]
    fn realize_agrees_with_pointwise_evaluation() {
        let phi1 = wp([1, 1, 2, 2]);
        let map = realize(&phi1, 2, &a1(), RootConvention::ParentInH0).unwrap();
        let expect: Vec<(&str, u8)> = vec![("e", 1), ("1", 1), ("2", 1), ("3", 1), ("1.2", 2)];
        for (word, val) in expect {
            assert_eq!(map[&w(word)], sp(val), "at {word}");
        }
        let map4 = realize(&phi1, 4, &a1(), RootConvention::ParentInH0).unwrap();
        for (x, v) in &map4 {
            assert_eq!(
                *v,
                weakly_periodic_value(&phi1, x, &a1(), RootConvention::ParentInH0)
            );
        }
    }

    #[test]
    fn lifted_periodic_spec_matches_periodic_values_off_the_root() {
        let p = PeriodicSpec::new(sp(1), sp(3));
        let lifted = WeaklyPeriodicSpec::from_periodic(&p);
        for x in vertices_up_to(5, 2).unwrap() {
            if x.is_identity() {
                continue;
            }
            assert_eq!(
                weakly_periodic_value(&lifted, &x, &a1(), RootConvention::ParentInH0),
                periodic_value(&p, &x, &a1())
            );
        }
    }

    #[test]
    fn evaluation_factors_through_the_coset_pair() {
        let s = wp([2, 1, 3, 2]);
        let a = a1();
        let mut by_pair: BTreeMap<(u8, u8), Spin> = BTreeMap::new();
        for x in vertices_up_to(6, 2).unwrap() {
            let Ok(parent) = x.parent() else { continue };
            let key = (a.coset(&parent), a.coset(&x));
            let v = weakly_periodic_value(&s, &x, &a, RootConvention::ParentInH0);
            assert_eq!(*by_pair.entry(key).or_insert(v), v, "pair {key:?}");
        }
        assert_eq!(by_pair.len(), 4); // all four coset pairs occur
    }

    #[test]
    fn neighbor_structure_feeds_the_table() {
        // Sanity for the oracle: every non-root vertex has exactly one
        // coset-flipping neighbor when |A| = 1.
        let a = a1();
        for x in vertices_up_to(5, 2).unwrap() {
            let flips = neighbors(&x, 2)
                .iter()
                .filter(|y| a.coset(y) != a.coset(&x))
                .count();
            assert_eq!(flips, 1);
        }
    }

    #[test]
    fn spec_string_round_trip() {
        for s in WeaklyPeriodicSpec::all() {
            assert_eq!(
                AnySpec::parse(&s.to_string()).unwrap(),
                AnySpec::WeaklyPeriodic(s)
            );
        }
        for s in PeriodicSpec::all() {
            assert_eq!(
                AnySpec::parse(&s.to_string()).unwrap(),
                AnySpec::Periodic(s)
            );
        }
        for bad in [
            "", "wp:112", "wp:11224", "wp:1142", "p:1", "p:14", "x:12", "wp:abcd",
        ] {
            assert!(AnySpec::parse(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn symmetries_of_specs() {
        let s = wp([1, 2, 3, 1]);
        assert_eq!(s.coset_swapped(), wp([1, 3, 2, 1]));
        assert_eq!(s.coset_swapped().coset_swapped(), s);
        assert_eq!(s.spin_reflected(), wp([3, 2, 1, 3]));
        assert_eq!(s.spin_reflected().spin_reflected(), s);
    }

    #[test]
    fn catalog_shape() {
        let cat = catalog();
        assert_eq!(cat.len(), 20);
        assert_eq!(cat[0].spec, wp([1, 1, 2, 2]));
        assert_eq!(cat[0].label(), "phi_1");
        assert_eq!(cat[17].spec, wp([3, 3, 1, 3]));
        // Every entry is strictly weakly periodic and unique.
        let mut seen = std::collections::BTreeSet::new();
        for e in &cat {
            assert_eq!(
                classify_spec(&e.spec),
                SpecKind::WeaklyPeriodicStrict,
                "{}",
                e.spec
            );
            assert!(seen.insert(e.spec), "duplicate {}", e.spec);
        }
        assert_eq!(
            cat.iter()
                .filter(|e| e.claimed_region.canonical_label() == "T={b,c}")
                .count(),
            14
        );
        assert_eq!(
            cat.iter()
                .filter(|e| e.claimed_region.canonical_label() == "T={a,c}")
                .count(),
            6
        );
    }

    #[test]
    fn all_specs_census() {
        let all = WeaklyPeriodicSpec::all();
        assert_eq!(all.len(), 81);
        let ti = all
            .iter()
            .filter(|s| classify_spec(s) == SpecKind::TranslationInvariant)
            .count();
        let per = all
            .iter()
            .filter(|s| classify_spec(s) == SpecKind::PeriodicNonTi)
            .count();
        let strict = all
            .iter()
            .filter(|s| classify_spec(s) == SpecKind::WeaklyPeriodicStrict)
            .count();
        assert_eq!((ti, per, strict), (3, 6, 72));
    }
}
