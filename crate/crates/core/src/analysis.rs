//! The theorem engine: symbolic class sets over realizable local patterns,
//! exact ground-state regions, the finite-tree brute-force oracle, full-spec
//! enumeration, and verdict reports.
//!
//! Two independent routes decide whether a spec is a ground state at a
//! parameter point. The *symbolic* route enumerates the realizable local
//! patterns, classifies the ball each pattern induces, and intersects the
//! classes' minimality regions. The *oracle* route materializes the spec on
//! a finite tree and compares every interior ball's energy against
//! (3/2)·min(a,b,c) by exact rational arithmetic — it never looks at classes
//! or patterns. Verification demands the two routes agree everywhere; a
//! disagreement with the classical catalog, by contrast, is reported as a
//! finding, never asserted as truth.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::configurations::{
    catalog, classify_spec, realize, CatalogEntry, PeriodicSpec, RootConvention, SpecKind,
    WeaklyPeriodicSpec, K,
};
use crate::group_words::{neighbors, GroupWord, SubgroupDescriptor};
use crate::model::{
    ball_class, ball_energy, lambda_value, region_of_classes, BallConfig, ClassIndex, Coupling,
    LambdaParams, ModelError, Rational, Region, Spin,
};
use crate::tree::{
    interior_centers, pattern_witnesses, realizable_patterns, vertices_up_to, LocalPattern,
    TreeError, PATTERN_SCAN_DEPTH,
};

/// Oracle tree depth used by default: 190 vertices, 90 interior centers —
/// deep enough that every realizable pattern occurs among the centers.
pub const DEFAULT_ORACLE_DEPTH: u32 = 6;

/// Shallowest oracle the verify drivers accept. The interior window of `V_n`
/// covers center depths 2..=n−1, and one realizable pattern first occurs at
/// center depth 4; any shallower tree can miss a violating ball and report a
/// false ground state.
pub const MIN_SOUND_ORACLE_DEPTH: u32 = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("maps differ at vertex {vertex} (depth {depth}); relative energies need all differences at depth <= {max_depth}")]
    BoundaryDifference {
        vertex: String,
        depth: usize,
        max_depth: i64,
    },
    #[error("configuration map is missing vertex {vertex}")]
    MissingVertex { vertex: String },
    #[error("oracle depth {requested} is too shallow: interior centers must reach depth 4 to realize every local pattern (need depth >= {min})")]
    UnsoundDepth { requested: u32, min: u32 },
    #[error("witness validation failed: {detail}")]
    WitnessMismatch { detail: String },
}

/// A class witness: the realizable pattern, a concrete tree vertex realizing
/// it, and the ball the spec induces there (validated on a materialized tree).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternWitness {
    pub pattern: LocalPattern,
    pub vertex: GroupWord,
    pub ball: BallConfig,
    pub class: ClassIndex,
}

/// The classes a spec realizes on interior balls, with one witness per class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSetResult {
    pub spec: WeaklyPeriodicSpec,
    pub subgroup: SubgroupDescriptor,
    pub classes: BTreeSet<ClassIndex>,
    pub witnesses: BTreeMap<ClassIndex, PatternWitness>,
}

/// The ball a spec induces at any vertex realizing `pattern`: the center
/// reads σ_(parent, center), the center's parent reads σ_(grandparent,
/// parent), and each child reads σ_(center, child).
pub fn induced_ball(s: &WeaklyPeriodicSpec, pattern: &LocalPattern) -> BallConfig {
    let center = s.get(pattern.parent, pattern.center);
    let parent_spin = s.get(pattern.grandparent, pattern.parent);
    let child0 = s.get(pattern.center, pattern.children[0]);
    let child1 = s.get(pattern.center, pattern.children[1]);
    BallConfig::new(center, [parent_spin, child0, child1])
}

fn realized_ball(
    spins: &BTreeMap<GroupWord, Spin>,
    x: &GroupWord,
) -> Result<BallConfig, AnalysisError> {
    let missing = |v: &GroupWord| AnalysisError::MissingVertex {
        vertex: v.to_string(),
    };
    let center = *spins.get(x).ok_or_else(|| missing(x))?;
    let ns = neighbors(x, K);
    let mut around = [center; 3];
    for (slot, y) in around.iter_mut().zip(&ns) {
        *slot = *spins.get(y).ok_or_else(|| missing(y))?;
    }
    Ok(BallConfig::new(center, around))
}

/// Symbolic class set of a weakly periodic spec: classify the induced ball of
/// every realizable pattern. Root-convention free — patterns only exist at
/// depth ≥ 2, where no value consults the root rule. Every witness is
/// re-validated against a depth-6 materialized tree before being returned.
pub fn class_set(
    s: &WeaklyPeriodicSpec,
    a: &SubgroupDescriptor,
) -> Result<ClassSetResult, AnalysisError> {
    let patterns = realizable_patterns(a, K)?;
    let vertex_for = pattern_witnesses(a, K, PATTERN_SCAN_DEPTH)?;
    let spins = realize(s, PATTERN_SCAN_DEPTH + 1, a, RootConvention::default())?;
    let mut classes = BTreeSet::new();
    let mut witnesses: BTreeMap<ClassIndex, PatternWitness> = BTreeMap::new();
    for pattern in &patterns {
        let ball = induced_ball(s, pattern);
        let class = ball_class(&ball);
        classes.insert(class);
        if witnesses.contains_key(&class) {
            continue;
        }
        let vertex = vertex_for[pattern].clone();
        let realized = realized_ball(&spins, &vertex)?;
        if realized != ball || ball_class(&realized) != class {
            return Err(AnalysisError::WitnessMismatch {
                detail: format!(
                    "{class} of {s}: pattern {pattern} at vertex {vertex} realizes {realized} of class {}",
                    ball_class(&realized)
                ),
            });
        }
        witnesses.insert(
            class,
            PatternWitness {
                pattern: *pattern,
                vertex,
                ball,
                class,
            },
        );
    }
    Ok(ClassSetResult {
        spec: *s,
        subgroup: a.clone(),
        classes,
        witnesses,
    })
}

/// The exact parameter region on which `s` is a ground state: every realized
/// class must attain the minimum, so the forced couplings are the union of
/// the realized classes' symbols.
pub fn ground_state_region(
    s: &WeaklyPeriodicSpec,
    a: &SubgroupDescriptor,
) -> Result<Region, AnalysisError> {
    Ok(region_of_classes(class_set(s, a)?.classes)?)
}

/// Class set of a periodic spec, via its four-value lift (the value table
/// just ignores the parent coset).
pub fn periodic_class_set(
    s: &PeriodicSpec,
    a: &SubgroupDescriptor,
) -> Result<ClassSetResult, AnalysisError> {
    class_set(&WeaklyPeriodicSpec::from_periodic(s), a)
}

/// A ball that witnesses an oracle rejection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleFailure {
    pub center: GroupWord,
    pub ball: BallConfig,
    pub class: ClassIndex,
    pub energy: Rational,
    pub minimum: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleOutcome {
    pub is_ground_state: bool,
    pub failure: Option<OracleFailure>,
}

fn three_halves() -> Rational {
    Rational::new(3.into(), 2.into())
}

/// Brute-force ground-state check on `V_n`: materialize the spec and demand
/// every interior ball's energy equal (3/2)·min(a,b,c) exactly. This route
/// never consults classes, patterns, or regions.
pub fn oracle_ground_state_check(
    s: &WeaklyPeriodicSpec,
    p: &LambdaParams,
    n: u32,
    a: &SubgroupDescriptor,
    root_rule: RootConvention,
) -> Result<OracleOutcome, AnalysisError> {
    let spins = realize(s, n, a, root_rule)?;
    let target = three_halves() * p.min();
    for x in interior_centers(n, K)? {
        let cfg = realized_ball(&spins, &x)?;
        let energy = ball_energy(&cfg, p);
        if energy != target {
            return Ok(OracleOutcome {
                is_ground_state: false,
                failure: Some(OracleFailure {
                    center: x,
                    class: ball_class(&cfg),
                    ball: cfg,
                    energy,
                    minimum: target,
                }),
            });
        }
    }
    Ok(OracleOutcome {
        is_ground_state: true,
        failure: None,
    })
}

fn check_interior_difference(
    sigma: &BTreeMap<GroupWord, Spin>,
    phi: &BTreeMap<GroupWord, Spin>,
    verts: &[GroupWord],
    n: u32,
) -> Result<(), AnalysisError> {
    let missing = |v: &GroupWord| AnalysisError::MissingVertex {
        vertex: v.to_string(),
    };
    let max_depth = n as i64 - 2;
    for x in verts {
        let sv = sigma.get(x).ok_or_else(|| missing(x))?;
        let pv = phi.get(x).ok_or_else(|| missing(x))?;
        if sv != pv && x.len() as i64 > max_depth {
            return Err(AnalysisError::BoundaryDifference {
                vertex: x.to_string(),
                depth: x.len(),
                max_depth,
            });
        }
    }
    Ok(())
}

/// Relative energy of σ with respect to φ on `V_n`: the exact sum over all
/// tree edges of λ(σ) − λ(φ). Requires the two maps to differ only at depth
/// ≤ n−2, the regime in which the edge sum equals the interior ball sum.
pub fn relative_hamiltonian(
    sigma: &BTreeMap<GroupWord, Spin>,
    phi: &BTreeMap<GroupWord, Spin>,
    n: u32,
    p: &LambdaParams,
) -> Result<Rational, AnalysisError> {
    let verts = vertices_up_to(n, K)?;
    check_interior_difference(sigma, phi, &verts, n)?;
    let mut total = Rational::zero();
    for x in &verts {
        let Ok(parent) = x.parent() else { continue };
        total += lambda_value(sigma[x], sigma[&parent], p) - lambda_value(phi[x], phi[&parent], p);
    }
    Ok(total)
}

/// The same relative energy computed the other way: as the sum of ball-energy
/// differences over all centers of depth ≤ n−1. Every edge at depth ≤ n−1
/// lies in two such balls (the ½ in U makes that count once); an edge at
/// depth n lies in one ball only, but under the interior-difference
/// precondition its two configurations agree, so the routes coincide exactly.
pub fn relative_hamiltonian_ball_sum(
    sigma: &BTreeMap<GroupWord, Spin>,
    phi: &BTreeMap<GroupWord, Spin>,
    n: u32,
    p: &LambdaParams,
) -> Result<Rational, AnalysisError> {
    let verts = vertices_up_to(n, K)?;
    check_interior_difference(sigma, phi, &verts, n)?;
    let mut total = Rational::zero();
    for x in &verts {
        if x.len() as u32 > n.saturating_sub(1) {
            continue;
        }
        total += ball_energy(&realized_ball(sigma, x)?, p);
        total -= ball_energy(&realized_ball(phi, x)?, p);
    }
    Ok(total)
}

/// The thirteen order types of (a, b, c) with fixed small-integer
/// representatives: six strict orders, six single ties, the triple tie.
pub fn order_type_points() -> Vec<(&'static str, LambdaParams)> {
    let p = LambdaParams::from_integers;
    vec![
        ("a<b<c", p(1, 2, 3)),
        ("a<c<b", p(1, 3, 2)),
        ("b<a<c", p(2, 1, 3)),
        ("b<c<a", p(3, 1, 2)),
        ("c<a<b", p(2, 3, 1)),
        ("c<b<a", p(3, 2, 1)),
        ("a=b<c", p(1, 1, 2)),
        ("a=c<b", p(1, 2, 1)),
        ("b=c<a", p(2, 1, 1)),
        ("a<b=c", p(1, 2, 2)),
        ("b<a=c", p(2, 1, 2)),
        ("c<a=b", p(2, 2, 1)),
        ("a=b=c", p(2, 2, 2)),
    ]
}

/// The fixed interior representative of a region: forced couplings at 1,
/// free couplings at 3 (e.g. (3,1,1) for T={b,c}).
pub fn region_representative(r: &Region) -> LambdaParams {
    let value = |s: Coupling| {
        if r.forced_min().contains(&s) {
            Rational::from_integer(1.into())
        } else {
            Rational::from_integer(3.into())
        }
    };
    LambdaParams::new(value(Coupling::A), value(Coupling::B), value(Coupling::C))
}

/// A fixed point outside the region. (1,2,3) works unless the region is
/// exactly T={a}; (3,2,1) covers that case.
pub fn region_exterior_point(r: &Region) -> LambdaParams {
    let first = LambdaParams::from_integers(1, 2, 3);
    if !r.contains(&first) {
        first
    } else {
        LambdaParams::from_integers(3, 2, 1)
    }
}

fn draw_rational(rng: &mut ChaCha8Rng, lo: i64, hi: i64, max_den: i64) -> Rational {
    let numer = rng.gen_range(lo..=hi);
    let denom = rng.gen_range(1..=max_den);
    Rational::new(numer.into(), denom.into())
}

/// Seeded, reproducible sampler of rational parameter triples (numerators in
/// −12..=12, denominators in 1..=8).
pub fn sample_params(seed: u64, count: usize) -> Vec<LambdaParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let a = draw_rational(&mut rng, -12, 12, 8);
            let b = draw_rational(&mut rng, -12, 12, 8);
            let c = draw_rational(&mut rng, -12, 12, 8);
            LambdaParams::new(a, b, c)
        })
        .collect()
}

/// Seeded points inside a region: the forced couplings share a common
/// minimum, the free couplings sit a nonnegative bump above it.
pub fn sample_in_region(r: &Region, seed: u64, count: usize) -> Vec<LambdaParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let m = draw_rational(&mut rng, -12, 12, 8);
            let mut vals = [m.clone(), m.clone(), m.clone()];
            for (slot, coupling) in vals.iter_mut().zip(Coupling::ALL) {
                if !r.forced_min().contains(&coupling) {
                    *slot = &m + draw_rational(&mut rng, 0, 10, 4);
                }
            }
            let [a, b, c] = vals;
            LambdaParams::new(a, b, c)
        })
        .collect()
}

/// Seeded points outside a region, by rejection; falls back to the fixed
/// exterior witness if rejection stalls (it never does for proper regions).
pub fn sample_outside_region(r: &Region, seed: u64, count: usize) -> Vec<LambdaParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut found = None;
        for _ in 0..64 {
            let a = draw_rational(&mut rng, -12, 12, 8);
            let b = draw_rational(&mut rng, -12, 12, 8);
            let c = draw_rational(&mut rng, -12, 12, 8);
            let p = LambdaParams::new(a, b, c);
            if !r.contains(&p) {
                found = Some(p);
                break;
            }
        }
        out.push(found.unwrap_or_else(|| region_exterior_point(r)));
    }
    out
}

/// One oracle probe of a spec at a point under a root rule, with the verdict
/// the symbolic region predicts. `expected != observed` is an internal
/// inconsistency, never acceptable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleSpotCheck {
    pub point: LambdaParams,
    pub root_rule: RootConvention,
    pub expected: bool,
    pub observed: bool,
}

impl OracleSpotCheck {
    pub fn consistent(&self) -> bool {
        self.expected == self.observed
    }
}

/// Everything the engine knows about one spec.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecRecord {
    /// Display form: "wp:1122", or "p:12" for rows born periodic.
    pub label: String,
    pub spec: WeaklyPeriodicSpec,
    pub kind: SpecKind,
    pub classes: BTreeSet<ClassIndex>,
    pub region: Region,
    /// Strictly weakly periodic with a region strictly beyond {a=b=c}.
    pub is_carrier: bool,
    pub catalog_index: Option<u8>,
    pub claimed_region: Option<Region>,
    /// computed region == claimed region (when a claim exists).
    pub agrees: Option<bool>,
    pub witnesses: Vec<PatternWitness>,
    pub spot_checks: Vec<OracleSpotCheck>,
}

/// A catalog-independent discovery: a strictly weakly periodic ground-state
/// carrier that the twenty-entry catalog does not list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub record: SpecRecord,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckMismatch {
    pub spec: WeaklyPeriodicSpec,
    pub point_label: String,
    pub root_rule: RootConvention,
    pub symbolic: bool,
    pub oracle: bool,
}

/// Result of the exhaustive symbolic-vs-oracle sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckSummary {
    pub depth: u32,
    pub checks: usize,
    pub mismatches: Vec<CrossCheckMismatch>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Summary {
    pub total: usize,
    pub agree: usize,
    pub disagree: usize,
    pub unclaimed: usize,
    pub carriers: usize,
    pub findings: usize,
    pub inconsistent_spot_checks: usize,
    pub by_region: BTreeMap<String, usize>,
}

/// Pass/fail of a verification run. Findings against the catalog do not fail
/// a run; only internal symbolic/oracle inconsistencies do.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunStatus {
    Pass,
    InternalMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerdictReport {
    pub title: String,
    pub subgroup: SubgroupDescriptor,
    pub depth: u32,
    pub seed: u64,
    pub records: Vec<SpecRecord>,
    pub findings: Vec<Finding>,
    pub cross_check: Option<CrossCheckSummary>,
    pub summary: Summary,
}

impl VerdictReport {
    pub fn status(&self) -> RunStatus {
        let spot_ok = self.summary.inconsistent_spot_checks == 0;
        let cross_ok = self
            .cross_check
            .as_ref()
            .is_none_or(|c| c.mismatches.is_empty());
        if spot_ok && cross_ok {
            RunStatus::Pass
        } else {
            RunStatus::InternalMismatch
        }
    }
}

fn default_subgroup() -> SubgroupDescriptor {
    SubgroupDescriptor::single(1, K).expect("A = {1} is valid")
}

fn require_sound_depth(depth: u32) -> Result<(), AnalysisError> {
    if depth < MIN_SOUND_ORACLE_DEPTH {
        return Err(AnalysisError::UnsoundDepth {
            requested: depth,
            min: MIN_SOUND_ORACLE_DEPTH,
        });
    }
    Ok(())
}

/// Oracle spot checks for a record: fixed representative + fixed exterior
/// point, plus one seeded point on each side, under each requested root rule.
fn spot_checks_for(
    s: &WeaklyPeriodicSpec,
    region: &Region,
    a: &SubgroupDescriptor,
    depth: u32,
    seed: u64,
    rules: &[RootConvention],
) -> Result<Vec<OracleSpotCheck>, AnalysisError> {
    let mut points = vec![region_representative(region), region_exterior_point(region)];
    points.extend(sample_in_region(region, seed, 1));
    points.extend(sample_outside_region(region, seed, 1));
    let mut checks = Vec::with_capacity(points.len() * rules.len());
    for point in points {
        for &rule in rules {
            let expected = region.contains(&point);
            let observed = oracle_ground_state_check(s, &point, depth, a, rule)?.is_ground_state;
            checks.push(OracleSpotCheck {
                point: point.clone(),
                root_rule: rule,
                expected,
                observed,
            });
        }
    }
    Ok(checks)
}

fn build_record(
    label: String,
    s: &WeaklyPeriodicSpec,
    a: &SubgroupDescriptor,
    claim: Option<(Option<u8>, Region)>,
) -> Result<SpecRecord, AnalysisError> {
    let result = class_set(s, a)?;
    let region = region_of_classes(result.classes.iter().copied())?;
    let kind = classify_spec(s);
    let (catalog_index, claimed_region) = match claim {
        Some((idx, r)) => (idx, Some(r)),
        None => (None, None),
    };
    let agrees = claimed_region
        .as_ref()
        .map(|c| crate::model::region_equal(c, &region));
    Ok(SpecRecord {
        label,
        spec: *s,
        kind,
        classes: result.classes.clone(),
        is_carrier: kind == SpecKind::WeaklyPeriodicStrict && region != Region::diagonal(),
        region,
        catalog_index,
        claimed_region,
        agrees,
        witnesses: result.witnesses.into_values().collect(),
        spot_checks: Vec::new(),
    })
}

fn summarize(records: &[SpecRecord], findings: &[Finding]) -> Summary {
    let mut summary = Summary {
        total: records.len(),
        findings: findings.len(),
        ..Summary::default()
    };
    for r in records {
        match r.agrees {
            Some(true) => summary.agree += 1,
            Some(false) => summary.disagree += 1,
            None => summary.unclaimed += 1,
        }
        if r.is_carrier {
            summary.carriers += 1;
        }
        summary.inconsistent_spot_checks +=
            r.spot_checks.iter().filter(|c| !c.consistent()).count();
        *summary
            .by_region
            .entry(r.region.canonical_label())
            .or_insert(0) += 1;
    }
    for f in findings {
        summary.inconsistent_spot_checks += f
            .record
            .spot_checks
            .iter()
            .filter(|c| !c.consistent())
            .count();
    }
    summary
}

/// Carrier specs the catalog misses, in lexicographic order, with validated
/// witnesses and oracle spot checks.
fn collect_findings(
    a: &SubgroupDescriptor,
    depth: u32,
    seed: u64,
    rules: &[RootConvention],
) -> Result<Vec<Finding>, AnalysisError> {
    let listed: BTreeSet<WeaklyPeriodicSpec> = catalog().iter().map(|e| e.spec).collect();
    let mut findings = Vec::new();
    for s in WeaklyPeriodicSpec::all() {
        if classify_spec(&s) != SpecKind::WeaklyPeriodicStrict || listed.contains(&s) {
            continue;
        }
        let mut record = build_record(s.to_string(), &s, a, None)?;
        if !record.is_carrier {
            continue;
        }
        record.spot_checks = spot_checks_for(&s, &record.region, a, depth, seed, rules)?;
        let note = format!(
            "strictly weakly periodic ground-state carrier on {} not among the twenty catalog entries",
            record.region.canonical_label()
        );
        findings.push(Finding { record, note });
    }
    Ok(findings)
}

/// Process all 81 specs symbolically: kind, class set, region, catalog match,
/// carrier flag; plus the findings list. Purely symbolic (no oracle runs).
pub fn enumerate_all(a: &SubgroupDescriptor) -> Result<VerdictReport, AnalysisError> {
    let by_spec: BTreeMap<WeaklyPeriodicSpec, CatalogEntry> =
        catalog().into_iter().map(|e| (e.spec, e)).collect();
    let mut records = Vec::with_capacity(81);
    for s in WeaklyPeriodicSpec::all() {
        let claim = by_spec
            .get(&s)
            .map(|e| (Some(e.index), e.claimed_region.clone()));
        records.push(build_record(s.to_string(), &s, a, claim)?);
    }
    let findings = records
        .iter()
        .filter(|r| r.is_carrier && r.catalog_index.is_none())
        .map(|r| Finding {
            record: r.clone(),
            note: format!(
                "strictly weakly periodic ground-state carrier on {} not among the twenty catalog entries",
                r.region.canonical_label()
            ),
        })
        .collect::<Vec<_>>();
    let summary = summarize(&records, &findings);
    Ok(VerdictReport {
        title: "enumerate".to_owned(),
        subgroup: a.clone(),
        depth: 0,
        seed: 0,
        records,
        findings,
        cross_check: None,
        summary,
    })
}

/// The claimed region for a periodic spec: |σ0 − σ1| = 0 → T={c},
/// 1 → T={b,c}, 2 → T={a,c}.
pub fn periodic_claimed_region(s: &PeriodicSpec) -> Region {
    use Coupling::{A, B, C};
    let spread = s.sigma0.value().abs_diff(s.sigma1.value());
    let forced: &[Coupling] = match spread {
        0 => &[C],
        1 => &[B, C],
        _ => &[A, C],
    };
    Region::new(forced.iter().copied()).expect("nonempty")
}

/// Verify the periodic theorem at a given depth under the given root rules.
pub fn verify_periodic_at(
    depth: u32,
    rules: &[RootConvention],
) -> Result<VerdictReport, AnalysisError> {
    let a = default_subgroup();
    let mut records = Vec::with_capacity(9);
    for s in PeriodicSpec::all() {
        let lifted = WeaklyPeriodicSpec::from_periodic(&s);
        let claim = Some((None, periodic_claimed_region(&s)));
        let mut record = build_record(s.to_string(), &lifted, &a, claim)?;
        record.spot_checks = spot_checks_for(&lifted, &record.region, &a, depth, 0, rules)?;
        records.push(record);
    }
    let summary = summarize(&records, &[]);
    Ok(VerdictReport {
        title: "periodic".to_owned(),
        subgroup: a,
        depth,
        seed: 0,
        records,
        findings: Vec::new(),
        cross_check: None,
        summary,
    })
}

/// Verify the periodic theorem: all 9 two-value specs, computed region vs the
/// |σ0 − σ1| rule, with oracle spot checks at depth 6 under both root rules.
pub fn verify_theorem_periodic() -> Result<VerdictReport, AnalysisError> {
    verify_periodic_at(DEFAULT_ORACLE_DEPTH, &RootConvention::BOTH)
}

/// Verify the weakly periodic catalog at a given depth/seed/root rules:
/// recompute every entry's region, compare against its claim, spot-check by
/// oracle inside and outside, and collect the findings the catalog misses.
pub fn verify_weakly_periodic_at(
    depth: u32,
    seed: u64,
    rules: &[RootConvention],
) -> Result<VerdictReport, AnalysisError> {
    require_sound_depth(depth)?;
    let a = default_subgroup();
    let mut records = Vec::with_capacity(20);
    for entry in catalog() {
        let claim = Some((Some(entry.index), entry.claimed_region.clone()));
        let mut record = build_record(entry.spec.to_string(), &entry.spec, &a, claim)?;
        record.spot_checks = spot_checks_for(&entry.spec, &record.region, &a, depth, seed, rules)?;
        records.push(record);
    }
    let findings = collect_findings(&a, depth, seed, rules)?;
    let summary = summarize(&records, &findings);
    Ok(VerdictReport {
        title: "weakly-periodic".to_owned(),
        subgroup: a,
        depth,
        seed,
        records,
        findings,
        cross_check: None,
        summary,
    })
}

/// Verify the weakly periodic catalog with default depth, seed, and rules.
pub fn verify_theorem_weakly_periodic() -> Result<VerdictReport, AnalysisError> {
    verify_weakly_periodic_at(DEFAULT_ORACLE_DEPTH, 0, &RootConvention::BOTH)
}

/// The exhaustive sweep: every spec × every order-type point × every root
/// rule, oracle verdict vs symbolic region membership.
pub fn cross_check(
    a: &SubgroupDescriptor,
    depth: u32,
    rules: &[RootConvention],
) -> Result<CrossCheckSummary, AnalysisError> {
    require_sound_depth(depth)?;
    let points = order_type_points();
    let mut checks = 0;
    let mut mismatches = Vec::new();
    for s in WeaklyPeriodicSpec::all() {
        let region = ground_state_region(&s, a)?;
        for (label, point) in &points {
            let symbolic = region.contains(point);
            for &rule in rules {
                let oracle = oracle_ground_state_check(&s, point, depth, a, rule)?.is_ground_state;
                checks += 1;
                if oracle != symbolic {
                    mismatches.push(CrossCheckMismatch {
                        spec: s,
                        point_label: (*label).to_owned(),
                        root_rule: rule,
                        symbolic,
                        oracle,
                    });
                }
            }
        }
    }
    Ok(CrossCheckSummary {
        depth,
        checks,
        mismatches,
    })
}

/// Everything: periodic theorem + weakly periodic catalog + findings + the
/// exhaustive symbolic/oracle sweep.
pub fn verify_all(
    depth: u32,
    seed: u64,
    rules: &[RootConvention],
) -> Result<VerdictReport, AnalysisError> {
    let periodic = verify_periodic_at(depth, rules)?;
    let weakly = verify_weakly_periodic_at(depth, seed, rules)?;
    let a = default_subgroup();
    let sweep = cross_check(&a, depth, rules)?;
    let mut records = periodic.records;
    records.extend(weakly.records);
    let findings = weakly.findings;
    let summary = summarize(&records, &findings);
    Ok(VerdictReport {
        title: "all".to_owned(),
        subgroup: a,
        depth,
        seed,
        records,
        findings,
        cross_check: Some(sweep),
        summary,
    })
}
