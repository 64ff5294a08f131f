//! Finite truncations of the Cayley tree and local coset patterns.
//!
//! `V_n` is the ball of radius n around the root in the word metric. A *local
//! pattern* records the `H_A`-cosets seen around a vertex of depth ≥ 2:
//! grandparent, parent, the vertex itself, and its two children. Which
//! patterns actually occur is a fact about the subgroup, not an assumption —
//! [`realizable_patterns`] derives the set by exhaustively scanning a finite
//! tree, and everything downstream (class sets, ground-state regions) is
//! quantified over exactly that set.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::{LazyLock, Mutex};

use thiserror::Error;

use crate::group_words::{neighbors, GroupWord, SubgroupDescriptor};

/// Hard cap on materialized tree depth (k = 2 gives 3·2^16 ≈ 2·10^5 vertices).
pub const MAX_DEPTH: u32 = 16;

/// Centers up to this depth are scanned (children one level deeper) when
/// deriving the realizable pattern set. Stability of the result from depth 4
/// onward is asserted by tests.
pub const PATTERN_SCAN_DEPTH: u32 = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("depth {requested} exceeds the configured cap {cap}")]
    DepthCap { requested: u32, cap: u32 },
    #[error("no interior vertices at depth {n}: need n >= 3")]
    EmptyInterior { n: u32 },
    #[error("local-pattern analysis supports only |A| = 1, k = 2 (got |A| = {a_len}, k = {k})")]
    UnsupportedRegime { a_len: usize, k: u8 },
}

/// All reduced words of length ≤ n, depth-major and lexicographic within each
/// depth. |V_n| = 1 + (k+1)(k^n − 1)/(k − 1) for k ≥ 2.
pub fn vertices_up_to(n: u32, k: u8) -> Result<Vec<GroupWord>, TreeError> {
    if n > MAX_DEPTH {
        return Err(TreeError::DepthCap {
            requested: n,
            cap: MAX_DEPTH,
        });
    }
    let mut all = vec![GroupWord::identity()];
    let mut level = vec![GroupWord::identity()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(level.len() * k as usize);
        for v in &level {
            for w in neighbors(v, k) {
                // Keep only the extensions; the one shorter neighbor is the parent.
                if w.len() == v.len() + 1 {
                    next.push(w);
                }
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    Ok(all)
}

/// A vertex together with its k+1 neighbors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ball {
    pub center: GroupWord,
    pub neighbor_list: Vec<GroupWord>,
}

/// The unit ball around `x`: the only edges inside it are center–neighbor.
pub fn unit_ball(x: &GroupWord, k: u8) -> Ball {
    Ball {
        center: x.clone(),
        neighbor_list: neighbors(x, k),
    }
}

/// The valid centers for energy checks on `V_n`: vertices with 2 ≤ |x| ≤ n−1,
/// so the grandparent exists and every neighbor stays inside `V_n`.
pub fn interior_centers(n: u32, k: u8) -> Result<Vec<GroupWord>, TreeError> {
    if n < 3 {
        return Err(TreeError::EmptyInterior { n });
    }
    Ok(vertices_up_to(n, k)?
        .into_iter()
        .filter(|x| x.len() >= 2 && (x.len() as u32) < n)
        .collect())
}

/// The `H_A`-cosets around a vertex of depth ≥ 2: grandparent, parent, the
/// vertex, and the multiset of its two children (sorted pair).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LocalPattern {
    pub grandparent: u8,
    pub parent: u8,
    pub center: u8,
    pub children: [u8; 2],
}

impl fmt::Display for LocalPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{}|{{{},{}}})",
            self.grandparent, self.parent, self.center, self.children[0], self.children[1]
        )
    }
}

fn require_pattern_regime(a: &SubgroupDescriptor, k: u8) -> Result<(), TreeError> {
    if k != 2 || !a.is_single() {
        return Err(TreeError::UnsupportedRegime {
            a_len: a.members().len(),
            k,
        });
    }
    Ok(())
}

/// The pattern realized at `x`, or `None` when `x` is too shallow (depth < 2).
/// Children are the two neighbors other than the parent; their cosets are
/// computed algebraically, so `x` need not come from a materialized tree.
pub fn pattern_at(
    x: &GroupWord,
    a: &SubgroupDescriptor,
    k: u8,
) -> Result<Option<LocalPattern>, TreeError> {
    require_pattern_regime(a, k)?;
    let Ok(parent) = x.parent() else {
        return Ok(None);
    };
    let Ok(grandparent) = parent.parent() else {
        return Ok(None);
    };
    let mut children: Vec<u8> = neighbors(x, k)
        .into_iter()
        .filter(|y| *y != parent)
        .map(|y| a.coset(&y))
        .collect();
    children.sort_unstable();
    Ok(Some(LocalPattern {
        grandparent: a.coset(&grandparent),
        parent: a.coset(&parent),
        center: a.coset(x),
        children: [children[0], children[1]],
    }))
}

/// Patterns realized by centers with 2 ≤ |x| ≤ `max_center_depth`.
pub fn realizable_patterns_at_depth(
    a: &SubgroupDescriptor,
    k: u8,
    max_center_depth: u32,
) -> Result<BTreeSet<LocalPattern>, TreeError> {
    require_pattern_regime(a, k)?;
    let mut out = BTreeSet::new();
    for x in vertices_up_to(max_center_depth, k)? {
        if let Some(pat) = pattern_at(&x, a, k)? {
            out.insert(pat);
        }
    }
    Ok(out)
}

/// The first (depth-major) witness vertex for each realizable pattern.
pub fn pattern_witnesses(
    a: &SubgroupDescriptor,
    k: u8,
    max_center_depth: u32,
) -> Result<BTreeMap<LocalPattern, GroupWord>, TreeError> {
    require_pattern_regime(a, k)?;
    let mut out: BTreeMap<LocalPattern, GroupWord> = BTreeMap::new();
    for x in vertices_up_to(max_center_depth, k)? {
        if let Some(pat) = pattern_at(&x, a, k)? {
            out.entry(pat).or_insert(x);
        }
    }
    Ok(out)
}

static PATTERN_CACHE: LazyLock<Mutex<BTreeMap<u8, BTreeSet<LocalPattern>>>> =
    LazyLock::new(|| Mutex::new(BTreeMap::new()));

/// The exact set of local patterns realized somewhere in the infinite tree,
/// derived by scanning centers up to [`PATTERN_SCAN_DEPTH`] and cached per
/// subgroup. Supported regime: |A| = 1, k = 2.
pub fn realizable_patterns(
    a: &SubgroupDescriptor,
    k: u8,
) -> Result<BTreeSet<LocalPattern>, TreeError> {
    require_pattern_regime(a, k)?;
    let j = *a.members().iter().next().expect("|A| = 1");
    let mut cache = PATTERN_CACHE.lock().expect("pattern cache poisoned");
    if let Some(hit) = cache.get(&j) {
        return Ok(hit.clone());
    }
    let scanned = realizable_patterns_at_depth(a, k, PATTERN_SCAN_DEPTH)?;
    cache.insert(j, scanned.clone());
    Ok(scanned)
}
