//! Reduced words in `G_k`, the free product of k+1 cyclic groups of order two.
//!
//! Every generator is an involution (`a_j a_j = e`), so a word is reduced
//! exactly when no two adjacent letters are equal, and each group element has
//! a unique reduced form. Reduced words are in bijection with the vertices of
//! the Cayley tree of order k: right multiplication by a generator steps to a
//! neighbor, dropping the last letter steps toward the root `e`, and left
//! multiplication by any fixed word is a tree automorphism.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Errors from word construction, parsing, and subgroup descriptors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("generator index {index} out of range 1..={max}")]
    InvalidGenerator { index: u8, max: u8 },
    #[error("the identity word has no parent")]
    RootHasNoParent,
    #[error("malformed word {input:?}: expected \"e\" or dot-separated generator indices like \"1.2.1\"")]
    MalformedWord { input: String },
    #[error("word {input:?} is not reduced (adjacent equal letters)")]
    UnreducedWord { input: String },
    #[error("subgroup index set must be a nonempty subset of 1..={max}")]
    InvalidSubgroup { max: u8 },
}

/// A reduced word over the generators `1..=k+1`; the empty word is `e`.
///
/// Invariant: no two adjacent letters are equal.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupWord {
    letters: Vec<u8>,
}

impl GroupWord {
    /// The identity `e`, the root of the tree.
    pub fn identity() -> Self {
        GroupWord {
            letters: Vec::new(),
        }
    }

    /// Reduce an arbitrary letter sequence by cancelling adjacent equal
    /// letters until none remain. Idempotent; validates every index.
    pub fn reduce(letters: &[u8], k: u8) -> Result<Self, GroupError> {
        let max = k + 1;
        let mut out: Vec<u8> = Vec::with_capacity(letters.len());
        for &l in letters {
            if l == 0 || l > max {
                return Err(GroupError::InvalidGenerator { index: l, max });
            }
            // A single left-to-right pass with a stack handles nested
            // cancellations: popping may expose a new adjacent equal pair.
            if out.last() == Some(&l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Ok(GroupWord { letters: out })
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    /// Word length = distance from the root (the vertex depth).
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// The unique neighbor closer to the root: the word minus its last letter.
    pub fn parent(&self) -> Result<Self, GroupError> {
        if self.letters.is_empty() {
            return Err(GroupError::RootHasNoParent);
        }
        Ok(GroupWord {
            letters: self.letters[..self.letters.len() - 1].to_vec(),
        })
    }

    /// Right-multiply by generator `j`: cancels against the last letter or
    /// appends. Assumes `j` is a valid generator index.
    pub(crate) fn step(&self, j: u8) -> Self {
        let mut letters = self.letters.clone();
        if letters.last() == Some(&j) {
            letters.pop();
        } else {
            letters.push(j);
        }
        GroupWord { letters }
    }

    /// Group product of two reduced words (concatenate, then cancel across
    /// the seam). Each generator is its own inverse, so the inverse of a
    /// word is its reversal.
    pub fn multiply(&self, rhs: &GroupWord) -> Self {
        let mut out = self.letters.clone();
        for &l in &rhs.letters {
            if out.last() == Some(&l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        GroupWord { letters: out }
    }

    /// Parse the textual form: `"e"` or dot-separated indices like `"1.2.1"`.
    /// Only reduced words are accepted, so parse/print round-trips bit-exact.
    pub fn parse(input: &str, k: u8) -> Result<Self, GroupError> {
        if input == "e" {
            return Ok(Self::identity());
        }
        let mut letters = Vec::new();
        for part in input.split('.') {
            let idx: u8 = part.parse().map_err(|_| GroupError::MalformedWord {
                input: input.to_owned(),
            })?;
            letters.push(idx);
        }
        let word = Self::reduce(&letters, k)?;
        if word.letters != letters {
            return Err(GroupError::UnreducedWord {
                input: input.to_owned(),
            });
        }
        Ok(word)
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// The k+1 neighbors of `x`, ordered by generator index. Exactly one of them
/// (the parent) is shorter than `x` when `x ≠ e`.
pub fn neighbors(x: &GroupWord, k: u8) -> Vec<GroupWord> {
    (1..=k + 1).map(|j| x.step(j)).collect()
}

/// Left shift by `g`. Left multiplication commutes with the right-generator
/// steps that define edges, so this is a graph automorphism.
pub fn translate_left(g: &GroupWord, x: &GroupWord) -> GroupWord {
    g.multiply(x)
}

/// Descriptor of the index-two normal subgroup `H_A`: the words containing an
/// even number of letters from `A`. Coset 0 is `H_A` itself (`H_0`), coset 1
/// its complement (`H_1`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SubgroupDescriptor {
    members: BTreeSet<u8>,
}

impl SubgroupDescriptor {
    pub fn new(indices: impl IntoIterator<Item = u8>, k: u8) -> Result<Self, GroupError> {
        let members: BTreeSet<u8> = indices.into_iter().collect();
        let max = k + 1;
        if members.is_empty() || members.iter().any(|&j| j == 0 || j > max) {
            return Err(GroupError::InvalidSubgroup { max });
        }
        Ok(SubgroupDescriptor { members })
    }

    /// The one-generator descriptor `A = {j}`.
    pub fn single(j: u8, k: u8) -> Result<Self, GroupError> {
        Self::new([j], k)
    }

    pub fn members(&self) -> &BTreeSet<u8> {
        &self.members
    }

    pub fn is_single(&self) -> bool {
        self.members.len() == 1
    }

    /// Coset index of `x`: the parity of the number of letters from `A`.
    /// Multiplying by `a_j` flips the coset exactly when `j ∈ A`.
    pub fn coset(&self, x: &GroupWord) -> u8 {
        (x.letters
            .iter()
            .filter(|l| self.members.contains(l))
            .count()
            % 2) as u8
    }
}

impl fmt::Display for SubgroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, j) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{j}")?;
        }
        f.write_str("}")
    }
}
