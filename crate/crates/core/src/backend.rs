//! Logical backends: a vocabulary together with a consequence operation.
//!
//! Two backends are provided. The `Classical` backend interprets formulas by
//! truth tables; every world set is definable, so the canonical theories are
//! exactly the `2^(2^n)` world sets and closure is the identity. The
//! `Identity` backend takes consequence to be the identity on sets of atoms:
//! formulas are bare atoms, a world is a subset of atoms, and `w ⊨ a` iff
//! `a ∈ w`. Its theories are the up-sets of single atom sets, so closure is a
//! real operation there. Both backends are admissible; only the classical one
//! carries connectives.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::worlds::{Vocabulary, World, WorldSet, MAX_EXHAUSTIVE_ATOMS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BackendKind {
    Classical,
    Identity,
}

impl fmt::Display for BackendKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BackendKind::Classical => write!(f, "classical"),
            BackendKind::Identity => write!(f, "identity"),
        }
    }
}

/// Which connectives the backend's language carries, plus admissibility
/// (distributivity of the consequence operation itself over theory
/// intersections).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Capabilities {
    pub has_conjunction: bool,
    pub has_disjunction: bool,
    pub has_implication: bool,
    pub has_classical_negation: bool,
    pub has_contradiction: bool,
    pub is_admissible: bool,
}

/// Index of a canonical theory in its backend.
///
/// For the classical backend the id *is* the world mask; for the identity
/// backend it is the atom mask generating the theory.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TheoryId(pub u32);

impl TheoryId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BackendError {
    /// The vocabulary is too large to enumerate all theories.
    NotEnumerable { atoms: usize },
}

impl fmt::Display for BackendError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BackendError::NotEnumerable { atoms } => write!(
                f,
                "cannot enumerate theories over {atoms} atoms (exhaustive modes need at most {MAX_EXHAUSTIVE_ATOMS})"
            ),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Backend {
    kind: BackendKind,
    vocab: Vocabulary,
    /// Identity backend only: world set of each theory, indexed by atom mask.
    identity_theories: Vec<WorldSet>,
    /// Identity backend only: theory ids sorted by world mask ascending.
    identity_order: Vec<TheoryId>,
}

impl Backend {
    pub fn classical(vocab: Vocabulary) -> Arc<Backend> {
        Arc::new(Backend {
            kind: BackendKind::Classical,
            vocab,
            identity_theories: Vec::new(),
            identity_order: Vec::new(),
        })
    }

    pub fn identity(vocab: Vocabulary) -> Arc<Backend> {
        let n = vocab.atom_count();
        let mut theories = Vec::with_capacity(1 << n);
        for atom_mask in 0..1u32 << n {
            let mut set = WorldSet::EMPTY;
            for w in 0..vocab.world_count() as World {
                if atom_mask & !(w as u32) == 0 {
                    set.insert(w);
                }
            }
            theories.push(set);
        }
        let mut order: Vec<TheoryId> = (0..theories.len() as u32).map(TheoryId).collect();
        order.sort_by_key(|id| theories[id.index()]);
        Arc::new(Backend {
            kind: BackendKind::Identity,
            vocab,
            identity_theories: theories,
            identity_order: order,
        })
    }

    pub fn new(kind: BackendKind, vocab: Vocabulary) -> Arc<Backend> {
        match kind {
            BackendKind::Classical => Backend::classical(vocab),
            BackendKind::Identity => Backend::identity(vocab),
        }
    }

    pub fn kind(&self) -> BackendKind {
        self.kind
    }

    pub fn vocabulary(&self) -> &Vocabulary {
        &self.vocab
    }

    pub fn capabilities(&self) -> Capabilities {
        match self.kind {
            BackendKind::Classical => Capabilities {
                has_conjunction: true,
                has_disjunction: true,
                has_implication: true,
                has_classical_negation: true,
                has_contradiction: true,
                is_admissible: true,
            },
            BackendKind::Identity => Capabilities {
                has_conjunction: false,
                has_disjunction: false,
                has_implication: false,
                has_classical_negation: false,
                has_contradiction: false,
                is_admissible: true,
            },
        }
    }

    /// Whether all theories of this backend can be listed.
    pub fn is_enumerable(&self) -> bool {
        match self.kind {
            BackendKind::Classical => self.vocab.atom_count() <= MAX_EXHAUSTIVE_ATOMS,
            BackendKind::Identity => true,
        }
    }

    pub fn try_theory_count(&self) -> Result<usize, BackendError> {
        if self.is_enumerable() {
            Ok(match self.kind {
                BackendKind::Classical => 1usize << self.vocab.world_count(),
                BackendKind::Identity => self.identity_theories.len(),
            })
        } else {
            Err(BackendError::NotEnumerable {
                atoms: self.vocab.atom_count(),
            })
        }
    }

    /// Number of canonical theories. Panics when not enumerable; callers that
    /// accept arbitrary vocabularies go through [`Backend::try_theory_count`].
    pub fn theory_count(&self) -> usize {
        self.try_theory_count().expect("backend not enumerable")
    }

    /// Theory ids in canonical order: world mask ascending.
    pub fn theories(&self) -> impl Iterator<Item = TheoryId> + '_ {
        let count = self.theory_count();
        (0..count).map(move |i| match self.kind {
            BackendKind::Classical => TheoryId(i as u32),
            BackendKind::Identity => self.identity_order[i],
        })
    }

    pub fn theory_mask(&self, id: TheoryId) -> WorldSet {
        match self.kind {
            BackendKind::Classical => WorldSet(id.0 as u64),
            BackendKind::Identity => self.identity_theories[id.index()],
        }
    }

    /// Id of a canonical theory mask. Debug-asserts canonicity.
    pub fn theory_id(&self, mask: WorldSet) -> TheoryId {
        let id = self.close_id(mask);
        debug_assert_eq!(self.theory_mask(id), mask, "mask is not a canonical theory");
        id
    }

    /// `Mod(Th(S))`: the world set of the theory determined by `S`.
    pub fn close(&self, mask: WorldSet) -> WorldSet {
        match self.kind {
            BackendKind::Classical => mask,
            BackendKind::Identity => self.identity_theories[self.close_atom_mask(mask) as usize],
        }
    }

    /// Id of the theory determined by an arbitrary world set.
    pub fn close_id(&self, mask: WorldSet) -> TheoryId {
        match self.kind {
            BackendKind::Classical => TheoryId(mask.0 as u32),
            BackendKind::Identity => TheoryId(self.close_atom_mask(mask)),
        }
    }

    fn close_atom_mask(&self, mask: WorldSet) -> u32 {
        let full = (1u32 << self.vocab.atom_count()) - 1;
        if mask.is_empty() {
            return full;
        }
        mask.iter().fold(full, |acc, w| acc & w as u32)
    }

    /// World set of `Cn(∅)`, the weakest theory.
    pub fn cn_empty(&self) -> WorldSet {
        self.vocab.all_worlds()
    }

    /// World set of the inconsistent theory (the whole language).
    pub fn inconsistent(&self) -> WorldSet {
        match self.kind {
            BackendKind::Classical => WorldSet::EMPTY,
            BackendKind::Identity => WorldSet::singleton(self.vocab.world_count() as World - 1),
        }
    }

    /// Whether the theory with the given world set is consistent.
    pub fn theory_consistent(&self, mask: WorldSet) -> bool {
        self.close(mask) != self.inconsistent()
    }

    /// Whether `Cn(S ∪ T)` is consistent, for theories given by world sets.
    pub fn consistent_with(&self, a: WorldSet, b: WorldSet) -> bool {
        self.theory_consistent(a & b)
    }

    /// Union of formula sets: intersection of world sets. Canonical masks
    /// stay canonical under this on both backends.
    pub fn union_theories(&self, a: WorldSet, b: WorldSet) -> WorldSet {
        a & b
    }

    /// Intersection of theories as formula sets: the theory of the union of
    /// the world sets.
    pub fn intersect_theories(&self, a: WorldSet, b: WorldSet) -> WorldSet {
        self.close(a | b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idb() -> Arc<Backend> {
        Backend::identity(Vocabulary::new(["a", "b"]).unwrap())
    }

    #[test]
    fn classical_theories_are_all_masks() {
        let b = Backend::classical(Vocabulary::new(["p"]).unwrap());
        let masks: Vec<WorldSet> = b.theories().map(|t| b.theory_mask(t)).collect();
        assert_eq!(
            masks,
            alloc::vec![WorldSet(0), WorldSet(1), WorldSet(2), WorldSet(3)]
        );
        assert_eq!(b.close(WorldSet(0b10)), WorldSet(0b10));
        assert_eq!(b.inconsistent(), WorldSet::EMPTY);
    }

    #[test]
    fn identity_theories_are_upsets() {
        let b = idb();
        // atom mask 0 -> all four worlds, atom mask 3 -> only world 3
        assert_eq!(b.theory_mask(TheoryId(0)), WorldSet(0b1111));
        assert_eq!(b.theory_mask(TheoryId(1)), WorldSet(0b1010));
        assert_eq!(b.theory_mask(TheoryId(2)), WorldSet(0b1100));
        assert_eq!(b.theory_mask(TheoryId(3)), WorldSet(0b1000));
        assert_eq!(b.inconsistent(), WorldSet(0b1000));
        assert!(!b.theory_consistent(WorldSet(0b1000)));
        assert!(b.theory_consistent(WorldSet(0b1010)));
    }

    #[test]
    fn identity_closure_saturates_unions() {
        let b = idb();
        // up({a}) ∪ up({b}) is not an up-set of a single atom set; its theory
        // is generated by {a} ∩ {b} = ∅.
        let union = b.theory_mask(TheoryId(1)) | b.theory_mask(TheoryId(2));
        assert_eq!(b.close(union), b.cn_empty());
        assert_eq!(
            b.intersect_theories(b.theory_mask(TheoryId(1)), b.theory_mask(TheoryId(2))),
            b.cn_empty()
        );
        // the empty world set closes to the inconsistent theory
        assert_eq!(b.close(WorldSet::EMPTY), b.inconsistent());
    }

    #[test]
    fn identity_order_is_mask_ascending() {
        let b = idb();
        let masks: Vec<WorldSet> = b.theories().map(|t| b.theory_mask(t)).collect();
        for pair in masks.windows(2) {
            assert!(pair[0] < pair[1]);
        }
    }

    #[test]
    fn classical_five_atoms_not_enumerable() {
        let b = Backend::classical(Vocabulary::new(["a", "b", "c", "d", "e"]).unwrap());
        assert!(!b.is_enumerable());
        assert!(b.try_theory_count().is_err());
        // but per-theory operations still work
        assert!(b.theory_consistent(WorldSet(1)));
    }
}
