//! Inference operations as total theory-to-theory tables.
//!
//! An `OperationTable` assigns to every canonical theory of its backend a
//! stronger (or equal) theory. Left and right absorption are built into the
//! representation: entries are theories and the table is a function of the
//! theory alone. Inclusion is validated at construction, so every table is an
//! inference operation; the interesting postulates (Cut, Cautious
//! Monotonicity and the rest) are checked by the `postulates` module.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::backend::{Backend, BackendKind, TheoryId};
use crate::worlds::WorldSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableError {
    WrongLength { expected: usize, got: usize },
    InclusionViolated { theory: WorldSet, image: WorldSet },
    NotCanonical { entry: WorldSet },
    NotEnumerable,
    TooManyTables,
}

impl fmt::Display for TableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableError::WrongLength { expected, got } => {
                write!(f, "table has {got} entries, expected {expected}")
            }
            TableError::InclusionViolated { theory, image } => write!(
                f,
                "inclusion violated: image {:#b} is not a subset of theory {:#b}",
                image.0, theory.0
            ),
            TableError::NotCanonical { entry } => {
                write!(f, "entry {:#b} is not a canonical theory", entry.0)
            }
            TableError::NotEnumerable => write!(f, "backend theories cannot be enumerated"),
            TableError::TooManyTables => write!(f, "too many tables to enumerate"),
        }
    }
}

#[derive(Clone)]
pub struct OperationTable {
    backend: Arc<Backend>,
    entries: Vec<TheoryId>,
}

impl fmt::Debug for OperationTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut map = f.debug_map();
        for t in self.backend.theories() {
            map.entry(&self.backend.theory_mask(t).0, &self.image_mask(t).0);
        }
        map.finish()
    }
}

impl PartialEq for OperationTable {
    fn eq(&self, other: &Self) -> bool {
        self.backend.kind() == other.backend.kind()
            && self.backend.vocabulary() == other.backend.vocabulary()
            && self.entries == other.entries
    }
}

impl Eq for OperationTable {}

impl OperationTable {
    /// Builds a table from per-theory images, validating Inclusion.
    pub fn new(backend: Arc<Backend>, entries: Vec<TheoryId>) -> Result<OperationTable, TableError> {
        let expected = backend
            .try_theory_count()
            .map_err(|_| TableError::NotEnumerable)?;
        if entries.len() != expected {
            return Err(TableError::WrongLength {
                expected,
                got: entries.len(),
            });
        }
        for t in backend.theories() {
            let theory = backend.theory_mask(t);
            let image = backend.theory_mask(entries[t.index()]);
            if !image.subset_of(theory) {
                return Err(TableError::InclusionViolated { theory, image });
            }
        }
        Ok(OperationTable { backend, entries })
    }

    /// Builds a table by evaluating `f` on every theory. Outputs are closed
    /// before validation, so `f` may return any world set.
    pub fn from_fn(
        backend: Arc<Backend>,
        mut f: impl FnMut(&Backend, TheoryId) -> WorldSet,
    ) -> Result<OperationTable, TableError> {
        backend
            .try_theory_count()
            .map_err(|_| TableError::NotEnumerable)?;
        let count = backend.theory_count();
        let mut entries = alloc::vec![TheoryId(0); count];
        for t in backend.theories() {
            entries[t.index()] = backend.close_id(f(&backend, t));
        }
        OperationTable::new(backend, entries)
    }

    /// The consequence operation itself: the identity on theories.
    pub fn cn(backend: Arc<Backend>) -> OperationTable {
        let count = backend.theory_count();
        let entries = (0..count as u32).map(TheoryId).collect();
        OperationTable { backend, entries }
    }

    /// The operation that maps every theory strictly stronger than `Cn(∅)` to
    /// the inconsistent theory and fixes `Cn(∅)`. It is monotonic and
    /// cumulative but not distributive.
    pub fn all_or_nothing(backend: Arc<Backend>) -> OperationTable {
        OperationTable::from_fn(backend, |b, t| {
            if b.theory_mask(t) == b.cn_empty() {
                b.cn_empty()
            } else {
                b.inconsistent()
            }
        })
        .expect("images are subsets by construction")
    }

    pub fn backend(&self) -> &Arc<Backend> {
        &self.backend
    }

    pub fn entries(&self) -> &[TheoryId] {
        &self.entries
    }

    pub fn image(&self, t: TheoryId) -> TheoryId {
        self.entries[t.index()]
    }

    pub fn image_mask(&self, t: TheoryId) -> WorldSet {
        self.backend.theory_mask(self.image(t))
    }

    /// Image of the theory determined by an arbitrary world set.
    pub fn image_of_set(&self, mask: WorldSet) -> WorldSet {
        self.image_mask(self.backend.close_id(mask))
    }

    /// `C`-consistency of a theory: its image is not the whole language.
    pub fn consistent(&self, t: TheoryId) -> bool {
        self.image_mask(t) != self.backend.inconsistent()
    }

    /// Is the operation monotonic: `X ⊆ Y ⟹ C(X) ⊆ C(Y)`? On world sets the
    /// hypothesis reads `mask(Y) ⊆ mask(X)`.
    pub fn is_monotonic(&self) -> bool {
        self.backend.theories().all(|x| {
            let mx = self.backend.theory_mask(x);
            let cx = self.image_mask(x);
            self.backend
                .theories()
                .filter(|&y| self.backend.theory_mask(y).subset_of(mx))
                .all(|y| self.image_mask(y).subset_of(cx))
        })
    }

    /// Id of `Cn(X ∪ Y)` for two theories.
    pub fn union_id(&self, x: TheoryId, y: TheoryId) -> TheoryId {
        self.backend
            .close_id(self.backend.theory_mask(x) & self.backend.theory_mask(y))
    }

    /// Id of `X ∩ Y` (intersection of theories as formula sets).
    pub fn intersect_id(&self, x: TheoryId, y: TheoryId) -> TheoryId {
        self.backend
            .close_id(self.backend.theory_mask(x) | self.backend.theory_mask(y))
    }

    /// `X ⪯_C Y`: X is at least as expected as Y, i.e. `X ⊆ C(X ∩ Y)`.
    pub fn preceq(&self, x: TheoryId, y: TheoryId) -> bool {
        self.image_mask(self.intersect_id(x, y))
            .subset_of(self.backend.theory_mask(x))
    }

    /// `X ≺_C Y`: X is C-consistent and Y is inconsistent with `C(X ∩ Y)`.
    pub fn prec(&self, x: TheoryId, y: TheoryId) -> bool {
        self.consistent(x)
            && !self
                .backend
                .consistent_with(self.backend.theory_mask(y), self.image_mask(self.intersect_id(x, y)))
    }
}

/// Enumerates every Inclusion-respecting table over the backend, in odometer
/// order (entry choices ascend per theory, earlier theories vary fastest).
/// Refuses when the total count exceeds `2^20`.
pub fn enumerate_all(backend: &Arc<Backend>) -> Result<TableEnumerator, TableError> {
    backend
        .try_theory_count()
        .map_err(|_| TableError::NotEnumerable)?;
    let mut choices: Vec<Vec<TheoryId>> = Vec::with_capacity(backend.theory_count());
    for _ in 0..backend.theory_count() {
        choices.push(Vec::new());
    }
    for t in backend.theories() {
        let mask = backend.theory_mask(t);
        let subs = canonical_subtheories(backend, mask);
        choices[t.index()] = subs;
    }
    let mut total: u128 = 1;
    for c in &choices {
        total = total.saturating_mul(c.len() as u128);
        if total > 1 << 20 {
            return Err(TableError::TooManyTables);
        }
    }
    Ok(TableEnumerator {
        backend: backend.clone(),
        choices,
        cursor: Vec::new(),
        done: false,
    })
}

/// Canonical theories at least as strong as the given one (world subsets),
/// mask ascending.
pub fn canonical_subtheories(backend: &Backend, mask: WorldSet) -> Vec<TheoryId> {
    match backend.kind() {
        BackendKind::Classical => {
            let m = mask.0;
            let mut subs = Vec::with_capacity(1 << m.count_ones());
            let mut s: u64 = 0;
            loop {
                subs.push(TheoryId(s as u32));
                if s == m {
                    break;
                }
                s = (s.wrapping_sub(m)) & m;
            }
            subs
        }
        BackendKind::Identity => backend
            .theories()
            .filter(|&t| backend.theory_mask(t).subset_of(mask))
            .collect(),
    }
}

/// Canonical theories at least as weak as the given one (world supersets),
/// mask ascending.
pub fn canonical_supertheories(backend: &Backend, mask: WorldSet) -> Vec<TheoryId> {
    match backend.kind() {
        BackendKind::Classical => {
            let full = backend.cn_empty().0;
            let m = mask.0;
            let free = full & !m;
            let mut sups = Vec::with_capacity(1 << free.count_ones());
            let mut s: u64 = 0;
            loop {
                sups.push(TheoryId((s | m) as u32));
                if s == free {
                    break;
                }
                s = (s.wrapping_sub(free)) & free;
            }
            sups.sort_unstable();
            sups
        }
        BackendKind::Identity => backend
            .theories()
            .filter(|&t| mask.subset_of(backend.theory_mask(t)))
            .collect(),
    }
}

pub struct TableEnumerator {
    backend: Arc<Backend>,
    choices: Vec<Vec<TheoryId>>,
    cursor: Vec<usize>,
    done: bool,
}

impl Iterator for TableEnumerator {
    type Item = OperationTable;

    fn next(&mut self) -> Option<OperationTable> {
        if self.done {
            return None;
        }
        if self.cursor.is_empty() {
            self.cursor = alloc::vec![0; self.choices.len()];
        } else {
            let mut i = 0;
            loop {
                if i == self.cursor.len() {
                    self.done = true;
                    return None;
                }
                self.cursor[i] += 1;
                if self.cursor[i] < self.choices[i].len() {
                    break;
                }
                self.cursor[i] = 0;
                i += 1;
            }
        }
        let entries: Vec<TheoryId> = self
            .cursor
            .iter()
            .zip(&self.choices)
            .map(|(&c, opts)| opts[c])
            .collect();
        Some(OperationTable {
            backend: self.backend.clone(),
            entries,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::worlds::Vocabulary;

    fn one_atom() -> Arc<Backend> {
        Backend::classical(Vocabulary::new(["p"]).unwrap())
    }

    #[test]
    fn sixteen_tables_over_one_atom() {
        let tables: Vec<_> = enumerate_all(&one_atom()).unwrap().collect();
        assert_eq!(tables.len(), 16);
        // 1 choice for L, 2 each for the two complete theories, 4 for Cn(∅)
        let cn = OperationTable::cn(one_atom());
        assert!(tables.contains(&cn));
    }

    #[test]
    fn inclusion_is_enforced() {
        let b = one_atom();
        // C(Th(p)) = Th(∅) violates Inclusion and is rejected up front
        let bad = alloc::vec![TheoryId(0), TheoryId(1), TheoryId(3), TheoryId(3)];
        assert!(matches!(
            OperationTable::new(b, bad),
            Err(TableError::InclusionViolated { .. })
        ));
    }

    #[test]
    fn sub_and_supertheories_ascend() {
        let b = one_atom();
        let subs = canonical_subtheories(&b, WorldSet(0b11));
        assert_eq!(subs.len(), 4);
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
        let sups = canonical_supertheories(&b, WorldSet(0b01));
        assert_eq!(
            sups.iter().map(|t| t.0).collect::<Vec<_>>(),
            alloc::vec![1, 3]
        );
    }

    #[test]
    fn all_or_nothing_shape() {
        let b = one_atom();
        let op = OperationTable::all_or_nothing(b.clone());
        assert_eq!(op.image_mask(TheoryId(3)), WorldSet(0b11));
        assert_eq!(op.image_mask(TheoryId(1)), WorldSet::EMPTY);
        assert_eq!(op.image_mask(TheoryId(2)), WorldSet::EMPTY);
        assert!(op.is_monotonic());
    }
}
