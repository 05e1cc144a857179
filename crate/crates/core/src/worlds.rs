//! Vocabularies, worlds and world sets.
//!
//! A vocabulary fixes an ordered list of atom names. A world is a valuation
//! of the atoms, identified with the integer whose bit `i` gives the truth
//! value of atom `i`. A [`WorldSet`] is a subset of the `2^n` worlds, stored
//! as a bitmask; bit `w` is set iff world `w` belongs to the set.
//!
//! World sets double as the semantic representation of theories: a theory is
//! the set of its models, a stronger theory has a smaller world set, the
//! inconsistent theory (classically) is the empty set and `Cn(∅)` is the full
//! set. Note the direction reversal: for theories `S ⊆ T` as formula sets iff
//! `worlds(T) ⊆ worlds(S)`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{BitAnd, BitOr, Not as _};

/// Hard cap on vocabulary size so that a world set fits in a `u64`.
///
/// Exhaustive sweeps over all theories additionally require at most
/// [`MAX_EXHAUSTIVE_ATOMS`] atoms; only per-theory queries (Poole inference)
/// are available beyond that.
pub const MAX_ATOMS: usize = 6;

/// Largest vocabulary for which all `2^(2^n)` theories may be enumerated.
pub const MAX_EXHAUSTIVE_ATOMS: usize = 4;

/// A propositional valuation, identified by its atom bitmask.
pub type World = u8;

/// A set of worlds over some vocabulary, as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct WorldSet(pub u64);

impl WorldSet {
    pub const EMPTY: WorldSet = WorldSet(0);

    pub fn singleton(w: World) -> WorldSet {
        WorldSet(1u64 << w)
    }

    pub fn contains(self, w: World) -> bool {
        self.0 >> w & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// World-set inclusion. As theories, `self.subset_of(t)` says `self` is
    /// the *stronger* theory.
    pub fn subset_of(self, other: WorldSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn insert(&mut self, w: World) {
        self.0 |= 1u64 << w;
    }

    /// Worlds in ascending index order.
    pub fn iter(self) -> impl Iterator<Item = World> {
        let mut rest = self.0;
        core::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let w = rest.trailing_zeros() as World;
                rest &= rest - 1;
                Some(w)
            }
        })
    }
}

impl BitAnd for WorldSet {
    type Output = WorldSet;
    fn bitand(self, rhs: WorldSet) -> WorldSet {
        WorldSet(self.0 & rhs.0)
    }
}

impl BitOr for WorldSet {
    type Output = WorldSet;
    fn bitor(self, rhs: WorldSet) -> WorldSet {
        WorldSet(self.0 | rhs.0)
    }
}

impl fmt::Debug for WorldSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WorldSet({:#b})", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VocabularyError {
    Empty,
    TooManyAtoms(usize),
    BadName(String),
    Duplicate(String),
}

impl fmt::Display for VocabularyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VocabularyError::Empty => write!(f, "vocabulary must contain at least one atom"),
            VocabularyError::TooManyAtoms(n) => {
                write!(f, "vocabulary has {n} atoms, the maximum is {MAX_ATOMS}")
            }
            VocabularyError::BadName(name) => write!(f, "invalid atom name `{name}`"),
            VocabularyError::Duplicate(name) => write!(f, "duplicate atom `{name}`"),
        }
    }
}

/// An ordered list of distinct atom names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vocabulary {
    atoms: Vec<String>,
}

fn valid_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    let head_ok = chars
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_');
    head_ok && chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && name != "false"
}

impl Vocabulary {
    pub fn new<I, S>(atoms: I) -> Result<Vocabulary, VocabularyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let atoms: Vec<String> = atoms.into_iter().map(Into::into).collect();
        if atoms.is_empty() {
            return Err(VocabularyError::Empty);
        }
        if atoms.len() > MAX_ATOMS {
            return Err(VocabularyError::TooManyAtoms(atoms.len()));
        }
        for (i, a) in atoms.iter().enumerate() {
            if !valid_atom_name(a) {
                return Err(VocabularyError::BadName(a.clone()));
            }
            if atoms[..i].contains(a) {
                return Err(VocabularyError::Duplicate(a.clone()));
            }
        }
        Ok(Vocabulary { atoms })
    }

    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn atom_index(&self, name: &str) -> Option<usize> {
        self.atoms.iter().position(|a| a == name)
    }

    pub fn atom_name(&self, index: usize) -> &str {
        &self.atoms[index]
    }

    pub fn world_count(&self) -> usize {
        1usize << self.atoms.len()
    }

    /// All worlds of the vocabulary.
    pub fn all_worlds(&self) -> WorldSet {
        match self.world_count() {
            64 => WorldSet(u64::MAX),
            n => WorldSet((1u64 << n) - 1),
        }
    }

    /// Worlds in which atom `index` is true.
    pub fn atom_worlds(&self, index: usize) -> WorldSet {
        debug_assert!(index < self.atoms.len());
        let mut set = WorldSet::EMPTY;
        for w in 0..self.world_count() as World {
            if w >> index & 1 == 1 {
                set.insert(w);
            }
        }
        set
    }

    /// Complement within this vocabulary's universe.
    pub fn complement(&self, set: WorldSet) -> WorldSet {
        WorldSet(set.0.not()) & self.all_worlds()
    }

    /// Renders a world as a truth-value string in atom order, e.g. `pq=10`.
    pub fn world_name(&self, w: World) -> String {
        let mut s = String::new();
        for i in 0..self.atoms.len() {
            s.push(if w >> i & 1 == 1 { '1' } else { '0' });
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vocabulary_rejects_bad_input() {
        assert_eq!(
            Vocabulary::new(Vec::<String>::new()),
            Err(VocabularyError::Empty)
        );
        assert!(matches!(
            Vocabulary::new(["p", "p"]),
            Err(VocabularyError::Duplicate(_))
        ));
        assert!(matches!(
            Vocabulary::new(["1p"]),
            Err(VocabularyError::BadName(_))
        ));
        assert!(matches!(
            Vocabulary::new(["false"]),
            Err(VocabularyError::BadName(_))
        ));
        assert!(matches!(
            Vocabulary::new(["a", "b", "c", "d", "e", "f", "g"]),
            Err(VocabularyError::TooManyAtoms(7))
        ));
    }

    #[test]
    fn atom_worlds_matches_bit_convention() {
        let v = Vocabulary::new(["p", "q"]).unwrap();
        // worlds are pq-bitmasks: 0=00, 1=p, 2=q, 3=pq
        assert_eq!(v.atom_worlds(0), WorldSet(0b1010));
        assert_eq!(v.atom_worlds(1), WorldSet(0b1100));
        assert_eq!(v.all_worlds(), WorldSet(0b1111));
    }

    #[test]
    fn world_set_iteration_ascending() {
        let ws = WorldSet(0b10110);
        let got: Vec<World> = ws.iter().collect();
        assert_eq!(got, alloc::vec![1, 2, 4]);
        assert_eq!(ws.len(), 3);
    }

    #[test]
    fn six_atom_universe_fits() {
        let v = Vocabulary::new(["a", "b", "c", "d", "e", "f"]).unwrap();
        assert_eq!(v.world_count(), 64);
        assert_eq!(v.all_worlds(), WorldSet(u64::MAX));
    }
}
