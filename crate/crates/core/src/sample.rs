//! Seeded random generation of tables, formulas and witnesses.
//!
//! All sampling is driven by a ChaCha stream cipher so that runs are
//! reproducible across platforms and versions for a fixed seed.

use alloc::sync::Arc;
use alloc::vec::Vec;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::backend::Backend;
use crate::formula::Formula;
use crate::postulates::{check_cautious_monotonicity, check_cut, is_cumulative};
use crate::table::{canonical_subtheories, OperationTable};
use crate::worlds::{Vocabulary, WorldSet};

pub struct SeededRng {
    rng: ChaCha8Rng,
}

impl SeededRng {
    pub fn new(seed: u64) -> SeededRng {
        SeededRng {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform draw from `0..bound` (rejection sampled, `bound > 0`).
    pub fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % bound;
            }
        }
    }

    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }

    pub fn pick<'a, T>(&mut self, slice: &'a [T]) -> &'a T {
        &slice[self.below(slice.len() as u64) as usize]
    }
}

/// Uniform Inclusion-respecting table: for each consistent theory, the image
/// is drawn uniformly among its nonempty canonical strengthenings; the
/// inconsistent theory maps to itself.
pub fn random_inclusion_table(backend: &Arc<Backend>, rng: &mut SeededRng) -> OperationTable {
    OperationTable::from_fn(backend.clone(), |b, t| {
        let mask = b.theory_mask(t);
        if mask == b.inconsistent() {
            return mask;
        }
        match b.kind() {
            crate::backend::BackendKind::Classical => loop {
                let draw = WorldSet(rng.next_u64() & mask.0);
                if !draw.is_empty() {
                    break draw;
                }
            },
            crate::backend::BackendKind::Identity => {
                let subs: Vec<_> = canonical_subtheories(b, mask)
                    .into_iter()
                    .filter(|&s| b.theory_mask(s) != b.inconsistent())
                    .collect();
                b.theory_mask(*rng.pick(&subs))
            }
        }
    })
    .expect("sampled images respect inclusion")
}

/// Like [`random_inclusion_table`] but the image may also be the inconsistent
/// theory, so sampled operations can treat consistent theories as
/// C-inconsistent. Witness searches need this wider space: several of the
/// separating operations map consistent theories to the whole language.
pub fn random_inclusion_table_wide(
    backend: &Arc<Backend>,
    rng: &mut SeededRng,
) -> OperationTable {
    OperationTable::from_fn(backend.clone(), |b, t| {
        let mask = b.theory_mask(t);
        match b.kind() {
            crate::backend::BackendKind::Classical => WorldSet(rng.next_u64() & mask.0),
            crate::backend::BackendKind::Identity => {
                let subs = canonical_subtheories(b, mask);
                b.theory_mask(*rng.pick(&subs))
            }
        }
    })
    .expect("sampled images respect inclusion")
}

/// Pushes a table toward cumulativity by repeatedly enforcing
/// `C(X ∪ Y) = C(X)` on violating pairs, in canonical theory order. Returns
/// the repaired table; the caller still has to check the result, since the
/// pass can oscillate on unlucky draws.
pub fn repair_cumulative(op: &OperationTable, max_passes: usize) -> OperationTable {
    let b = op.backend().clone();
    let mut entries = op.entries().to_vec();
    for _ in 0..max_passes {
        let mut dirty = false;
        for x in b.theories() {
            let cx = b.theory_mask(entries[x.index()]);
            for y in b.theories() {
                if !cx.subset_of(b.theory_mask(y)) {
                    continue;
                }
                let z = b.close_id(b.theory_mask(x) & b.theory_mask(y));
                if entries[z.index()] != entries[x.index()] {
                    entries[z.index()] = entries[x.index()];
                    dirty = true;
                }
            }
        }
        if !dirty {
            break;
        }
    }
    OperationTable::new(b, entries).expect("repair keeps inclusion")
}

/// Samples until a cumulative table is found, or the attempt budget runs out.
pub fn random_cumulative_table(
    backend: &Arc<Backend>,
    rng: &mut SeededRng,
    attempts: usize,
) -> Option<OperationTable> {
    for _ in 0..attempts {
        let raw = random_inclusion_table(backend, rng);
        let repaired = repair_cumulative(&raw, 16);
        if is_cumulative(&repaired) {
            return Some(repaired);
        }
    }
    None
}

/// Closes a table under Cut: wherever `Y ⊆ C(X)`, grows `C(X ∪ Y)` to cover
/// `C(X)`. Monotone in the entries, so it terminates at a Cut-satisfying
/// table.
pub fn repair_cut(op: &OperationTable) -> OperationTable {
    let b = op.backend().clone();
    let mut entries = op.entries().to_vec();
    loop {
        let mut dirty = false;
        for x in b.theories() {
            let cx = b.theory_mask(entries[x.index()]);
            for y in b.theories() {
                if !cx.subset_of(b.theory_mask(y)) {
                    continue;
                }
                let z = b.close_id(b.theory_mask(x) & b.theory_mask(y));
                let cz = b.theory_mask(entries[z.index()]);
                if !cx.subset_of(cz) {
                    entries[z.index()] = b.close_id(cz | cx);
                    dirty = true;
                }
            }
        }
        if !dirty {
            break;
        }
    }
    OperationTable::new(b, entries).expect("cut closure keeps inclusion")
}

/// Samples tables satisfying Cut but not Cautious Monotonicity.
pub fn random_cut_not_cm_table(
    backend: &Arc<Backend>,
    rng: &mut SeededRng,
    attempts: usize,
) -> Option<OperationTable> {
    for _ in 0..attempts {
        let op = repair_cut(&random_inclusion_table_wide(backend, rng));
        if check_cut(&op).holds && !check_cautious_monotonicity(&op).holds {
            return Some(op);
        }
    }
    None
}

/// Random formula tree of bounded depth over the vocabulary.
pub fn random_formula(vocab: &Vocabulary, rng: &mut SeededRng, depth: usize) -> Formula {
    if depth == 0 || rng.chance(1, 3) {
        let i = rng.below(vocab.atom_count() as u64) as usize;
        return if rng.chance(1, 4) {
            Formula::not(Formula::Atom(i))
        } else {
            Formula::Atom(i)
        };
    }
    match rng.below(4) {
        0 => Formula::not(random_formula(vocab, rng, depth - 1)),
        1 => Formula::and(
            random_formula(vocab, rng, depth - 1),
            random_formula(vocab, rng, depth - 1),
        ),
        2 => Formula::or(
            random_formula(vocab, rng, depth - 1),
            random_formula(vocab, rng, depth - 1),
        ),
        _ => Formula::implies(
            random_formula(vocab, rng, depth - 1),
            random_formula(vocab, rng, depth - 1),
        ),
    }
}

/// Draws tables from `sampler` until one satisfies the predicate. Returns
/// the witness and the number of draws used, or `None` when the budget is
/// exhausted.
pub fn search_witness(
    rng: &mut SeededRng,
    budget: usize,
    mut sampler: impl FnMut(&mut SeededRng) -> Option<OperationTable>,
    predicate: impl Fn(&OperationTable) -> bool,
) -> Option<(OperationTable, usize)> {
    for attempt in 1..=budget {
        if let Some(op) = sampler(rng) {
            if predicate(&op) {
                return Some((op, attempt));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::postulates::{check_cautious_monotonicity, check_cut};
    use crate::worlds::Vocabulary;

    fn two_atoms() -> Arc<Backend> {
        Backend::classical(Vocabulary::new(["p", "q"]).unwrap())
    }

    #[test]
    fn seeded_runs_repeat() {
        let b = two_atoms();
        let t1 = random_inclusion_table(&b, &mut SeededRng::new(7));
        let t2 = random_inclusion_table(&b, &mut SeededRng::new(7));
        assert_eq!(t1, t2);
        let t3 = random_inclusion_table(&b, &mut SeededRng::new(8));
        assert_ne!(t1, t3);
    }

    #[test]
    fn cumulative_sampler_delivers() {
        let b = two_atoms();
        let mut rng = SeededRng::new(0);
        let op = random_cumulative_table(&b, &mut rng, 200).expect("found within budget");
        assert!(is_cumulative(&op));
    }

    #[test]
    fn cut_closure_gives_cut() {
        let b = two_atoms();
        let mut rng = SeededRng::new(1);
        for _ in 0..20 {
            let op = repair_cut(&random_inclusion_table(&b, &mut rng));
            assert!(check_cut(&op).holds);
        }
    }

    #[test]
    fn cut_not_cm_witness_found_at_one_atom() {
        // With images allowed to be inconsistent, mapping Cn(∅) to the whole
        // language while fixing everything else satisfies Cut but not CM, and
        // the sampler finds tables of that shape.
        let b = Backend::classical(Vocabulary::new(["p"]).unwrap());
        let mut rng = SeededRng::new(2);
        let op = random_cut_not_cm_table(&b, &mut rng, 500).expect("witness");
        assert!(check_cut(&op).holds);
        assert!(!check_cautious_monotonicity(&op).holds);
    }
}
