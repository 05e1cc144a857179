//! Consequence-operation law checks: connective behaviour and admissibility.
//!
//! These validate the backend itself rather than any inference operation.
//! Each check sweeps theory tuples exhaustively (keep the vocabulary at three
//! atoms or fewer; the triple sweeps are cubic in the theory count) and
//! reports the first counterexample in canonical order.
//!
//! On the classical backend the full battery runs: the disjunction law,
//! implication laws including intersection over families, negation laws, and
//! admissibility. The identity backend has no connectives, so only
//! admissibility and its consequences apply there.

use alloc::vec::Vec;

use crate::backend::{Backend, TheoryId};
use crate::postulates::LemmaCheck;
use crate::worlds::WorldSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub checks: Vec<LemmaCheck>,
}

impl LawReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn first_failure(&self) -> Option<&LemmaCheck> {
        self.checks.iter().find(|c| !c.holds)
    }
}

fn fail3(name: &'static str, x: WorldSet, y: WorldSet, z: WorldSet) -> LemmaCheck {
    LemmaCheck::fail(
        name,
        alloc::format!("x={:#b} y={:#b} z={:#b}", x.0, y.0, z.0),
    )
}

/// Admissibility: `Cn(X,Y) ∩ Cn(X,Z) = Cn(X, Y ∩ Z)` over all theory triples.
pub fn check_admissibility(b: &Backend) -> LemmaCheck {
    for x in b.theories() {
        let mx = b.theory_mask(x);
        for y in b.theories() {
            let my = b.theory_mask(y);
            for z in b.theories() {
                let mz = b.theory_mask(z);
                let lhs = b.intersect_theories(mx & my, mx & mz);
                let rhs = b.close(mx & b.intersect_theories(my, mz));
                if lhs != rhs {
                    return fail3("admissibility", mx, my, mz);
                }
            }
        }
    }
    LemmaCheck::pass("admissibility")
}

/// `X ⊆ Cn(Z,Y)` and `X ∩ Y ⊆ Z` imply `X ⊆ Z`, for theories over an
/// admissible backend.
pub fn check_nadm(b: &Backend) -> LemmaCheck {
    for x in b.theories() {
        let mx = b.theory_mask(x);
        for y in b.theories() {
            let my = b.theory_mask(y);
            for z in b.theories() {
                let mz = b.theory_mask(z);
                let hyp1 = (mz & my).subset_of(mx);
                let hyp2 = mz.subset_of(b.intersect_theories(mx, my));
                if hyp1 && hyp2 && !mz.subset_of(mx) {
                    return fail3("cancellation-under-admissibility", mx, my, mz);
                }
            }
        }
    }
    LemmaCheck::pass("cancellation-under-admissibility")
}

/// Disjunction law: `Cn(X, Y ∨ Z) = Cn(X,Y) ∩ Cn(X,Z)`; the model set of the
/// pairwise disjunction of two theories is the union of their model sets.
fn check_disjunction(b: &Backend) -> LemmaCheck {
    for x in b.theories() {
        let mx = b.theory_mask(x);
        for y in b.theories() {
            let my = b.theory_mask(y);
            for z in b.theories() {
                let mz = b.theory_mask(z);
                let lhs = mx & (my | mz);
                let rhs = b.intersect_theories(mx & my, mx & mz);
                if lhs != rhs {
                    return fail3("disjunction-law", mx, my, mz);
                }
            }
        }
    }
    LemmaCheck::pass("disjunction-law")
}

/// Implication law: for theories A and Y there is a set `A → Y` with
/// `A → Y ⊆ Cn(X)` iff `Y ⊆ Cn(X,A)`, for every theory X. Semantically
/// `Mod(A → Y) = Mod(Y) ∪ (U ∖ Mod(A))`.
fn check_implication(b: &Backend) -> LemmaCheck {
    let full = b.cn_empty();
    for a in b.theories() {
        let ma = b.theory_mask(a);
        for y in b.theories() {
            let my = b.theory_mask(y);
            let imp = my | WorldSet(full.0 & !ma.0);
            for x in b.theories() {
                let mx = b.theory_mask(x);
                let lhs = mx.subset_of(imp);
                let rhs = (mx & ma).subset_of(my);
                if lhs != rhs {
                    return fail3("implication-law", ma, my, mx);
                }
            }
        }
    }
    LemmaCheck::pass("implication-law")
}

/// Intersection-of-family law under implication:
/// `Cn(A, ⋂ᵢ Cn(Yᵢ)) = ⋂ᵢ Cn(A, Yᵢ)` for every theory A and every pair and
/// derived triple of theories as the family.
fn check_implication_families(b: &Backend) -> LemmaCheck {
    let ids: Vec<TheoryId> = b.theories().collect();
    for a in b.theories() {
        let ma = b.theory_mask(a);
        for (i, &y1) in ids.iter().enumerate() {
            let m1 = b.theory_mask(y1);
            for &y2 in &ids[i..] {
                let m2 = b.theory_mask(y2);
                let inter = b.intersect_theories(m1, m2);
                let lhs = b.close(ma & inter);
                let rhs = b.intersect_theories(ma & m1, ma & m2);
                if lhs != rhs {
                    return fail3("implication-family-law", ma, m1, m2);
                }
                // sampled triple: extend the family with the closed union
                let m3 = b.close(m1 | m2);
                let inter3 = b.close(inter | m3);
                let lhs3 = b.close(ma & inter3);
                let rhs3 = b.intersect_theories(rhs, ma & m3);
                if lhs3 != rhs3 {
                    return fail3("implication-family-law", ma, m1, m3);
                }
            }
        }
    }
    LemmaCheck::pass("implication-family-law")
}

/// Negation laws: `Cn(A) ∩ Cn(¬χ_A) = Cn(∅)`, `A ∪ ¬χ_A` is inconsistent,
/// and double negation is the identity on model sets.
fn check_negation(b: &Backend) -> LemmaCheck {
    let full = b.cn_empty();
    for a in b.theories() {
        let ma = b.theory_mask(a);
        let neg = WorldSet(full.0 & !ma.0);
        if b.intersect_theories(ma, neg) != full {
            return fail3("negation-law", ma, neg, full);
        }
        if !(ma & neg).is_empty() {
            return fail3("negation-law", ma, neg, ma & neg);
        }
        let double = WorldSet(full.0 & !neg.0);
        if double != ma {
            return fail3("negation-law", ma, neg, double);
        }
    }
    LemmaCheck::pass("negation-law")
}

/// Intersections of theories are theories, and a formula holds on a union of
/// model sets exactly when it belongs to both theories: membership patterns
/// agree across all definable consequence sets.
fn check_intersection_of_theories(b: &Backend) -> LemmaCheck {
    for x in b.theories() {
        let mx = b.theory_mask(x);
        for y in b.theories() {
            let my = b.theory_mask(y);
            let inter = b.intersect_theories(mx, my);
            for q in b.theories() {
                let mq = b.theory_mask(q);
                let in_inter = inter.subset_of(mq);
                let in_both = mx.subset_of(mq) && my.subset_of(mq);
                if in_inter != in_both {
                    return fail3("intersection-of-theories", mx, my, mq);
                }
            }
        }
    }
    LemmaCheck::pass("intersection-of-theories")
}

/// Runs every law applicable to the backend.
pub fn check_connective_laws(b: &Backend) -> LawReport {
    let mut checks = Vec::new();
    checks.push(check_admissibility(b));
    checks.push(check_nadm(b));
    checks.push(check_intersection_of_theories(b));
    if b.capabilities().has_disjunction {
        checks.push(check_disjunction(b));
    }
    if b.capabilities().has_implication {
        checks.push(check_implication(b));
        checks.push(check_implication_families(b));
    }
    if b.capabilities().has_classical_negation {
        checks.push(check_negation(b));
    }
    LawReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::worlds::Vocabulary;

    #[test]
    fn classical_two_atoms_passes_all_laws() {
        let b = Backend::classical(Vocabulary::new(["p", "q"]).unwrap());
        let report = check_connective_laws(&b);
        assert!(report.pass(), "{:?}", report.first_failure());
        assert_eq!(report.checks.len(), 7);
    }

    #[test]
    fn identity_backend_is_admissible_without_connectives() {
        let b = Backend::identity(Vocabulary::new(["a", "b", "c"]).unwrap());
        let report = check_connective_laws(&b);
        assert!(report.pass(), "{:?}", report.first_failure());
        // only the connective-free checks run
        assert_eq!(report.checks.len(), 3);
    }

    #[test]
    fn admissibility_instance_on_named_theories() {
        // X = Th(p), Y = Th(q), Z = Cn(∅)
        let v = Vocabulary::new(["p", "q"]).unwrap();
        let b = Backend::classical(v.clone());
        let x = v.atom_worlds(0);
        let y = v.atom_worlds(1);
        let z = b.cn_empty();
        let lhs = b.intersect_theories(z & x, z & y);
        let rhs = b.close(z & b.intersect_theories(x, y));
        assert_eq!(lhs, rhs);
    }
}
