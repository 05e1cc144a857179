//! Family classification of an inference operation.
//!
//! `classify` runs the whole checker battery, derives the family flags, and
//! re-validates the theorem-level relationships between them: the implication
//! chain rational ⟹ deductive ⟹ distributive ⟹ strongly cumulative ⟹
//! cumulative, the equivalence of the weak and full distributivity forms for
//! cumulative operations, and the various characterization agreements. Any
//! failed cross-check is an internal theorem violation, not a property of the
//! operation, and audits treat it as a hard error.

use alloc::vec::Vec;

use crate::orders;
use crate::postulates::{
    check_cautious_monotonicity, check_cut, check_deductivity, check_distributivity,
    check_inclusion, check_monotonicity, check_rational_monotonicity, check_strong_cumulativity,
    dedchar_agreement, distded_check, montrans_check, ratchar_agreement, scc_vs_direct_cycles,
    summary_reciprocal_agrees, DistributivityForm, LemmaCheck, Verdict,
};
use crate::table::OperationTable;

/// Largest theory count for which the exponential cross-checks (direct cycle
/// enumeration, quadruple-loop order lemmas) are run.
const SMALL_THEORY_COUNT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyProfile {
    pub inference_op: bool,
    pub cumulative: bool,
    pub strongly_cumulative: bool,
    pub distributive: bool,
    pub weakly_distributive: bool,
    pub deductive: bool,
    pub rational: bool,
    pub monotonic: bool,
    /// Over a finite vocabulary every operation is compact; recorded so that
    /// reports can state the collapse explicitly.
    pub compact_collapse: bool,
}

#[derive(Debug, Clone)]
pub struct Classification {
    pub profile: FamilyProfile,
    pub postulates: Vec<Verdict>,
    pub lemmas: Vec<LemmaCheck>,
}

impl Classification {
    /// True when every theorem-level cross-check passed. Family flags being
    /// false is ordinary; a failed lemma is not.
    pub fn consistent(&self) -> bool {
        self.lemmas.iter().all(|l| l.holds)
    }

    pub fn first_lemma_failure(&self) -> Option<&LemmaCheck> {
        self.lemmas.iter().find(|l| !l.holds)
    }
}

/// First broken link of the family implication chain, if any.
pub fn chain_violation(p: &FamilyProfile) -> Option<&'static str> {
    if p.rational && !p.deductive {
        return Some("rational but not deductive");
    }
    if p.deductive && !p.distributive {
        return Some("deductive but not distributive");
    }
    if p.distributive && !p.strongly_cumulative {
        return Some("distributive but not strongly cumulative");
    }
    if p.strongly_cumulative && !p.cumulative {
        return Some("strongly cumulative but not cumulative");
    }
    if p.monotonic && p.cumulative && !p.strongly_cumulative {
        return Some("monotonic cumulative but not strongly cumulative");
    }
    None
}

pub fn classify(op: &OperationTable) -> Classification {
    let inclusion = check_inclusion(op);
    let cut = check_cut(op);
    let cm = check_cautious_monotonicity(op);
    let strong = check_strong_cumulativity(op);
    let dist_full = check_distributivity(op, DistributivityForm::Full);
    let dist_w1 = check_distributivity(op, DistributivityForm::Pairwise);
    let dist_w2 = check_distributivity(op, DistributivityForm::Conditional);
    let deduct = check_deductivity(op);
    let rm = check_rational_monotonicity(op);
    let mono = check_monotonicity(op);

    let cumulative = cut.holds && cm.holds;
    let profile = FamilyProfile {
        inference_op: inclusion.holds,
        cumulative,
        strongly_cumulative: strong.holds,
        distributive: cumulative && dist_full.holds,
        weakly_distributive: cumulative && dist_w1.holds && dist_w2.holds,
        deductive: cumulative && deduct.holds,
        rational: cumulative && deduct.holds && rm.holds,
        monotonic: mono.holds,
        compact_collapse: true,
    };

    let mut lemmas = Vec::new();
    lemmas.push(match chain_violation(&profile) {
        None => LemmaCheck::pass("family-implication-chain"),
        Some(which) => LemmaCheck::fail("family-implication-chain", which.into()),
    });
    lemmas.push(summary_reciprocal_agrees(op));
    lemmas.push(ratchar_agreement(op));
    if cumulative {
        lemmas.push(dedchar_agreement(op));
        // weak forms agree with each other and upgrade to the full form
        lemmas.push(if dist_w1.holds == dist_w2.holds {
            LemmaCheck::pass("weak-distributivity-forms-agree")
        } else {
            LemmaCheck::fail(
                "weak-distributivity-forms-agree",
                alloc::format!("w1={} w2={}", dist_w1.holds, dist_w2.holds),
            )
        });
        lemmas.push(if dist_w1.holds == dist_full.holds {
            LemmaCheck::pass("weak-distributivity-upgrades")
        } else {
            LemmaCheck::fail(
                "weak-distributivity-upgrades",
                alloc::format!("w1={} full={}", dist_w1.holds, dist_full.holds),
            )
        });
        lemmas.extend(orders::preceq_lemmas(op));
        lemmas.extend(orders::prec_lemmas(op));
        lemmas.push(orders::cumulative_consistency_monotone(op));
    }
    if profile.distributive {
        lemmas.push(orders::preceq_transitive(op));
        lemmas.push(orders::preceq_witness_equivalence(op));
        if op.backend().theory_count() <= SMALL_THEORY_COUNT {
            lemmas.extend(orders::distributive_order_facts(op));
        }
    }
    if profile.deductive && profile.distributive {
        lemmas.push(orders::chained_expectation_bound(op));
    }
    if profile.rational {
        lemmas.push(match orders::check_modular(&orders::order_prec(op)) {
            Ok(report) if report.modular => LemmaCheck::pass("prec-modular-for-rational"),
            Ok(_) => LemmaCheck::fail(
                "prec-modular-for-rational",
                "strict expectation order is not modular".into(),
            ),
            Err(e) => LemmaCheck::fail(
                "prec-modular-for-rational",
                alloc::format!("not a strict partial order: {e}"),
            ),
        });
    }
    if op.backend().theory_count() <= SMALL_THEORY_COUNT {
        lemmas.push(scc_vs_direct_cycles(op, 4));
    }
    if let Some(check) = montrans_check(op) {
        lemmas.push(check);
    }
    if let Some(check) = distded_check(op) {
        lemmas.push(check);
    }

    Classification {
        profile,
        postulates: alloc::vec![
            inclusion, cut, cm, strong, dist_full, dist_w1, dist_w2, deduct, rm, mono,
        ],
        lemmas,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backend::Backend;
    use crate::table::{enumerate_all, OperationTable};
    use crate::worlds::{Vocabulary, WorldSet};
    use alloc::sync::Arc;

    fn one_atom() -> Arc<Backend> {
        Backend::classical(Vocabulary::new(["p"]).unwrap())
    }

    #[test]
    fn cn_gets_all_flags() {
        let c = classify(&OperationTable::cn(one_atom()));
        assert!(c.consistent(), "{:?}", c.first_lemma_failure());
        let p = c.profile;
        assert!(
            p.inference_op
                && p.cumulative
                && p.strongly_cumulative
                && p.distributive
                && p.weakly_distributive
                && p.deductive
                && p.rational
                && p.monotonic
        );
    }

    #[test]
    fn collapse_op_is_cumulative_monotonic_not_distributive() {
        let c = classify(&OperationTable::all_or_nothing(one_atom()));
        assert!(c.consistent(), "{:?}", c.first_lemma_failure());
        let p = c.profile;
        assert!(p.cumulative && p.strongly_cumulative && p.monotonic);
        assert!(!p.distributive && !p.weakly_distributive);
        assert!(!p.deductive && !p.rational);
    }

    #[test]
    fn c0_is_rational_but_not_monotonic() {
        let op = OperationTable::from_fn(one_atom(), |b, t| {
            if b.theory_mask(t) == b.cn_empty() {
                WorldSet(0b10)
            } else {
                b.theory_mask(t)
            }
        })
        .unwrap();
        let c = classify(&op);
        assert!(c.consistent(), "{:?}", c.first_lemma_failure());
        assert!(c.profile.rational && c.profile.deductive && c.profile.distributive);
        assert!(!c.profile.monotonic);
    }

    #[test]
    fn census_of_all_one_atom_tables_is_consistent() {
        for op in enumerate_all(&one_atom()).unwrap() {
            let c = classify(&op);
            assert!(c.consistent(), "{:?} on {:?}", c.first_lemma_failure(), op);
        }
    }
}
