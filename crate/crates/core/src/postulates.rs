//! Postulate checkers for inference operations.
//!
//! Every checker sweeps theory tuples in canonical order (world masks
//! ascending, outer index slowest) and stops at the first violation, so
//! counterexamples are reproducible and [`recheck`] can confirm them
//! independently of the sweep.
//!
//! Throughout, formula-level statements are evaluated on world sets. The
//! translation is: union of formula sets is intersection of world sets,
//! intersection of theories is the closed union of world sets, and `S ⊆ T`
//! as formula sets is `worlds(T) ⊆ worlds(S)`.
//!
//! The 1- and 2-special variants of Cut and Cautious Monotonicity quantify
//! over finite sets on one side; over a finite vocabulary every theory is
//! finitely axiomatizable, so they coincide with the general rules. The
//! checkers expose them as aliases of the general checks; see
//! [`SPECIAL_VARIANT_NOTE`].

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::backend::TheoryId;
use crate::bitrel::strongly_connected_components;
use crate::table::{canonical_supertheories, OperationTable};
use crate::worlds::WorldSet;

/// Reported alongside cumulativity verdicts wherever the special variants
/// are requested.
pub const SPECIAL_VARIANT_NOTE: &str = "1-special and 2-special Cut/Cautious Monotonicity coincide with the general rules over a finite vocabulary; the general verdicts are reported for them";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Postulate {
    Inclusion,
    Cut,
    CautiousMonotonicity,
    StrongCumulativity,
    Distributivity,
    WeakDistributivityPairwise,
    WeakDistributivityConditional,
    Deductivity,
    RationalMonotonicity,
    Monotonicity,
}

impl Postulate {
    pub fn id(self) -> &'static str {
        match self {
            Postulate::Inclusion => "inclusion",
            Postulate::Cut => "cut",
            Postulate::CautiousMonotonicity => "cautious-monotonicity",
            Postulate::StrongCumulativity => "strong-cumulativity",
            Postulate::Distributivity => "distributivity",
            Postulate::WeakDistributivityPairwise => "weak-distributivity-w1",
            Postulate::WeakDistributivityConditional => "weak-distributivity-w2",
            Postulate::Deductivity => "deductivity",
            Postulate::RationalMonotonicity => "rational-monotonicity",
            Postulate::Monotonicity => "monotonicity",
        }
    }
}

impl fmt::Display for Postulate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// A failed check carries the offending theories (as world sets, with role
/// labels) and, for cycle conditions, the offending cycle.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Counterexample {
    pub roles: Vec<(&'static str, WorldSet)>,
    pub cycle: Vec<WorldSet>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub postulate: Postulate,
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
}

impl Verdict {
    fn pass(postulate: Postulate) -> Verdict {
        Verdict {
            postulate,
            holds: true,
            counterexample: None,
        }
    }

    fn fail(postulate: Postulate, roles: Vec<(&'static str, WorldSet)>) -> Verdict {
        Verdict {
            postulate,
            holds: false,
            counterexample: Some(Counterexample {
                roles,
                cycle: Vec::new(),
            }),
        }
    }
}

/// Outcome of a named lemma- or theorem-level consistency check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaCheck {
    pub name: &'static str,
    pub holds: bool,
    pub detail: Option<String>,
}

impl LemmaCheck {
    pub fn pass(name: &'static str) -> LemmaCheck {
        LemmaCheck {
            name,
            holds: true,
            detail: None,
        }
    }

    pub fn fail(name: &'static str, detail: String) -> LemmaCheck {
        LemmaCheck {
            name,
            holds: false,
            detail: Some(detail),
        }
    }
}

/// Inclusion is validated at table construction; this re-checks it so audits
/// can report it explicitly.
pub fn check_inclusion(op: &OperationTable) -> Verdict {
    let b = op.backend();
    for x in b.theories() {
        if !op.image_mask(x).subset_of(b.theory_mask(x)) {
            return Verdict::fail(Postulate::Inclusion, alloc::vec![("x", b.theory_mask(x))]);
        }
    }
    Verdict::pass(Postulate::Inclusion)
}

/// Cut: if `Y ⊆ C(X)` then `C(X ∪ Y) ⊆ C(X)`.
pub fn check_cut(op: &OperationTable) -> Verdict {
    let b = op.backend();
    for x in b.theories() {
        let cx = op.image_mask(x);
        for y in b.theories() {
            if !cx.subset_of(b.theory_mask(y)) {
                continue;
            }
            if !cx.subset_of(op.image_mask(op.union_id(x, y))) {
                return Verdict::fail(
                    Postulate::Cut,
                    alloc::vec![("x", b.theory_mask(x)), ("y", b.theory_mask(y))],
                );
            }
        }
    }
    Verdict::pass(Postulate::Cut)
}

/// Cautious Monotonicity: if `Y ⊆ C(X)` then `C(X) ⊆ C(X ∪ Y)`.
pub fn check_cautious_monotonicity(op: &OperationTable) -> Verdict {
    let b = op.backend();
    for x in b.theories() {
        let cx = op.image_mask(x);
        for y in b.theories() {
            if !cx.subset_of(b.theory_mask(y)) {
                continue;
            }
            if !op.image_mask(op.union_id(x, y)).subset_of(cx) {
                return Verdict::fail(
                    Postulate::CautiousMonotonicity,
                    alloc::vec![("x", b.theory_mask(x)), ("y", b.theory_mask(y))],
                );
            }
        }
    }
    Verdict::pass(Postulate::CautiousMonotonicity)
}

pub fn check_cumulativity(op: &OperationTable) -> (Verdict, Verdict) {
    (check_cut(op), check_cautious_monotonicity(op))
}

pub fn is_cumulative(op: &OperationTable) -> bool {
    check_cut(op).holds && check_cautious_monotonicity(op).holds
}

/// Strong cumulativity via strongly connected components of the graph with
/// an edge `u → v` whenever `v ⊆ C(u)`: the cycle condition holds iff every
/// component is constant under the operation. On failure the counterexample
/// carries a witnessing cycle of theories.
pub fn check_strong_cumulativity(op: &OperationTable) -> Verdict {
    let b = op.backend();
    let ids: Vec<TheoryId> = b.theories().collect();
    // ids come out mask-ascending, which on the identity backend is not the
    // TheoryId order; map ids back to positions explicitly.
    let mut index = alloc::vec![0usize; ids.iter().map(|t| t.index()).max().map_or(0, |m| m + 1)];
    for (i, t) in ids.iter().enumerate() {
        index[t.index()] = i;
    }

    let succ = |i: usize| -> Vec<usize> {
        let u = ids[i];
        canonical_supertheories(b, op.image_mask(u))
            .into_iter()
            .map(|v| index[v.index()])
            .collect()
    };
    let comp = strongly_connected_components(succ, ids.len());

    for i in 0..ids.len() {
        for j in i + 1..ids.len() {
            if comp[i] == comp[j] && op.image(ids[i]) != op.image(ids[j]) {
                let cycle = connecting_cycle(op, &ids, &index, i, j);
                return Verdict {
                    postulate: Postulate::StrongCumulativity,
                    holds: false,
                    counterexample: Some(Counterexample {
                        roles: alloc::vec![
                            ("x", b.theory_mask(ids[i])),
                            ("y", b.theory_mask(ids[j])),
                        ],
                        cycle,
                    }),
                };
            }
        }
    }
    Verdict::pass(Postulate::StrongCumulativity)
}

/// BFS path through the premise graph from `from` to `to`, concatenated with
/// a path back, as theory masks.
fn connecting_cycle(
    op: &OperationTable,
    ids: &[TheoryId],
    index: &[usize],
    from: usize,
    to: usize,
) -> Vec<WorldSet> {
    let b = op.backend();
    let path = |s: usize, t: usize| -> Vec<usize> {
        let mut prev = alloc::vec![usize::MAX; ids.len()];
        let mut queue = alloc::collections::VecDeque::new();
        queue.push_back(s);
        prev[s] = s;
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for v in canonical_supertheories(b, op.image_mask(ids[u])) {
                let vi = index[v.index()];
                if prev[vi] == usize::MAX {
                    prev[vi] = u;
                    queue.push_back(vi);
                }
            }
        }
        let mut nodes = alloc::vec![t];
        let mut cur = t;
        while cur != s {
            cur = prev[cur];
            nodes.push(cur);
        }
        nodes.reverse();
        nodes
    };
    let mut cycle: Vec<usize> = path(from, to);
    let back = path(to, from);
    cycle.extend_from_slice(&back[1..back.len().saturating_sub(1)]);
    // Successor edges run u → v with v ⊆ C(u); the premise convention
    // `X_i ⊆ C(X_{i+1})` reads the cycle the other way around.
    cycle.reverse();
    cycle.into_iter().map(|i| b.theory_mask(ids[i])).collect()
}

/// Strong cumulativity by brute force over premise cycles of bounded length
/// (tuples may repeat theories). Used to validate the component-based check.
pub fn check_strong_cumulativity_direct(op: &OperationTable, max_len: usize) -> Verdict {
    let b = op.backend();
    let ids: Vec<TheoryId> = b.theories().collect();
    let mut tuple: Vec<usize> = Vec::new();

    fn search(
        op: &OperationTable,
        ids: &[TheoryId],
        tuple: &mut Vec<usize>,
        len: usize,
    ) -> Option<Vec<usize>> {
        if tuple.len() == len {
            // premise: X_i ⊆ C(X_{i+1}) cyclically
            let ok = (0..len).all(|i| {
                let next = tuple[(i + 1) % len];
                op.image_mask(ids[next])
                    .subset_of(op.backend().theory_mask(ids[tuple[i]]))
            });
            if ok {
                let first = op.image(ids[tuple[0]]);
                if tuple.iter().any(|&i| op.image(ids[i]) != first) {
                    return Some(tuple.clone());
                }
            }
            return None;
        }
        for i in 0..ids.len() {
            tuple.push(i);
            if let Some(hit) = search(op, ids, tuple, len) {
                return Some(hit);
            }
            tuple.pop();
        }
        None
    }

    for len in 2..=max_len {
        if let Some(hit) = search(op, &ids, &mut tuple, len) {
            return Verdict {
                postulate: Postulate::StrongCumulativity,
                holds: false,
                counterexample: Some(Counterexample {
                    roles: Vec::new(),
                    cycle: hit.into_iter().map(|i| b.theory_mask(ids[i])).collect(),
                }),
            };
        }
    }
    Verdict::pass(Postulate::StrongCumulativity)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistributivityForm {
    /// `C(Z,X) ∩ C(Z,Y) ⊆ C(Z, Cn(X) ∩ Cn(Y))` over all theory triples.
    Full,
    /// The `Z = Cn(∅)` case: `C(X) ∩ C(Y) ⊆ C(X ∩ Y)` over theory pairs.
    Pairwise,
    /// If `Y ⊆ C(X)` then `Y ⪯_C X`.
    Conditional,
}

pub fn check_distributivity(op: &OperationTable, form: DistributivityForm) -> Verdict {
    let b = op.backend();
    match form {
        DistributivityForm::Full => {
            for z in b.theories() {
                let mz = b.theory_mask(z);
                for x in b.theories() {
                    let czx = op.image_mask(op.union_id(z, x));
                    for y in b.theories() {
                        let czy = op.image_mask(op.union_id(z, y));
                        let lhs = b.intersect_theories(czx, czy);
                        let rhs =
                            op.image_mask(b.close_id(mz & b.theory_mask(op.intersect_id(x, y))));
                        if !rhs.subset_of(lhs) {
                            return Verdict::fail(
                                Postulate::Distributivity,
                                alloc::vec![
                                    ("x", b.theory_mask(x)),
                                    ("y", b.theory_mask(y)),
                                    ("z", mz),
                                ],
                            );
                        }
                    }
                }
            }
            Verdict::pass(Postulate::Distributivity)
        }
        DistributivityForm::Pairwise => {
            for x in b.theories() {
                let cx = op.image_mask(x);
                for y in b.theories() {
                    let lhs = b.intersect_theories(cx, op.image_mask(y));
                    if !op.image_mask(op.intersect_id(x, y)).subset_of(lhs) {
                        return Verdict::fail(
                            Postulate::WeakDistributivityPairwise,
                            alloc::vec![("x", b.theory_mask(x)), ("y", b.theory_mask(y))],
                        );
                    }
                }
            }
            Verdict::pass(Postulate::WeakDistributivityPairwise)
        }
        DistributivityForm::Conditional => {
            for x in b.theories() {
                let cx = op.image_mask(x);
                for y in b.theories() {
                    if cx.subset_of(b.theory_mask(y)) && !op.preceq(y, x) {
                        return Verdict::fail(
                            Postulate::WeakDistributivityConditional,
                            alloc::vec![("x", b.theory_mask(x)), ("y", b.theory_mask(y))],
                        );
                    }
                }
            }
            Verdict::pass(Postulate::WeakDistributivityConditional)
        }
    }
}

/// Deductivity: `C(X ∪ Y) ⊆ Cn(X ∪ C(Y))`.
pub fn check_deductivity(op: &OperationTable) -> Verdict {
    let b = op.backend();
    for x in b.theories() {
        let mx = b.theory_mask(x);
        for y in b.theories() {
            let rhs = b.union_theories(mx, op.image_mask(y));
            if !rhs.subset_of(op.image_mask(op.union_id(x, y))) {
                return Verdict::fail(
                    Postulate::Deductivity,
                    alloc::vec![("x", mx), ("y", b.theory_mask(y))],
                );
            }
        }
    }
    Verdict::pass(Postulate::Deductivity)
}

/// Rational Monotonicity: `C(X) ⊆ C(X ∪ Y)` whenever Y is consistent with
/// `C(X)`.
pub fn check_rational_monotonicity(op: &OperationTable) -> Verdict {
    let b = op.backend();
    for x in b.theories() {
        let cx = op.image_mask(x);
        for y in b.theories() {
            if !b.consistent_with(b.theory_mask(y), cx) {
                continue;
            }
            if !op.image_mask(op.union_id(x, y)).subset_of(cx) {
                return Verdict::fail(
                    Postulate::RationalMonotonicity,
                    alloc::vec![("x", b.theory_mask(x)), ("y", b.theory_mask(y))],
                );
            }
        }
    }
    Verdict::pass(Postulate::RationalMonotonicity)
}

pub fn check_monotonicity(op: &OperationTable) -> Verdict {
    let b = op.backend();
    for x in b.theories() {
        let mx = b.theory_mask(x);
        let cx = op.image_mask(x);
        for y in b.theories() {
            // X ⊆ Y as formula sets
            if b.theory_mask(y).subset_of(mx) && !op.image_mask(y).subset_of(cx) {
                return Verdict::fail(
                    Postulate::Monotonicity,
                    alloc::vec![("x", mx), ("y", b.theory_mask(y))],
                );
            }
        }
    }
    Verdict::pass(Postulate::Monotonicity)
}

/// Re-evaluates a failed verdict's counterexample from scratch. Returns true
/// when the counterexample still witnesses the violation.
pub fn recheck(op: &OperationTable, verdict: &Verdict) -> bool {
    let Some(ce) = &verdict.counterexample else {
        return false;
    };
    let b = op.backend();
    let id_of = |role: &str| -> Option<TheoryId> {
        ce.roles
            .iter()
            .find(|(r, _)| *r == role)
            .map(|(_, m)| b.close_id(*m))
    };
    match verdict.postulate {
        Postulate::Inclusion => id_of("x")
            .is_some_and(|x| !op.image_mask(x).subset_of(b.theory_mask(x))),
        Postulate::Cut => match (id_of("x"), id_of("y")) {
            (Some(x), Some(y)) => {
                let cx = op.image_mask(x);
                cx.subset_of(b.theory_mask(y))
                    && !cx.subset_of(op.image_mask(op.union_id(x, y)))
            }
            _ => false,
        },
        Postulate::CautiousMonotonicity => match (id_of("x"), id_of("y")) {
            (Some(x), Some(y)) => {
                let cx = op.image_mask(x);
                cx.subset_of(b.theory_mask(y))
                    && !op.image_mask(op.union_id(x, y)).subset_of(cx)
            }
            _ => false,
        },
        Postulate::StrongCumulativity => {
            let ids: Vec<TheoryId> = ce.cycle.iter().map(|m| b.close_id(*m)).collect();
            if ids.len() < 2 {
                return false;
            }
            let premises = (0..ids.len()).all(|i| {
                let next = ids[(i + 1) % ids.len()];
                op.image_mask(next).subset_of(b.theory_mask(ids[i]))
            });
            premises && ids.iter().any(|&t| op.image(t) != op.image(ids[0]))
        }
        Postulate::Distributivity => match (id_of("x"), id_of("y"), id_of("z")) {
            (Some(x), Some(y), Some(z)) => {
                let lhs = b.intersect_theories(
                    op.image_mask(op.union_id(z, x)),
                    op.image_mask(op.union_id(z, y)),
                );
                let rhs = op.image_mask(
                    b.close_id(b.theory_mask(z) & b.theory_mask(op.intersect_id(x, y))),
                );
                !rhs.subset_of(lhs)
            }
            _ => false,
        },
        Postulate::WeakDistributivityPairwise => match (id_of("x"), id_of("y")) {
            (Some(x), Some(y)) => {
                let lhs = b.intersect_theories(op.image_mask(x), op.image_mask(y));
                !op.image_mask(op.intersect_id(x, y)).subset_of(lhs)
            }
            _ => false,
        },
        Postulate::WeakDistributivityConditional => match (id_of("x"), id_of("y")) {
            (Some(x), Some(y)) => {
                op.image_mask(x).subset_of(b.theory_mask(y)) && !op.preceq(y, x)
            }
            _ => false,
        },
        Postulate::Deductivity => match (id_of("x"), id_of("y")) {
            (Some(x), Some(y)) => {
                let rhs = b.union_theories(b.theory_mask(x), op.image_mask(y));
                !rhs.subset_of(op.image_mask(op.union_id(x, y)))
            }
            _ => false,
        },
        Postulate::RationalMonotonicity => match (id_of("x"), id_of("y")) {
            (Some(x), Some(y)) => {
                b.consistent_with(b.theory_mask(y), op.image_mask(x))
                    && !op.image_mask(op.union_id(x, y)).subset_of(op.image_mask(x))
            }
            _ => false,
        },
        Postulate::Monotonicity => match (id_of("x"), id_of("y")) {
            (Some(x), Some(y)) => {
                b.theory_mask(y).subset_of(b.theory_mask(x))
                    && !op.image_mask(y).subset_of(op.image_mask(x))
            }
            _ => false,
        },
    }
}

/// The reciprocal-containment formulation of cumulativity: for all X, Y with
/// `Y ⊆ C(X)` and `X ⊆ C(Y)`, `C(X) = C(Y)`. Checks that it agrees with the
/// two-rule verdict on this operation.
pub fn summary_reciprocal_agrees(op: &OperationTable) -> LemmaCheck {
    let b = op.backend();
    let mut reciprocal = true;
    'outer: for x in b.theories() {
        for y in b.theories() {
            if op.image_mask(x).subset_of(b.theory_mask(y))
                && op.image_mask(y).subset_of(b.theory_mask(x))
                && op.image(x) != op.image(y)
            {
                reciprocal = false;
                break 'outer;
            }
        }
    }
    if reciprocal == is_cumulative(op) {
        LemmaCheck::pass("cumulativity-reciprocal-containment")
    } else {
        LemmaCheck::fail(
            "cumulativity-reciprocal-containment",
            alloc::format!("reciprocal formulation gives {reciprocal}, two-rule check disagrees"),
        )
    }
}

/// The three characterizations of deductivity agree for cumulative
/// operations: the rule itself, the `Y ⊆ C(X)` form and the `Y ⪯_C X` form.
pub fn dedchar_agreement(op: &OperationTable) -> LemmaCheck {
    let b = op.backend();
    let deductive = check_deductivity(op).holds;
    let mut pr1 = true;
    let mut pr2 = true;
    for x in b.theories() {
        let mx = b.theory_mask(x);
        let cx = op.image_mask(x);
        for y in b.theories() {
            let conclusion = b.union_theories(mx, op.image_mask(y)).subset_of(cx);
            if cx.subset_of(b.theory_mask(y)) && !conclusion {
                pr1 = false;
            }
            if op.preceq(y, x) && !conclusion {
                pr2 = false;
            }
        }
    }
    if deductive == pr1 && pr1 == pr2 {
        LemmaCheck::pass("deductivity-characterizations")
    } else {
        LemmaCheck::fail(
            "deductivity-characterizations",
            alloc::format!("rule={deductive} containment-form={pr1} order-form={pr2}"),
        )
    }
}

/// Rationality (deductivity + Rational Monotonicity) coincides with the
/// conditional-equality characterization `C(X) = Cn(X, C(Y))` for `Y ⊆ C(X)`
/// with X consistent with `C(Y)`.
pub fn ratchar_agreement(op: &OperationTable) -> LemmaCheck {
    let b = op.backend();
    let rational = is_cumulative(op)
        && check_deductivity(op).holds
        && check_rational_monotonicity(op).holds;
    let mut condition = true;
    'outer: for x in b.theories() {
        let mx = b.theory_mask(x);
        let cx = op.image_mask(x);
        for y in b.theories() {
            let cy = op.image_mask(y);
            if cx.subset_of(b.theory_mask(y))
                && b.consistent_with(mx, cy)
                && cx != b.union_theories(mx, cy)
            {
                condition = false;
                break 'outer;
            }
        }
    }
    if rational == condition {
        LemmaCheck::pass("rationality-characterization")
    } else {
        LemmaCheck::fail(
            "rationality-characterization",
            alloc::format!("rational={rational} characterization={condition}"),
        )
    }
}

/// For deductive operations with `C(∅) ⊆ C(X)` everywhere: the operation is
/// monotonic and equals `X ↦ Cn(X, C(∅))`. Returns `None` when the
/// hypothesis does not apply.
pub fn montrans_check(op: &OperationTable) -> Option<LemmaCheck> {
    let b = op.backend();
    let top = b.close_id(b.cn_empty());
    let c_empty = op.image_mask(top);
    let applies = check_deductivity(op).holds
        && b.theories().all(|x| op.image_mask(x).subset_of(c_empty));
    if !applies {
        return None;
    }
    let translation_ok = b
        .theories()
        .all(|x| op.image_mask(x) == b.union_theories(b.theory_mask(x), c_empty));
    Some(if op.is_monotonic() && translation_ok {
        LemmaCheck::pass("deductive-monotone-translation")
    } else {
        LemmaCheck::fail(
            "deductive-monotone-translation",
            alloc::format!(
                "monotonic={} translation={}",
                op.is_monotonic(),
                translation_ok
            ),
        )
    })
}

/// For distributive monotonic operations (compactness is automatic at this
/// scale): the operation is deductive and a translation of Cn. Returns
/// `None` when the hypothesis does not apply.
pub fn distded_check(op: &OperationTable) -> Option<LemmaCheck> {
    let b = op.backend();
    if !op.is_monotonic() || !check_distributivity(op, DistributivityForm::Pairwise).holds {
        return None;
    }
    if !is_cumulative(op) {
        return None;
    }
    let top = b.close_id(b.cn_empty());
    let c_empty = op.image_mask(top);
    let deductive = check_deductivity(op).holds;
    let translation_ok = b
        .theories()
        .all(|x| op.image_mask(x) == b.union_theories(b.theory_mask(x), c_empty));
    Some(if deductive && translation_ok {
        LemmaCheck::pass("distributive-monotone-translation")
    } else {
        LemmaCheck::fail(
            "distributive-monotone-translation",
            alloc::format!("deductive={deductive} translation={translation_ok}"),
        )
    })
}

/// Component-based strong cumulativity agrees with direct cycle checking up
/// to the given cycle length.
pub fn scc_vs_direct_cycles(op: &OperationTable, max_len: usize) -> LemmaCheck {
    let scc = check_strong_cumulativity(op).holds;
    let direct = check_strong_cumulativity_direct(op, max_len).holds;
    if scc == direct {
        LemmaCheck::pass("strong-cumulativity-scc-vs-direct")
    } else {
        LemmaCheck::fail(
            "strong-cumulativity-scc-vs-direct",
            alloc::format!("scc={scc} direct(<= {max_len})={direct}"),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backend::Backend;
    use crate::table::enumerate_all;
    use crate::worlds::Vocabulary;
    use alloc::sync::Arc;

    fn one_atom() -> Arc<Backend> {
        Backend::classical(Vocabulary::new(["p"]).unwrap())
    }

    /// C0 maps Cn(∅) to Th(p) and fixes everything else.
    fn c0() -> OperationTable {
        OperationTable::from_fn(one_atom(), |b, t| {
            if b.theory_mask(t) == b.cn_empty() {
                WorldSet(0b10)
            } else {
                b.theory_mask(t)
            }
        })
        .unwrap()
    }

    #[test]
    fn c0_is_cumulative_and_more() {
        let op = c0();
        let (cut, cm) = check_cumulativity(&op);
        assert!(cut.holds && cm.holds);
        assert!(check_strong_cumulativity(&op).holds);
        assert!(check_distributivity(&op, DistributivityForm::Full).holds);
        assert!(check_deductivity(&op).holds);
        assert!(check_rational_monotonicity(&op).holds);
        assert!(!check_monotonicity(&op).holds);
    }

    #[test]
    fn cn_satisfies_everything() {
        let op = OperationTable::cn(one_atom());
        assert!(is_cumulative(&op));
        assert!(check_strong_cumulativity(&op).holds);
        assert!(check_distributivity(&op, DistributivityForm::Full).holds);
        assert!(check_deductivity(&op).holds);
        assert!(check_rational_monotonicity(&op).holds);
        assert!(check_monotonicity(&op).holds);
    }

    #[test]
    fn all_or_nothing_is_not_distributive() {
        let op = OperationTable::all_or_nothing(one_atom());
        assert!(is_cumulative(&op));
        assert!(check_monotonicity(&op).holds);
        assert!(check_strong_cumulativity(&op).holds);
        let v = check_distributivity(&op, DistributivityForm::Pairwise);
        assert!(!v.holds);
        assert!(recheck(&op, &v));
    }

    #[test]
    fn cut_without_cm_is_detected() {
        // C(Cn(∅)) = L with all other theories fixed: Cut holds, CM fails.
        let op = OperationTable::from_fn(one_atom(), |b, t| {
            if b.theory_mask(t) == b.cn_empty() {
                WorldSet::EMPTY
            } else {
                b.theory_mask(t)
            }
        })
        .unwrap();
        assert!(check_cut(&op).holds);
        let cm = check_cautious_monotonicity(&op);
        assert!(!cm.holds);
        assert!(recheck(&op, &cm));
    }

    #[test]
    fn counterexamples_recheck_on_enumerated_tables() {
        for op in enumerate_all(&one_atom()).unwrap() {
            for v in [
                check_cut(&op),
                check_cautious_monotonicity(&op),
                check_strong_cumulativity(&op),
                check_distributivity(&op, DistributivityForm::Full),
                check_distributivity(&op, DistributivityForm::Pairwise),
                check_distributivity(&op, DistributivityForm::Conditional),
                check_deductivity(&op),
                check_rational_monotonicity(&op),
                check_monotonicity(&op),
            ] {
                if !v.holds {
                    assert!(recheck(&op, &v), "counterexample failed recheck: {v:?}");
                }
            }
        }
    }

    #[test]
    fn scc_matches_direct_cycles_on_all_one_atom_tables() {
        for op in enumerate_all(&one_atom()).unwrap() {
            assert!(scc_vs_direct_cycles(&op, 4).holds);
        }
    }

    #[test]
    fn summary_and_characterizations_agree_on_small_tables() {
        for op in enumerate_all(&one_atom()).unwrap() {
            assert!(summary_reciprocal_agrees(&op).holds);
            if is_cumulative(&op) {
                assert!(dedchar_agreement(&op).holds);
            }
            assert!(ratchar_agreement(&op).holds);
            if let Some(check) = montrans_check(&op) {
                assert!(check.holds);
            }
            if let Some(check) = distded_check(&op) {
                assert!(check.holds);
            }
        }
    }
}
