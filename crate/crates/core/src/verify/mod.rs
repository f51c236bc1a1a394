//! Verification harnesses: the two derived inequalities of a symmetric
//! submodular function, the equivalence between single ideals with IE and
//! linear obstacles, and the duality between single ideals and linear-width.
//!
//! Reports are plain data and serialize deterministically; timing is left to
//! callers so reruns produce byte-identical JSON.

pub mod slow;

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::families::{
    is_linear_obstacle, is_linear_obstacle_with, is_single_ideal, is_single_ideal_with, IhVariant, ReportMode,
    SetFamily, Verdict,
};
use crate::guards::Guards;
use crate::report::{AxiomId, AxiomReport};
use crate::search::{efficient_sets, enumerate_families, find_single_ideal_with_ie, linear_width, Ordering};
use crate::subset::Subset;
use crate::system::{ConnectivitySystem, Provenance};

/// Axioms a family must satisfy to count as an ideal in the harnesses.
pub const IDEAL_AXIOMS: &str = "IB+IH+SIS+IW+IE";

/// Upper bound on the number of blocks a family sweep is cut into.
const SWEEP_BLOCKS: u64 = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Harness {
    Lemma1,
    Theorem1,
    Duality,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Confirmed,
    Mismatch,
    PreconditionFailed,
    BudgetExceeded,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Confirmed => "confirmed",
            Outcome::Mismatch => "mismatch",
            Outcome::PreconditionFailed => "precondition_failed",
            Outcome::BudgetExceeded => "budget_exceeded",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemSummary {
    pub name: String,
    pub kind: Provenance,
    pub n: usize,
}

impl SystemSummary {
    pub fn of(sys: &ConnectivitySystem) -> SystemSummary {
        SystemSummary {
            name: sys.source().to_string(),
            kind: sys.provenance(),
            n: sys.n(),
        }
    }
}

/// A family on which the two axiom systems disagree, with full reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub family: Vec<Subset>,
    pub single_ideal: Verdict,
    pub linear_obstacle: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub harness: Harness,
    pub system: SystemSummary,
    pub k: Option<u32>,
    pub variant: Option<IhVariant>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal_axioms: Option<String>,
    pub outcome: Outcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub precondition: Option<AxiomReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub reports: Vec<AxiomReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lw: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ordering: Option<Ordering>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exists_ideal: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<Vec<Subset>>,
    pub mismatches: Vec<Mismatch>,
    /// Families on which the fast and direct evaluators disagreed.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub evaluator_disagreements: Vec<Vec<Subset>>,
    pub counts: BTreeMap<String, u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerificationReport {
    fn new(harness: Harness, sys: &ConnectivitySystem, k: Option<u32>, variant: Option<IhVariant>) -> Self {
        VerificationReport {
            harness,
            system: SystemSummary::of(sys),
            k,
            variant,
            ideal_axioms: None,
            outcome: Outcome::Confirmed,
            precondition: None,
            reports: Vec::new(),
            lw: None,
            ordering: None,
            exists_ideal: None,
            ideal: None,
            mismatches: Vec::new(),
            evaluator_disagreements: Vec::new(),
            counts: BTreeMap::new(),
            note: None,
        }
    }

    fn count(&mut self, key: &str, value: u64) {
        self.counts.insert(key.to_string(), value);
    }

    pub fn counted(&self, key: &str) -> u64 {
        self.counts.get(key).copied().unwrap_or(0)
    }

    fn exceeded(mut self, note: String) -> Self {
        self.outcome = Outcome::BudgetExceeded;
        self.note = Some(note);
        self
    }
}

/// Checks `f(A) >= f(∅) = f(X)` for all `A` (`L1a`) and
/// `f(A) + f(B) >= f(A \ B) + f(B \ A)` for all pairs (`L1b`).
pub fn check_lemma1(sys: &ConnectivitySystem, guards: &Guards) -> VerificationReport {
    let report = VerificationReport::new(Harness::Lemma1, sys, None, None);
    if sys.n() > guards.validate_max_n {
        let note = format!(
            "ground set of {} exceeds validate_max_n = {}",
            sys.n(),
            guards.validate_max_n
        );
        return report.exceeded(note);
    }
    let mut report = report;
    let bottom = sys.eval(Subset::EMPTY);
    let top = sys.eval(sys.full());
    let l1a = if bottom != top {
        AxiomReport::fail(
            AxiomId::L1a,
            vec![sys.full()],
            None,
            format!("f(X) = {top} but f(∅) = {bottom}"),
        )
    } else {
        match sys.subsets().find(|&a| sys.eval(a) < bottom) {
            Some(a) => AxiomReport::fail(
                AxiomId::L1a,
                vec![a],
                None,
                format!("f(A) = {} < f(∅) = {bottom}", sys.eval(a)),
            ),
            None => AxiomReport::pass(AxiomId::L1a),
        }
    };

    let mut l1b = AxiomReport::pass(AxiomId::L1b);
    'outer: for a in sys.subsets() {
        for b in sys.subsets() {
            let lhs = sys.eval(a) as u64 + sys.eval(b) as u64;
            let rhs = sys.eval(a.difference(b)) as u64 + sys.eval(b.difference(a)) as u64;
            if lhs < rhs {
                l1b = AxiomReport::fail(
                    AxiomId::L1b,
                    vec![a, b],
                    None,
                    format!("f(A) + f(B) = {lhs} < f(A\\B) + f(B\\A) = {rhs}"),
                );
                break 'outer;
            }
        }
    }
    let n = sys.subsets().count() as u64;
    report.count("sets", n);
    report.count("pairs", n * n);
    if !(l1a.holds && l1b.holds) {
        report.outcome = Outcome::Mismatch;
    }
    report.reports = vec![l1a, l1b];
    report
}

/// Every singleton is k-efficient.
pub fn precondition_singletons(sys: &ConnectivitySystem, k: u32) -> AxiomReport {
    match sys.elements().find(|&e| sys.eval(Subset::singleton(e)) > k) {
        Some(e) => AxiomReport::fail(
            AxiomId::PRE,
            vec![Subset::singleton(e)],
            Some(e),
            format!("f({{{e}}}) = {} > k = {k}", sys.eval(Subset::singleton(e))),
        ),
        None => AxiomReport::pass(AxiomId::PRE),
    }
}

#[derive(Default)]
struct Tally {
    examined: u64,
    both: u64,
    ideal_only: u64,
    obstacle_only: u64,
    neither: u64,
    disagreements: Vec<Vec<Subset>>,
    disagreement_count: u64,
    mismatches: Vec<Mismatch>,
    mismatch_count: u64,
}

/// Sweeps every family of k-efficient sets, comparing "single ideal with IE"
/// against "linear obstacle".
///
/// Each family is evaluated by the fast checkers and by the direct
/// evaluators in [`slow`]. A family is reported as a mismatch only when both
/// routes agree that the two verdicts differ; route disagreements are
/// recorded separately. If the singleton precondition fails the sweep still
/// runs, but the outcome is `precondition_failed`.
pub fn theorem1_crosscheck(
    sys: &ConnectivitySystem,
    k: u32,
    variant: IhVariant,
    guards: &Guards,
    jobs: usize,
) -> VerificationReport {
    let mut report = VerificationReport::new(Harness::Theorem1, sys, Some(k), Some(variant));
    report.ideal_axioms = Some(IDEAL_AXIOMS.to_string());
    let pre = precondition_singletons(sys, k);
    let pre_holds = pre.holds;
    report.precondition = Some(pre);
    report.count("efficient_sets", efficient_sets(sys, k).len() as u64);

    if sys.n() > guards.slow_max_n {
        let note = format!("ground set of {} exceeds slow_max_n = {}", sys.n(), guards.slow_max_n);
        return report.exceeded(note);
    }
    let families = match enumerate_families(sys, k, guards) {
        Ok(f) => f,
        Err(e) => return report.exceeded(e.to_string()),
    };

    let total = families.total();
    let block = total.div_ceil(SWEEP_BLOCKS).max(1);
    let ranges: Vec<(u64, u64)> = (0..total)
        .step_by(block as usize)
        .map(|s| (s, (s + block).min(total)))
        .collect();
    let cap = guards.mismatch_cap;
    let sweep = |&(start, end): &(u64, u64)| {
        let mut t = Tally::default();
        for fam in families.clone().range(start, end) {
            sweep_one(sys, &fam, k, variant, cap, &mut t);
        }
        t
    };
    let tallies: Vec<Tally> = match jobs {
        0 | 1 => ranges.iter().map(sweep).collect(),
        _ => match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(|| ranges.par_iter().map(sweep).collect()),
            Err(_) => ranges.iter().map(sweep).collect(),
        },
    };

    let mut total_tally = Tally::default();
    for t in tallies {
        total_tally.examined += t.examined;
        total_tally.both += t.both;
        total_tally.ideal_only += t.ideal_only;
        total_tally.obstacle_only += t.obstacle_only;
        total_tally.neither += t.neither;
        total_tally.disagreement_count += t.disagreement_count;
        total_tally.mismatch_count += t.mismatch_count;
        let room = cap.saturating_sub(total_tally.mismatches.len());
        total_tally.mismatches.extend(t.mismatches.into_iter().take(room));
        let room = cap.saturating_sub(total_tally.disagreements.len());
        total_tally.disagreements.extend(t.disagreements.into_iter().take(room));
    }
    let t = total_tally;
    report.count("families_examined", t.examined);
    report.count("ideal_and_obstacle", t.both);
    report.count("ideal_only", t.ideal_only);
    report.count("obstacle_only", t.obstacle_only);
    report.count("neither", t.neither);
    report.count("evaluator_disagreements", t.disagreement_count);
    report.count("mismatches_total", t.mismatch_count);
    report.count("mismatches_listed", t.mismatches.len() as u64);
    report.mismatches = t.mismatches;
    report.evaluator_disagreements = t.disagreements;
    report.outcome = if !pre_holds {
        Outcome::PreconditionFailed
    } else if t.mismatch_count > 0 || t.disagreement_count > 0 {
        Outcome::Mismatch
    } else {
        Outcome::Confirmed
    };
    report
}

fn sweep_one(sys: &ConnectivitySystem, fam: &SetFamily, k: u32, variant: IhVariant, cap: usize, t: &mut Tally) {
    t.examined += 1;
    let ideal = is_single_ideal_with(sys, fam, k, variant, true, ReportMode::FailFast).holds;
    let obstacle = is_linear_obstacle_with(sys, fam, k, ReportMode::FailFast).holds;
    let masks: Vec<u32> = fam.members().iter().map(|s| s.mask()).collect();
    let slow_ideal = slow::is_single_ideal(sys, &masks, k, variant, true);
    let slow_obstacle = slow::is_linear_obstacle(sys, &masks, k);

    if ideal != slow_ideal || obstacle != slow_obstacle {
        t.disagreement_count += 1;
        if t.disagreements.len() < cap {
            t.disagreements.push(fam.members().to_vec());
        }
    }
    match (slow_ideal, slow_obstacle) {
        (true, true) => t.both += 1,
        (true, false) => t.ideal_only += 1,
        (false, true) => t.obstacle_only += 1,
        (false, false) => t.neither += 1,
    }
    if ideal != obstacle && slow_ideal != slow_obstacle {
        t.mismatch_count += 1;
        if t.mismatches.len() < cap {
            t.mismatches.push(Mismatch {
                family: fam.members().to_vec(),
                single_ideal: is_single_ideal(sys, fam, k, variant, true),
                linear_obstacle: is_linear_obstacle(sys, fam, k),
            });
        }
    }
}

/// Compares "linear-width >= k + 1" with "a single ideal satisfying IE
/// exists" on one system.
///
/// The report carries the width, an optimal ordering when the width is at
/// most `k`, and the ideal found when one exists.
pub fn duality_check(sys: &ConnectivitySystem, k: u32, variant: IhVariant, guards: &Guards) -> VerificationReport {
    let mut report = VerificationReport::new(Harness::Duality, sys, Some(k), Some(variant));
    report.ideal_axioms = Some(IDEAL_AXIOMS.to_string());
    let pre = precondition_singletons(sys, k);
    let pre_holds = pre.holds;
    report.precondition = Some(pre);
    report.count("efficient_sets", efficient_sets(sys, k).len() as u64);

    let width = match linear_width(sys, guards) {
        Ok(w) => w,
        Err(e) => return report.exceeded(e.to_string()),
    };
    let ideal = match find_single_ideal_with_ie(sys, k, variant, guards) {
        Ok(i) => i,
        Err(e) => return report.exceeded(e.to_string()),
    };
    let wide = width.width > k;
    report.lw = Some(width.width);
    report.exists_ideal = Some(ideal.is_some());
    if !wide {
        report.ordering = Some(width.ordering);
    }
    if let Some(fam) = &ideal {
        report.ideal = Some(fam.members().to_vec());
    }
    report.outcome = if !pre_holds {
        Outcome::PreconditionFailed
    } else if wide == ideal.is_some() {
        Outcome::Confirmed
    } else {
        Outcome::Mismatch
    };
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::system::{make_explicit, make_graph_cut, Graph};

    fn cut(g: Graph) -> ConnectivitySystem {
        make_graph_cut(&g).unwrap()
    }

    #[test]
    fn lemma1_examples() {
        let g = Guards::default();
        for sys in [cut(Graph::path(3)), cut(Graph::complete(4))] {
            let r = check_lemma1(&sys, &g);
            assert_eq!(r.outcome, Outcome::Confirmed);
            assert!(r.reports.iter().all(|r| r.holds));
        }
        let bad = make_explicit(2, vec![0, 1, 1, 1], false).unwrap();
        let r = check_lemma1(&bad, &g);
        assert_eq!(r.outcome, Outcome::Mismatch);
        assert_eq!(r.reports[0].axiom, AxiomId::L1a);
        assert_eq!(r.reports[0].witnesses, vec![Subset(0b11)]);
    }

    #[test]
    fn lemma1_guard() {
        let g = Guards {
            validate_max_n: 2,
            ..Guards::default()
        };
        assert_eq!(check_lemma1(&cut(Graph::path(3)), &g).outcome, Outcome::BudgetExceeded);
    }

    #[test]
    fn precondition_examples() {
        let k4 = cut(Graph::complete(4));
        assert!(precondition_singletons(&k4, 3).holds);
        let p3 = cut(Graph::path(3));
        let r = precondition_singletons(&p3, 1);
        assert_eq!(r.element, Some(crate::subset::ElementId(1)));
        assert!(precondition_singletons(&p3, p3.max_value()).holds);
    }

    #[test]
    fn theorem1_examples() {
        let g = Guards::default();
        let k4 = cut(Graph::complete(4));
        let r = theorem1_crosscheck(&k4, 3, IhVariant::Guarded, &g, 1);
        assert_eq!(r.counted("families_examined"), 1024);
        assert_eq!(r.counted("efficient_sets"), 10);
        assert_eq!(r.counted("ideal_only"), 0);
        assert_eq!(r.counted("evaluator_disagreements"), 0);
        assert!(r
            .mismatches
            .iter()
            .all(|m| m.family != vec![Subset(0), Subset(1), Subset(2), Subset(4), Subset(8)]));

        let p3 = cut(Graph::path(3));
        let r = theorem1_crosscheck(&p3, 0, IhVariant::Guarded, &g, 1);
        assert_eq!(r.outcome, Outcome::PreconditionFailed);
        assert_eq!(r.counted("families_examined"), 4);

        let small = Guards {
            max_efficient: 4,
            ..Guards::default()
        };
        let r = theorem1_crosscheck(&k4, 3, IhVariant::Guarded, &small, 1);
        assert_eq!(r.outcome, Outcome::BudgetExceeded);
        assert_eq!(r.counted("efficient_sets"), 10);
    }

    #[test]
    fn theorem1_is_independent_of_jobs() {
        let g = Guards::default();
        let c4 = cut(Graph::cycle(4));
        let one = theorem1_crosscheck(&c4, 2, IhVariant::Literal, &g, 1);
        let four = theorem1_crosscheck(&c4, 2, IhVariant::Literal, &g, 4);
        assert_eq!(one, four);
    }

    #[test]
    fn duality_examples() {
        let g = Guards::default();
        let k4 = cut(Graph::complete(4));
        let r = duality_check(&k4, 3, IhVariant::Guarded, &g);
        assert_eq!(
            (r.outcome, r.lw, r.exists_ideal),
            (Outcome::Confirmed, Some(4), Some(true))
        );
        assert!(r.ordering.is_none());
        for (sys, k, lw) in [(cut(Graph::path(3)), 2, 1), (cut(Graph::cycle(4)), 2, 2)] {
            let r = duality_check(&sys, k, IhVariant::Guarded, &g);
            assert_eq!(
                (r.outcome, r.lw, r.exists_ideal),
                (Outcome::Confirmed, Some(lw), Some(false))
            );
            assert!(r.ordering.is_some());
        }
    }
}
