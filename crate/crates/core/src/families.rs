//! Set families and the two axiom systems evaluated on them: single ideals
//! (IB, IH, SIS, IW, plus the exactness axiom IE) and linear obstacles
//! (O1, O2, O3).
//!
//! Every checker sweeps its quantifiers in ascending mask order and reports
//! the first assignment at which the clause is false, so witnesses are
//! reproducible.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::{AxiomId, AxiomReport};
use crate::subset::{ElementId, Subset};
use crate::system::ConnectivitySystem;

/// A deduplicated family of subsets of an `n`-element ground set, kept in
/// ascending mask order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetFamily {
    n: usize,
    members: Vec<Subset>,
}

impl SetFamily {
    pub fn new<I: IntoIterator<Item = Subset>>(n: usize, members: I) -> Result<SetFamily> {
        let mut members: Vec<Subset> = members.into_iter().collect();
        if let Some(bad) = members.iter().find(|m| !m.fits(n)) {
            return Err(Error::MaskOutOfRange {
                mask: bad.mask() as u64,
                n,
            });
        }
        members.sort_unstable();
        members.dedup();
        Ok(SetFamily { n, members })
    }

    /// Builds from raw masks as they appear in family files.
    pub fn from_masks(n: usize, masks: &[u64]) -> Result<SetFamily> {
        let limit = 1u64 << n.min(63);
        if let Some(&bad) = masks.iter().find(|&&m| m >= limit || m > u32::MAX as u64) {
            return Err(Error::MaskOutOfRange { mask: bad, n });
        }
        SetFamily::new(n, masks.iter().map(|&m| Subset(m as u32)))
    }

    /// Caller guarantees `members` are strictly ascending and fit `n`.
    pub(crate) fn from_sorted_unchecked(n: usize, members: Vec<Subset>) -> SetFamily {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        SetFamily { n, members }
    }

    pub fn empty(n: usize) -> SetFamily {
        SetFamily { n, members: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    #[inline]
    pub fn contains(&self, a: Subset) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn to_file(&self) -> FamilyFile {
        FamilyFile {
            members: self.members.iter().map(|m| m.mask() as u64).collect(),
        }
    }
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

/// On-disk form of a family: `{"members": [mask, ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyFile {
    pub members: Vec<u64>,
}

/// How the downward-closure axiom IH is read.
///
/// `Literal` demands every proper subset of a member be a member.
/// `Guarded` demands it only of proper subsets that are k-efficient, which is
/// the form O2 takes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IhVariant {
    Literal,
    #[default]
    Guarded,
}

impl IhVariant {
    pub const ALL: [IhVariant; 2] = [IhVariant::Literal, IhVariant::Guarded];
}

impl fmt::Display for IhVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IhVariant::Literal => "literal",
            IhVariant::Guarded => "guarded",
        })
    }
}

impl FromStr for IhVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "literal" => Ok(IhVariant::Literal),
            "guarded" => Ok(IhVariant::Guarded),
            other => Err(format!("unknown IH variant {other:?} (expected literal or guarded)")),
        }
    }
}

/// Whether a conjunction check stops at the first failing axiom.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ReportMode {
    #[default]
    All,
    FailFast,
}

/// Outcome of a conjunction of axioms: the verdict and every failing report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    pub failures: Vec<AxiomReport>,
}

fn assert_compatible(sys: &ConnectivitySystem, family: &SetFamily) {
    assert_eq!(
        sys.n(),
        family.n(),
        "family over {} elements checked against a system over {}",
        family.n(),
        sys.n()
    );
}

fn check_bounded(axiom: AxiomId, sys: &ConnectivitySystem, family: &SetFamily, k: u32) -> AxiomReport {
    assert_compatible(sys, family);
    match family.members().iter().find(|&&a| sys.eval(a) > k) {
        Some(&a) => AxiomReport::fail(axiom, vec![a], None, format!("f(A) = {} > k = {k}", sys.eval(a))),
        None => AxiomReport::pass(axiom),
    }
}

/// IB: every member is k-efficient.
pub fn check_ib(sys: &ConnectivitySystem, family: &SetFamily, k: u32) -> AxiomReport {
    check_bounded(AxiomId::IB, sys, family, k)
}

/// O1: the same clause as IB, reported under its own label.
pub fn check_o1(sys: &ConnectivitySystem, family: &SetFamily, k: u32) -> AxiomReport {
    check_bounded(AxiomId::O1, sys, family, k)
}

/// Shared sweep for IH and O2: for each member `B` and each `A ⊆ B` (proper
/// only if `proper`) passing `guard`, `A` must be a member. Witness `(A, B)`.
fn check_down_closed(
    axiom: AxiomId,
    sys: &ConnectivitySystem,
    family: &SetFamily,
    proper: bool,
    guard: Option<u32>,
) -> AxiomReport {
    assert_compatible(sys, family);
    for &b in family.members() {
        for a in b.submasks() {
            if proper && a == b {
                continue;
            }
            if guard.is_some_and(|k| sys.eval(a) > k) {
                continue;
            }
            if !family.contains(a) {
                let note = match guard {
                    Some(k) => format!("A ⊆ B with f(A) = {} ≤ {k} is missing", sys.eval(a)),
                    None => format!("proper subset A of B is missing (f(A) = {})", sys.eval(a)),
                };
                return AxiomReport::fail(axiom, vec![a, b], None, note);
            }
        }
    }
    AxiomReport::pass(axiom)
}

/// IH: members are closed under proper subsets, restricted to k-efficient
/// subsets in the guarded variant.
pub fn check_ih(sys: &ConnectivitySystem, family: &SetFamily, k: u32, variant: IhVariant) -> AxiomReport {
    let guard = match variant {
        IhVariant::Literal => None,
        IhVariant::Guarded => Some(k),
    };
    check_down_closed(AxiomId::IH, sys, family, true, guard)
}

/// O2: every k-efficient subset of a member is a member.
pub fn check_o2(sys: &ConnectivitySystem, family: &SetFamily, k: u32) -> AxiomReport {
    check_down_closed(AxiomId::O2, sys, family, false, Some(k))
}

/// SIS: a member `A` grows by any `e` with `f({e}) <= k` and
/// `f(A ∪ {e}) <= k`. Witness `A` plus the element `e`.
pub fn check_sis(sys: &ConnectivitySystem, family: &SetFamily, k: u32) -> AxiomReport {
    assert_compatible(sys, family);
    let light: Vec<ElementId> = sys
        .elements()
        .filter(|&e| sys.eval(Subset::singleton(e)) <= k)
        .collect();
    for &a in family.members() {
        for &e in &light {
            if a.contains(e) {
                continue;
            }
            let grown = a.with(e);
            if sys.eval(grown) <= k && !family.contains(grown) {
                return AxiomReport::fail(
                    AxiomId::SIS,
                    vec![a],
                    Some(e),
                    format!(
                        "f({{e}}) = {}, f(A∪{{e}}) = {} but A∪{{e}} is missing",
                        sys.eval(Subset::singleton(e)),
                        sys.eval(grown)
                    ),
                );
            }
        }
    }
    AxiomReport::pass(AxiomId::SIS)
}

/// IW: the whole ground set is not a member.
pub fn check_iw(sys: &ConnectivitySystem, family: &SetFamily) -> AxiomReport {
    assert_compatible(sys, family);
    let x = sys.full();
    if family.contains(x) {
        AxiomReport::fail(AxiomId::IW, vec![x], None, String::from("X is a member"))
    } else {
        AxiomReport::pass(AxiomId::IW)
    }
}

/// IE: for every k-efficient `A`, exactly one of `A` and `X \ A` is a member.
pub fn check_ie(sys: &ConnectivitySystem, family: &SetFamily, k: u32) -> AxiomReport {
    assert_compatible(sys, family);
    let n = sys.n();
    for a in sys.subsets() {
        if sys.eval(a) > k {
            continue;
        }
        let here = family.contains(a);
        if here == family.contains(a.complement(n)) {
            let note = if here {
                "both A and X\\A are members"
            } else {
                "neither A nor X\\A is a member"
            };
            return AxiomReport::fail(AxiomId::IE, vec![a], None, note.to_string());
        }
    }
    AxiomReport::pass(AxiomId::IE)
}

/// O3: for disjoint k-efficient `A`, `B` whose union misses at most one
/// element `C`, at least one of `A`, `B` is a member. Witness `(A, B, C)`.
///
/// Taking `C = X \ (A ∪ B)` covers every triple the axiom quantifies over:
/// a larger `C` overlapping `A` or `B` triggers the clause for the same pair.
pub fn check_o3(sys: &ConnectivitySystem, family: &SetFamily, k: u32) -> AxiomReport {
    assert_compatible(sys, family);
    let n = sys.n();
    for a in sys.subsets() {
        if sys.eval(a) > k || family.contains(a) {
            continue;
        }
        let rest = a.complement(n);
        // Ascending: drop the highest remaining element first, `rest` last.
        let dropped: Vec<ElementId> = rest.elements().collect();
        let candidates = dropped
            .iter()
            .rev()
            .map(|&e| (rest.without(e), Subset::singleton(e)))
            .chain(std::iter::once((rest, Subset::EMPTY)));
        for (b, c) in candidates {
            if sys.eval(b) <= k && !family.contains(b) {
                return AxiomReport::fail(
                    AxiomId::O3,
                    vec![a, b, c],
                    None,
                    format!("f(A) = {}, f(B) = {} and neither is a member", sys.eval(a), sys.eval(b)),
                );
            }
        }
    }
    AxiomReport::pass(AxiomId::O3)
}

fn conjunction<F>(mode: ReportMode, checks: &mut [F]) -> Verdict
where
    F: FnMut() -> AxiomReport,
{
    let mut failures = Vec::new();
    for check in checks.iter_mut() {
        let r = check();
        if !r.holds {
            failures.push(r);
            if mode == ReportMode::FailFast {
                break;
            }
        }
    }
    Verdict {
        holds: failures.is_empty(),
        failures,
    }
}

/// IB ∧ IH ∧ SIS ∧ IW, plus IE when `require_ie`.
pub fn is_single_ideal(
    sys: &ConnectivitySystem,
    family: &SetFamily,
    k: u32,
    variant: IhVariant,
    require_ie: bool,
) -> Verdict {
    is_single_ideal_with(sys, family, k, variant, require_ie, ReportMode::All)
}

pub fn is_single_ideal_with(
    sys: &ConnectivitySystem,
    family: &SetFamily,
    k: u32,
    variant: IhVariant,
    require_ie: bool,
    mode: ReportMode,
) -> Verdict {
    let mut checks: Vec<Box<dyn FnMut() -> AxiomReport + '_>> = vec![
        Box::new(|| check_ib(sys, family, k)),
        Box::new(|| check_ih(sys, family, k, variant)),
        Box::new(|| check_sis(sys, family, k)),
        Box::new(|| check_iw(sys, family)),
    ];
    if require_ie {
        checks.push(Box::new(|| check_ie(sys, family, k)));
    }
    conjunction(mode, &mut checks)
}

/// O1 ∧ O2 ∧ O3.
pub fn is_linear_obstacle(sys: &ConnectivitySystem, family: &SetFamily, k: u32) -> Verdict {
    is_linear_obstacle_with(sys, family, k, ReportMode::All)
}

pub fn is_linear_obstacle_with(sys: &ConnectivitySystem, family: &SetFamily, k: u32, mode: ReportMode) -> Verdict {
    let mut checks: Vec<Box<dyn FnMut() -> AxiomReport + '_>> = vec![
        Box::new(|| check_o1(sys, family, k)),
        Box::new(|| check_o2(sys, family, k)),
        Box::new(|| check_o3(sys, family, k)),
    ];
    conjunction(mode, &mut checks)
}
