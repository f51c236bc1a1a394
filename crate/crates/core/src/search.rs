//! Enumeration of k-efficient sets and candidate families, exact linear-width,
//! and the search for single ideals satisfying IE.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{check_ih, is_single_ideal, IhVariant, SetFamily};
use crate::guards::Guards;
use crate::subset::{ElementId, Subset};
use crate::system::ConnectivitySystem;

/// A permutation of the ground set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Ordering(Vec<ElementId>);

impl Ordering {
    /// Fails unless `elements` is a permutation of `0..n`.
    pub fn new(n: usize, elements: Vec<ElementId>) -> Result<Ordering> {
        let mut seen = vec![false; n];
        let valid = elements.len() == n
            && elements
                .iter()
                .all(|e| e.index() < n && !std::mem::replace(&mut seen[e.index()], true));
        if valid {
            Ok(Ordering(elements))
        } else {
            Err(Error::Instance(format!("not a permutation of 0..{n}: {elements:?}")))
        }
    }

    pub fn elements(&self) -> &[ElementId] {
        &self.0
    }

    /// Prefix sets `{e1}`, `{e1, e2}`, ..., `X`.
    pub fn prefixes(&self) -> impl Iterator<Item = Subset> + '_ {
        self.0.iter().scan(Subset::EMPTY, |acc, &e| {
            *acc = acc.with(e);
            Some(*acc)
        })
    }

    /// Largest `f` over the non-empty prefixes.
    pub fn width(&self, sys: &ConnectivitySystem) -> u32 {
        self.prefixes().map(|p| sys.eval(p)).max().unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WidthResult {
    pub width: u32,
    pub ordering: Ordering,
}

/// All k-efficient subsets in ascending mask order.
pub fn efficient_sets(sys: &ConnectivitySystem, k: u32) -> SetFamily {
    let members = sys.subsets().filter(|&a| sys.eval(a) <= k).collect();
    SetFamily::from_sorted_unchecked(sys.n(), members)
}

/// Subset DP table: `dp[S]` is the least achievable maximum of `f` over the
/// prefixes of an ordering of `S` (with `dp[∅] = 0`).
pub fn prefix_width_table(sys: &ConnectivitySystem, guards: &Guards) -> Result<Vec<u32>> {
    Guards::check("ground set size for the width DP", "dp_max_n", sys.n(), guards.dp_max_n)?;
    let mut dp = vec![0u32; sys.values().len()];
    for s in 1..dp.len() {
        let mut best = u32::MAX;
        let mut rest = s;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            best = best.min(dp[s ^ bit]);
            rest ^= bit;
        }
        dp[s] = best.max(sys.values()[s]);
    }
    Ok(dp)
}

/// Exact linear-width by dynamic programming over subsets.
///
/// The ordering is rebuilt backwards from `X`, removing at each step the
/// lowest-indexed element that attains the optimum.
pub fn linear_width(sys: &ConnectivitySystem, guards: &Guards) -> Result<WidthResult> {
    let dp = prefix_width_table(sys, guards)?;
    let mut s = sys.full();
    let mut reversed = Vec::with_capacity(sys.n());
    while !s.is_empty() {
        let e = s
            .elements()
            .find(|&e| dp[s.without(e).index()].max(sys.eval(s)) == dp[s.index()])
            .expect("some element attains the minimum");
        reversed.push(e);
        s = s.without(e);
    }
    reversed.reverse();
    let ordering = Ordering(reversed);
    let width = dp[sys.full().index()];
    debug_assert_eq!(ordering.width(sys), width);
    Ok(WidthResult { width, ordering })
}

/// Linear-width by trying all `n!` orderings; the first optimum in
/// lexicographic order is returned.
pub fn linear_width_bruteforce(sys: &ConnectivitySystem, guards: &Guards) -> Result<WidthResult> {
    Guards::check(
        "ground set size for the brute-force oracle",
        "brute_max_n",
        sys.n(),
        guards.brute_max_n,
    )?;
    let mut best: Option<(u32, Vec<ElementId>)> = None;
    for perm in sys.elements().permutations(sys.n()) {
        let mut prefix = Subset::EMPTY;
        let mut worst = 0;
        for &e in &perm {
            prefix = prefix.with(e);
            worst = worst.max(sys.eval(prefix));
        }
        if best.as_ref().is_none_or(|(w, _)| worst < *w) {
            best = Some((worst, perm));
        }
    }
    let (width, perm) = best.expect("n >= 1 yields at least one ordering");
    Ok(WidthResult {
        width,
        ordering: Ordering(perm),
    })
}

/// Optional pruning applied while enumerating families.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FamilyFilter {
    #[default]
    All,
    /// Skip families that already violate the guarded form of IH.
    GuardedIh,
}

/// Every subfamily of the k-efficient sets, once each. Family `i` holds the
/// efficient sets whose position is a set bit of `i`.
#[derive(Clone, Debug)]
pub struct FamilyEnumerator<'a> {
    sys: &'a ConnectivitySystem,
    k: u32,
    efficient: Vec<Subset>,
    next: u64,
    end: u64,
    filter: FamilyFilter,
}

/// Enumerates every family of k-efficient sets in index order.
pub fn enumerate_families<'a>(sys: &'a ConnectivitySystem, k: u32, guards: &Guards) -> Result<FamilyEnumerator<'a>> {
    let efficient = efficient_sets(sys, k).members().to_vec();
    Guards::check(
        "k-efficient sets",
        "max_efficient",
        efficient.len(),
        guards.max_efficient.min(62),
    )?;
    let end = 1u64 << efficient.len();
    Ok(FamilyEnumerator {
        sys,
        k,
        efficient,
        next: 0,
        end,
        filter: FamilyFilter::All,
    })
}

impl<'a> FamilyEnumerator<'a> {
    pub fn with_filter(mut self, filter: FamilyFilter) -> Self {
        self.filter = filter;
        self
    }

    /// Number of candidate families before filtering.
    pub fn total(&self) -> u64 {
        self.end
    }

    pub fn efficient(&self) -> &[Subset] {
        &self.efficient
    }

    /// Restricts the enumeration to indices `start..end`.
    pub fn range(mut self, start: u64, end: u64) -> Self {
        self.next = start.min(self.end);
        self.end = end.min(self.end);
        self
    }

    /// The family with index `i`, ignoring the filter.
    pub fn family(&self, i: u64) -> SetFamily {
        let members = self
            .efficient
            .iter()
            .enumerate()
            .filter(|&(j, _)| i >> j & 1 == 1)
            .map(|(_, &s)| s)
            .collect();
        SetFamily::from_sorted_unchecked(self.sys.n(), members)
    }
}

impl Iterator for FamilyEnumerator<'_> {
    type Item = SetFamily;

    fn next(&mut self) -> Option<SetFamily> {
        while self.next < self.end {
            let fam = self.family(self.next);
            self.next += 1;
            match self.filter {
                FamilyFilter::All => return Some(fam),
                FamilyFilter::GuardedIh => {
                    if check_ih(self.sys, &fam, self.k, IhVariant::Guarded).holds {
                        return Some(fam);
                    }
                }
            }
        }
        None
    }
}

/// Backtracking search for a family satisfying IB, IH (per `variant`), SIS,
/// IW and IE.
///
/// IE forces exactly one choice per complement pair of k-efficient sets, so
/// the search branches over pairs. Every axiom is an implication between
/// membership literals and is propagated after each choice; an exhausted
/// search (`Ok(None)`) proves no such family exists.
pub fn find_single_ideal_with_ie(
    sys: &ConnectivitySystem,
    k: u32,
    variant: IhVariant,
    guards: &Guards,
) -> Result<Option<SetFamily>> {
    let mut search = IdealSearch::new(sys, k, variant)?;
    Guards::check("complement pairs", "max_pairs", search.pairs.len(), guards.max_pairs)?;
    let found = search.solve();
    if let Some(fam) = &found {
        debug_assert!(is_single_ideal(sys, fam, k, variant, true).holds);
    }
    Ok(found)
}

struct IdealSearch {
    n: usize,
    sets: Vec<Subset>,
    complement: Vec<usize>,
    /// Implications of `A ∈ S`: these sets must be members too.
    forces_in: Vec<Vec<usize>>,
    /// Implications of `A ∉ S`: these sets must be non-members too.
    forces_out: Vec<Vec<usize>>,
    /// Sets that can never be members (literal IH with an inefficient subset).
    blocked: Vec<bool>,
    /// One representative per complement pair, in branching order.
    pairs: Vec<usize>,
    state: Vec<Option<bool>>,
    trail: Vec<usize>,
}

impl IdealSearch {
    fn new(sys: &ConnectivitySystem, k: u32, variant: IhVariant) -> Result<IdealSearch> {
        let n = sys.n();
        let sets = efficient_sets(sys, k).members().to_vec();
        let index = |s: Subset| sets.binary_search(&s).ok();
        let m = sets.len();
        let mut complement = Vec::with_capacity(m);
        for &s in &sets {
            let c = s.complement(n);
            match index(c) {
                Some(j) => complement.push(j),
                None => {
                    return Err(Error::Symmetry {
                        mask: s.mask(),
                        complement: c.mask(),
                        value: sys.eval(s),
                        complement_value: sys.eval(c),
                        width: n,
                    })
                }
            }
        }

        let mut forces_in = vec![Vec::new(); m];
        let mut forces_out = vec![Vec::new(); m];
        let mut proper_subsets = vec![0u64; m];
        for (b, &big) in sets.iter().enumerate() {
            for (a, &small) in sets.iter().enumerate() {
                if small.is_proper_subset_of(big) {
                    // IH: B ∈ S ⇒ A ∈ S
                    forces_in[b].push(a);
                    forces_out[a].push(b);
                    proper_subsets[b] += 1;
                }
            }
        }
        let blocked = match variant {
            IhVariant::Guarded => vec![false; m],
            IhVariant::Literal => sets
                .iter()
                .zip(&proper_subsets)
                .map(|(s, &count)| count + 1 < 1u64 << s.len())
                .collect(),
        };
        let light: Vec<ElementId> = sys
            .elements()
            .filter(|&e| sys.eval(Subset::singleton(e)) <= k)
            .collect();
        for (a, &s) in sets.iter().enumerate() {
            for &e in &light {
                if s.contains(e) {
                    continue;
                }
                if let Some(b) = index(s.with(e)) {
                    // SIS: A ∈ S ⇒ A ∪ {e} ∈ S
                    forces_in[a].push(b);
                    forces_out[b].push(a);
                }
            }
        }

        let mut pairs: Vec<usize> = (0..m).filter(|&i| i < complement[i]).collect();
        pairs.sort_by_key(|&i| (sys.eval(sets[i]), sets[i]));

        Ok(IdealSearch {
            n,
            sets,
            complement,
            forces_in,
            forces_out,
            blocked,
            pairs,
            state: vec![None; m],
            trail: Vec::new(),
        })
    }

    /// Assigns `set := value` and everything it implies. On conflict the
    /// caller undoes to its own trail mark.
    fn assign(&mut self, set: usize, value: bool) -> bool {
        let mut queue = vec![(set, value)];
        while let Some((i, v)) = queue.pop() {
            match self.state[i] {
                Some(cur) if cur == v => continue,
                Some(_) => return false,
                None => {}
            }
            if v && self.blocked[i] {
                return false;
            }
            self.state[i] = Some(v);
            self.trail.push(i);
            queue.push((self.complement[i], !v));
            let implied = if v { &self.forces_in[i] } else { &self.forces_out[i] };
            queue.extend(implied.iter().map(|&j| (j, v)));
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        for i in self.trail.drain(mark..) {
            self.state[i] = None;
        }
    }

    fn solve(&mut self) -> Option<SetFamily> {
        let x = Subset::full(self.n);
        if let Ok(ix) = self.sets.binary_search(&x) {
            // IW
            if !self.assign(ix, false) {
                return None;
            }
        }
        for i in 0..self.sets.len() {
            if self.blocked[i] && !self.assign(i, false) {
                return None;
            }
        }
        if self.branch(0) {
            let members = (0..self.sets.len())
                .filter(|&i| self.state[i] == Some(true))
                .map(|i| self.sets[i])
                .collect();
            Some(SetFamily::from_sorted_unchecked(self.n, members))
        } else {
            None
        }
    }

    fn branch(&mut self, from: usize) -> bool {
        let Some(pos) = (from..self.pairs.len()).find(|&p| self.state[self.pairs[p]].is_none()) else {
            return true;
        };
        let rep = self.pairs[pos];
        for value in [true, false] {
            let mark = self.trail.len();
            if self.assign(rep, value) && self.branch(pos + 1) {
                return true;
            }
            self.undo(mark);
        }
        false
    }
}
