//! Direct-quantifier evaluators for both axiom systems.
//!
//! Written against raw masks and the value table only: nothing here calls
//! into `families` or `search`, so agreement with the fast checkers is an
//! independent confirmation. Every clause loops over all of `2^X` (or all
//! pairs of it) exactly as quantified, with no pruning.

use std::collections::HashSet;

use crate::families::IhVariant;
use crate::system::ConnectivitySystem;

struct Ctx<'a> {
    f: &'a [u32],
    n: u32,
    full: u32,
    k: u32,
    members: HashSet<u32>,
}

impl<'a> Ctx<'a> {
    fn new(sys: &'a ConnectivitySystem, members: &[u32], k: u32) -> Ctx<'a> {
        let n = sys.n() as u32;
        Ctx {
            f: sys.values(),
            n,
            full: (1u32 << n) - 1,
            k,
            members: members.iter().copied().collect(),
        }
    }

    fn member(&self, a: u32) -> bool {
        self.members.contains(&a)
    }

    fn f(&self, a: u32) -> u32 {
        self.f[a as usize]
    }

    fn all(&self) -> std::ops::RangeInclusive<u32> {
        0..=self.full
    }

    /// ∀A ∈ S: f(A) ≤ k
    fn bounded(&self) -> bool {
        self.all().all(|a| !self.member(a) || self.f(a) <= self.k)
    }

    /// ∀A, B: A ⊊ B, B ∈ S (, f(A) ≤ k) ⇒ A ∈ S
    fn hereditary(&self, guarded: bool) -> bool {
        for b in self.all() {
            for a in self.all() {
                let proper_subset = a & b == a && a != b;
                if proper_subset && self.member(b) && (!guarded || self.f(a) <= self.k) && !self.member(a) {
                    return false;
                }
            }
        }
        true
    }

    /// ∀A ∈ S, e ∈ X: f({e}) ≤ k, f(A ∪ {e}) ≤ k ⇒ A ∪ {e} ∈ S
    fn singleton_step(&self) -> bool {
        for a in self.all() {
            for e in 0..self.n {
                let grown = a | 1 << e;
                if self.member(a) && self.f(1 << e) <= self.k && self.f(grown) <= self.k && !self.member(grown) {
                    return false;
                }
            }
        }
        true
    }

    fn whole_excluded(&self) -> bool {
        !self.member(self.full)
    }

    /// ∀A: f(A) ≤ k ⇒ exactly one of A, X∖A ∈ S
    fn exactness(&self) -> bool {
        self.all()
            .filter(|&a| self.f(a) <= self.k)
            .all(|a| self.member(a) != self.member(self.full & !a))
    }

    /// ∀A ⊆ B ⊆ X: B ∈ S, f(A) ≤ k ⇒ A ∈ S
    fn obstacle_downward(&self) -> bool {
        for b in self.all() {
            for a in self.all() {
                if a & b == a && self.member(b) && self.f(a) <= self.k && !self.member(a) {
                    return false;
                }
            }
        }
        true
    }

    /// ∀A, B, C: A ∪ B ∪ C = X, A ∩ B = ∅, f(A) ≤ k, f(B) ≤ k, |C| ≤ 1
    ///   ⇒ A ∈ S or B ∈ S
    ///
    /// `C` ranges over ∅ and every singleton, overlapping `A` and `B` or not.
    fn partition(&self) -> bool {
        let cs: Vec<u32> = std::iter::once(0).chain((0..self.n).map(|e| 1 << e)).collect();
        for a in self.all() {
            for b in self.all() {
                if a & b != 0 || self.f(a) > self.k || self.f(b) > self.k {
                    continue;
                }
                for &c in &cs {
                    if a | b | c == self.full && !self.member(a) && !self.member(b) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Single-ideal verdict by direct quantification.
pub fn is_single_ideal(
    sys: &ConnectivitySystem,
    members: &[u32],
    k: u32,
    variant: IhVariant,
    require_ie: bool,
) -> bool {
    let ctx = Ctx::new(sys, members, k);
    ctx.bounded()
        && ctx.hereditary(variant == IhVariant::Guarded)
        && ctx.singleton_step()
        && ctx.whole_excluded()
        && (!require_ie || ctx.exactness())
}

/// Linear-obstacle verdict by direct quantification.
pub fn is_linear_obstacle(sys: &ConnectivitySystem, members: &[u32], k: u32) -> bool {
    let ctx = Ctx::new(sys, members, k);
    ctx.bounded() && ctx.obstacle_downward() && ctx.partition()
}
