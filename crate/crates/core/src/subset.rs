//! Bitmask subsets of a ground set `{0, .., n-1}`.
//!
//! Bit `i` of the mask is set iff element `i` is a member. Masks are always
//! interpreted against the `n` of the owning system; nothing here stores `n`.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Hard ceiling on the ground-set size: masks are `u32` and value tables are
/// materialised in full.
pub const MAX_GROUND_SET: usize = 30;

/// An element of the ground set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementId(pub u32);

impl ElementId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A subset of the ground set, encoded little-endian as a bitmask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// The whole ground set `X` for a system of `n` elements.
    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= MAX_GROUND_SET);
        Subset(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(e: ElementId) -> Subset {
        Subset(1 << e.0)
    }

    pub fn from_elements<I: IntoIterator<Item = u32>>(elements: I) -> Subset {
        Subset(elements.into_iter().fold(0, |m, e| m | (1 << e)))
    }

    #[inline]
    pub fn mask(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn complement(self, n: usize) -> Subset {
        Subset(!self.0 & Subset::full(n).0)
    }

    #[inline]
    pub fn contains(self, e: ElementId) -> bool {
        self.0 >> e.0 & 1 == 1
    }

    #[inline]
    pub fn with(self, e: ElementId) -> Subset {
        Subset(self.0 | 1 << e.0)
    }

    #[inline]
    pub fn without(self, e: ElementId) -> Subset {
        Subset(self.0 & !(1 << e.0))
    }

    #[inline]
    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_proper_subset_of(self, other: Subset) -> bool {
        self != other && self.is_subset_of(other)
    }

    #[inline]
    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// True when the mask fits a ground set of `n` elements.
    pub fn fits(self, n: usize) -> bool {
        n >= 32 || self.0 >> n == 0
    }

    /// Members in ascending order.
    pub fn elements(self) -> impl Iterator<Item = ElementId> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let e = rest.trailing_zeros();
            rest &= rest - 1;
            Some(ElementId(e))
        })
    }

    /// All subsets of `self` (including `∅` and `self`) in ascending mask order.
    pub fn submasks(self) -> Submasks {
        Submasks {
            of: self.0,
            next: Some(0),
        }
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// Ascending iterator over the submasks of a fixed mask.
#[derive(Clone, Debug)]
pub struct Submasks {
    of: u32,
    next: Option<u32>,
}

impl Iterator for Submasks {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == self.of {
            None
        } else {
            // Set every bit outside `of`, increment, and mask back: the carry
            // skips straight to the next submask.
            Some((cur | !self.of).wrapping_add(1) & self.of)
        };
        Some(Subset(cur))
    }
}

/// Every subset of an `n`-element ground set, ascending.
pub fn all_subsets(n: usize) -> impl Iterator<Item = Subset> {
    (0..=Subset::full(n).0).map(Subset)
}
