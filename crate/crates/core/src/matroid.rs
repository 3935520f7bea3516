//! Matroids given by an explicit list of bases.
//!
//! Independence is derived: a set is independent when some base contains it.
//! Rank grows an independent subset greedily against that oracle.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::set::{ElementSet, GroundSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseFamily {
    ground: Arc<GroundSet>,
    rank: usize,
    bases: Vec<ElementSet>,
}

/// A witness that a family of equal-size sets is not a matroid: removing
/// `element` from `base` cannot be repaired by anything in `other ∖ base`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExchangeFailure {
    pub base: ElementSet,
    pub other: ElementSet,
    pub element: usize,
}

impl BaseFamily {
    /// Builds a family, sorting the bases. Rejects empty families, wrong
    /// sizes, out-of-range elements and duplicates. Does not check exchange.
    pub fn new(ground: Arc<GroundSet>, rank: usize, bases: Vec<ElementSet>) -> Result<Self> {
        if bases.is_empty() {
            return Err(Error::EmptyFamily);
        }
        let full = ground.full();
        for &b in &bases {
            if !b.is_subset(full) {
                return Err(Error::UnknownLabel(alloc::format!("{:#x}", b.bits())));
            }
            if b.len() != rank {
                return Err(Error::BaseSize {
                    base: ground.format_set(b),
                    expected: rank,
                    found: b.len(),
                });
            }
        }
        let mut sorted = bases;
        sorted.sort();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateBase(ground.format_set(w[0])));
            }
        }
        Ok(BaseFamily { ground, rank, bases: sorted })
    }

    /// `bases` must already be sorted, distinct and of size `rank`.
    pub(crate) fn from_sorted(ground: Arc<GroundSet>, rank: usize, bases: Vec<ElementSet>) -> Self {
        debug_assert!(bases.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(bases.iter().all(|b| b.len() == rank));
        BaseFamily { ground, rank, bases }
    }

    /// The uniform matroid `U_{rank, |ground|}`.
    pub fn uniform(ground: Arc<GroundSet>, rank: usize) -> Result<Self> {
        let bases = crate::set::subsets_of_size(ground.len(), rank).collect();
        BaseFamily::new(ground, rank, bases)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn ground_arc(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &[ElementSet] {
        &self.bases
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    pub fn position(&self, base: ElementSet) -> Option<usize> {
        self.bases.binary_search(&base).ok()
    }

    pub fn contains(&self, base: ElementSet) -> bool {
        self.position(base).is_some()
    }

    /// First exchange failure, scanning bases, partners and elements in order.
    pub fn exchange_failure(&self) -> Option<ExchangeFailure> {
        for &b in &self.bases {
            for &other in &self.bases {
                let gain = other.difference(b);
                for e in b.difference(other).iter() {
                    let fixed = gain.iter().any(|f| self.contains(b.without(e).with(f)));
                    if !fixed {
                        return Some(ExchangeFailure { base: b, other, element: e });
                    }
                }
            }
        }
        None
    }

    /// Whether the bases satisfy the exchange axiom.
    pub fn is_base_family(&self) -> bool {
        self.exchange_failure().is_none()
    }

    /// Converts an exchange failure into an error naming it.
    pub fn require_matroid(&self) -> Result<()> {
        match self.exchange_failure() {
            None => Ok(()),
            Some(fail) => Err(Error::NotAMatroid {
                base: self.ground.format_set(fail.base),
                other: self.ground.format_set(fail.other),
                element: self.ground.label(fail.element).into(),
            }),
        }
    }

    pub fn is_independent(&self, set: ElementSet) -> bool {
        self.bases.iter().any(|b| set.is_subset(*b))
    }

    /// Size of a maximal independent subset of `set`, grown greedily.
    pub fn rank_of(&self, set: ElementSet) -> usize {
        let mut indep = ElementSet::EMPTY;
        for e in set.iter() {
            let grown = indep.with(e);
            if self.is_independent(grown) {
                indep = grown;
            }
        }
        indep.len()
    }

    pub fn closure(&self, set: ElementSet) -> ElementSet {
        let r = self.rank_of(set);
        let outside = self.ground.full().difference(set);
        outside
            .iter()
            .filter(|&e| self.rank_of(set.with(e)) == r)
            .fold(set, |acc, e| acc.with(e))
    }

    pub fn loops(&self) -> ElementSet {
        let covered = self.bases.iter().fold(ElementSet::EMPTY, |a, b| a.union(*b));
        self.ground.full().difference(covered)
    }

    /// Parallel classes of the non-loops, ordered by least element.
    pub fn parallel_classes(&self) -> Vec<ElementSet> {
        let loops = self.loops();
        let mut classes: Vec<ElementSet> = Vec::new();
        for e in self.ground.full().difference(loops).iter() {
            let home = classes.iter_mut().find(|c| {
                let rep = c.first().expect("classes are nonempty");
                !self.bases.iter().any(|b| b.contains(rep) && b.contains(e))
            });
            match home {
                Some(c) => *c = c.with(e),
                None => classes.push(ElementSet::singleton(e)),
            }
        }
        classes
    }

    /// The parallel class containing `e`, or `None` for a loop.
    pub fn class_of(&self, e: usize) -> Option<ElementSet> {
        if !self.bases.iter().any(|b| b.contains(e)) {
            return None;
        }
        let mut class = ElementSet::singleton(e);
        for f in self.ground.full().without(e).iter() {
            let in_some = self.bases.iter().any(|b| b.contains(f));
            let together = self.bases.iter().any(|b| b.contains(e) && b.contains(f));
            if in_some && !together {
                class = class.with(f);
            }
        }
        Some(class)
    }

    /// No loops and no parallel pairs.
    pub fn is_simple(&self) -> bool {
        self.loops().is_empty() && self.parallel_classes().iter().all(|c| c.len() == 1)
    }

    /// All flats ordered by (rank, lexicographic).
    ///
    /// Generated from `cl(∅)` by closing single-element extensions, so the
    /// cost scales with the number of flats rather than `2^|E|`.
    pub fn flats(&self, caps: &Caps) -> Result<Vec<ElementSet>> {
        if self.ground.len() > caps.flats_elements {
            return Err(Error::CapExceeded {
                what: "flat enumeration ground set",
                limit: caps.flats_elements,
                actual: self.ground.len(),
            });
        }
        let full = self.ground.full();
        let bottom = self.closure(ElementSet::EMPTY);
        let mut seen = BTreeSet::new();
        seen.insert(bottom);
        let mut queue = VecDeque::from([bottom]);
        while let Some(flat) = queue.pop_front() {
            for e in full.difference(flat).iter() {
                let next = self.closure(flat.with(e));
                if seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
        let mut ranked: Vec<(usize, ElementSet)> =
            seen.into_iter().map(|f| (self.rank_of(f), f)).collect();
        ranked.sort();
        Ok(ranked.into_iter().map(|(_, f)| f).collect())
    }

    /// Flats of rank `rank - 1`, in lexicographic order. Every hyperplane is
    /// `cl(B - e)` for some base `B` and `e ∈ B`.
    pub fn hyperplanes(&self) -> Vec<ElementSet> {
        let mut out = BTreeSet::new();
        for &b in &self.bases {
            for e in b.iter() {
                out.insert(self.closure(b.without(e)));
            }
        }
        out.into_iter().collect()
    }

    /// Keeps the bases satisfying `keep`, preserving order. Used for
    /// maximizer families, which are matroids whenever the valuation is valid.
    pub(crate) fn filtered<F: FnMut(usize, ElementSet) -> bool>(&self, mut keep: F) -> Self {
        let bases = self
            .bases
            .iter()
            .enumerate()
            .filter(|(i, b)| keep(*i, **b))
            .map(|(_, b)| *b)
            .collect();
        BaseFamily::from_sorted(self.ground.clone(), self.rank, bases)
    }
}
