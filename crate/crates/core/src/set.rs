//! Ground sets and bitset subsets.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};

/// Hard limit imposed by the `u64` bitset representation.
pub const MAX_ELEMENTS: usize = 64;

/// A subset of a ground set, stored as a bitset over element positions.
///
/// Ordering is lexicographic on the sorted position lists, so `{0,1} < {0,2}
/// < {1,2}` and a proper prefix sorts first (`{0} < {0,1}`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Debug)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        ElementSet(1 << e)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(items: I) -> Self {
        items.into_iter().fold(ElementSet::EMPTY, |s, e| s.with(e))
    }

    pub fn contains(self, e: usize) -> bool {
        e < MAX_ELEMENTS && self.0 & (1 << e) != 0
    }

    #[must_use]
    pub fn with(self, e: usize) -> Self {
        ElementSet(self.0 | (1 << e))
    }

    #[must_use]
    pub fn without(self, e: usize) -> Self {
        ElementSet(self.0 & !(1 << e))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff & diff.wrapping_neg();
        // Elements below `low` are shared. Whoever owns `low` lists it next;
        // the other side either lists something larger or has run out.
        let above = !(low | (low - 1));
        if self.0 & low != 0 {
            if other.0 & above == 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else if self.0 & above == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ElementSet::from_indices(iter)
    }
}

/// Ascending element positions of an [`ElementSet`].
#[derive(Clone, Debug)]
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// All `k`-subsets of `{0, .., n-1}`, in increasing bit-pattern order.
pub fn subsets_of_size(n: usize, k: usize) -> KSubsets {
    let next = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some((1u64 << k) - 1)
    };
    KSubsets { next, limit: n }
}

#[derive(Clone, Debug)]
pub struct KSubsets {
    next: Option<u64>,
    limit: usize,
}

impl Iterator for KSubsets {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        let cur = self.next?;
        // Gosper's hack
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let nxt = (((r ^ cur) >> 2) / c) | r;
                if self.limit < 64 && nxt >> self.limit != 0 {
                    None
                } else {
                    Some(nxt)
                }
            }
        };
        Some(ElementSet(cur))
    }
}

/// An ordered list of distinct element labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_ELEMENTS {
            return Err(Error::TooManyElements { count: labels.len(), max: MAX_ELEMENTS });
        }
        let mut index = BTreeMap::new();
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(GroundSet { labels, index })
    }

    /// Labels `e1, e2, .., en`.
    pub fn numbered(n: usize) -> Result<Self> {
        GroundSet::new((1..=n).map(|i| alloc::format!("e{i}")))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: usize) -> &str {
        &self.labels[e]
    }

    pub fn position(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn full(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    pub fn subset<'a, I>(&self, labels: I) -> Result<ElementSet>
    where
        I: IntoIterator<Item = &'a str>,
    {
        labels
            .into_iter()
            .try_fold(ElementSet::EMPTY, |s, l| Ok(s.with(self.position(l)?)))
    }

    /// `{a,b,c}` using element labels.
    pub fn format_set(&self, set: ElementSet) -> String {
        let mut out = String::from("{");
        for (i, e) in set.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&self.labels[e]);
        }
        out.push('}');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn lexicographic_order() {
        let s = |v: &[usize]| ElementSet::from_indices(v.iter().copied());
        let mut sets = vec![s(&[1, 2]), s(&[0, 2]), s(&[0]), s(&[0, 1]), s(&[]), s(&[2])];
        sets.sort();
        assert_eq!(sets, vec![s(&[]), s(&[0]), s(&[0, 1]), s(&[0, 2]), s(&[1, 2]), s(&[2])]);
    }

    #[test]
    fn k_subsets_count() {
        assert_eq!(subsets_of_size(6, 3).count(), 20);
        assert_eq!(subsets_of_size(4, 0).count(), 1);
        assert_eq!(subsets_of_size(3, 4).count(), 0);
        assert_eq!(subsets_of_size(5, 5).count(), 1);
        assert!(subsets_of_size(6, 2).all(|s| s.len() == 2 && s.is_subset(ElementSet::full(6))));
    }

    #[test]
    fn ground_set_rejects_duplicates() {
        assert_eq!(GroundSet::new(["a", "b", "a"]), Err(Error::DuplicateLabel("a".into())));
        assert_eq!(GroundSet::new(["a", ""]), Err(Error::EmptyLabel));
        let g = GroundSet::new(["x", "y"]).unwrap();
        assert_eq!(g.position("y"), Ok(1));
        assert_eq!(g.format_set(g.full()), "{x,y}");
    }
}
