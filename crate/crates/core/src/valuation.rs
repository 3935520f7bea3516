//! Valuated matroids: integer values on the bases of a matroid satisfying the
//! exchange inequality
//!
//! ```text
//! ω(B) + ω(B') ≤ ω(B - e + e') + ω(B' + e - e')
//! ```
//!
//! for every `e ∈ B ∖ B'` and some `e' ∈ B' ∖ B`, with `ω = -∞` off the base
//! family. Values are stored only on actual bases; absence plays the role of
//! `-∞`.

use alloc::collections::VecDeque;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matroid::BaseFamily;
use crate::point::{Point, Rational, RationalPoint};
use crate::set::{ElementSet, GroundSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Valuation {
    family: BaseFamily,
    /// Aligned with `family.bases()`.
    values: Vec<i64>,
}

/// A triple `(B, B', e)` for which no exchange `e'` satisfies the inequality.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExcViolation {
    pub base: ElementSet,
    pub other: ElementSet,
    pub element: usize,
}

/// A dropped non-loop and how its values relate to its representative:
/// `ω(K + element) = ω(K + representative) + offset`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParallelMap {
    pub element: usize,
    pub representative: usize,
    pub offset: i64,
}

/// Result of [`Valuation::simplify`]. Element positions in `kept`,
/// `parallel` and `loops` refer to the original ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplification {
    pub valuation: Valuation,
    pub kept: Vec<usize>,
    pub parallel: Vec<ParallelMap>,
    pub loops: ElementSet,
}

impl Simplification {
    /// Recovers the original value of `base` from the simplified valuation
    /// and the recorded offsets.
    pub fn lift(&self, base: ElementSet) -> Option<i64> {
        let mut offset = 0i64;
        let mut reduced = ElementSet::EMPTY;
        for e in base.iter() {
            if let Some(pos) = self.kept.iter().position(|&k| k == e) {
                reduced = reduced.with(pos);
            } else {
                let m = self.parallel.iter().find(|m| m.element == e)?;
                let pos = self.kept.iter().position(|&k| k == m.representative)?;
                if reduced.contains(pos) {
                    return None;
                }
                reduced = reduced.with(pos);
                offset = offset.checked_add(m.offset)?;
            }
        }
        if reduced.len() != base.len() {
            return None;
        }
        self.valuation.value(reduced)?.checked_add(offset)
    }

    /// `x` restricted to the kept elements.
    pub fn restrict(&self, x: &Point) -> Point {
        Point::new(self.kept.iter().map(|&e| x.get(e)).collect())
    }
}

impl Valuation {
    /// `values[i]` is the value of `family.bases()[i]`.
    pub fn new(family: BaseFamily, values: Vec<i64>) -> Result<Self> {
        if values.len() != family.len() {
            return Err(Error::DimensionMismatch { expected: family.len(), found: values.len() });
        }
        Ok(Valuation { family, values })
    }

    pub fn from_pairs(
        ground: Arc<GroundSet>,
        rank: usize,
        mut pairs: Vec<(ElementSet, i64)>,
    ) -> Result<Self> {
        pairs.sort_by_key(|a| a.0);
        let family = BaseFamily::new(ground, rank, pairs.iter().map(|p| p.0).collect())?;
        let values = pairs.into_iter().map(|p| p.1).collect();
        Ok(Valuation { family, values })
    }

    /// The constant valuation `0` on a base family.
    pub fn zero(family: BaseFamily) -> Self {
        let values = vec![0; family.len()];
        Valuation { family, values }
    }

    pub fn family(&self) -> &BaseFamily {
        &self.family
    }

    pub fn ground(&self) -> &GroundSet {
        self.family.ground()
    }

    pub fn ground_arc(&self) -> &Arc<GroundSet> {
        self.family.ground_arc()
    }

    pub fn rank(&self) -> usize {
        self.family.rank()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn value(&self, base: ElementSet) -> Option<i64> {
        self.family.position(base).map(|i| self.values[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (ElementSet, i64)> + '_ {
        self.family.bases().iter().copied().zip(self.values.iter().copied())
    }

    /// `(ω + x)(B)` for the `index`-th base.
    pub fn eval(&self, index: usize, x: &Point) -> i128 {
        self.values[index] as i128 + x.sum_over(self.family.bases()[index])
    }

    /// `max_B (ω + x)(B)`.
    pub fn max_value(&self, x: &Point) -> Result<i128> {
        x.check_dim(self.ground().len())?;
        Ok((0..self.len()).map(|i| self.eval(i, x)).max().expect("families are nonempty"))
    }

    /// Checks the exchange inequality over all `(B, B', e)`. The base family
    /// must itself be a matroid; otherwise the failed exchange is reported as
    /// an error.
    pub fn check_exc(&self) -> Result<Option<ExcViolation>> {
        self.family.require_matroid()?;
        let bases = self.family.bases();
        for (i, &b) in bases.iter().enumerate() {
            for (j, &other) in bases.iter().enumerate() {
                let lhs = self.values[i] as i128 + self.values[j] as i128;
                let gain = other.difference(b);
                for e in b.difference(other).iter() {
                    let ok = gain.iter().any(|f| {
                        match (self.value(b.without(e).with(f)), self.value(other.without(f).with(e))) {
                            (Some(p), Some(q)) => lhs <= p as i128 + q as i128,
                            _ => false,
                        }
                    });
                    if !ok {
                        return Ok(Some(ExcViolation { base: b, other, element: e }));
                    }
                }
            }
        }
        Ok(None)
    }

    /// `ω + x`, failing on overflow.
    pub fn translate(&self, x: &Point) -> Result<Valuation> {
        x.check_dim(self.ground().len())?;
        let values = (0..self.len())
            .map(|i| i64::try_from(self.eval(i, x)).map_err(|_| Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Valuation { family: self.family.clone(), values })
    }

    /// Steepest single-exchange ascent from `start`. Ties between equally
    /// good exchanges go to the first pair `(e, f)` in element order. Any
    /// local optimum of a valuated matroid is global, so the returned value
    /// is the maximum.
    pub fn maximize(&self, start: ElementSet) -> Result<(ElementSet, i64)> {
        let mut current = self.family.position(start).ok_or_else(|| {
            Error::NotABase(self.ground().format_set(start))
        })?;
        let outside_all = self.ground().full();
        loop {
            let b = self.family.bases()[current];
            let mut best: Option<usize> = None;
            for e in b.iter() {
                for f in outside_all.difference(b).iter() {
                    if let Some(j) = self.family.position(b.without(e).with(f)) {
                        let target = best.map_or(self.values[current], |k| self.values[k]);
                        if self.values[j] > target {
                            best = Some(j);
                        }
                    }
                }
            }
            match best {
                Some(j) => current = j,
                None => return Ok((b, self.values[current])),
            }
        }
    }

    /// Bases attaining `max (ω + x)`.
    pub fn maximizer_family(&self, x: &Point) -> Result<BaseFamily> {
        let best = self.max_value(x)?;
        Ok(self.family.filtered(|i, _| self.eval(i, x) == best))
    }

    /// Restricts to one representative (the least element) per parallel
    /// class, dropping loops, and records the offset of every dropped
    /// non-loop. The offset is validated against every pair of bases it
    /// relates.
    pub fn simplify(&self) -> Result<Simplification> {
        let loops = self.family.loops();
        let classes = self.family.parallel_classes();
        let mut kept = Vec::new();
        let mut parallel = Vec::new();
        for class in &classes {
            let rep = class.first().expect("classes are nonempty");
            kept.push(rep);
            for e in class.without(rep).iter() {
                let mut offset: Option<i64> = None;
                for (b, w) in self.iter().filter(|(b, _)| b.contains(e)) {
                    let swapped = b.without(e).with(rep);
                    let w_rep = self.value(swapped).ok_or_else(|| {
                        Error::Theorem(alloc::format!(
                            "parallel swap {} is not a base",
                            self.ground().format_set(swapped)
                        ))
                    })?;
                    let alpha = w.checked_sub(w_rep).ok_or(Error::Overflow)?;
                    match offset {
                        None => offset = Some(alpha),
                        Some(a) if a == alpha => {}
                        Some(_) => {
                            return Err(Error::Theorem(alloc::format!(
                                "inconsistent offset between {} and {}; exchange axiom fails",
                                self.ground().label(e),
                                self.ground().label(rep)
                            )))
                        }
                    }
                }
                let offset = offset.expect("non-loops lie in some base");
                parallel.push(ParallelMap { element: e, representative: rep, offset });
            }
        }
        kept.sort_unstable();
        parallel.sort_by_key(|m| m.element);

        let ground = GroundSet::new(kept.iter().map(|&e| self.ground().label(e)))?;
        let kept_set = ElementSet::from_indices(kept.iter().copied());
        let pairs = self
            .iter()
            .filter(|(b, _)| b.is_subset(kept_set))
            .map(|(b, w)| {
                let reduced = b
                    .iter()
                    .map(|e| kept.iter().position(|&k| k == e).expect("kept"))
                    .collect::<ElementSet>();
                (reduced, w)
            })
            .collect();
        let valuation = Valuation::from_pairs(Arc::new(ground), self.rank(), pairs)?;
        Ok(Simplification { valuation, kept, parallel, loops })
    }

    /// Finds `h` with `other = self + h`, or `None` if no such vector exists.
    ///
    /// Differences `h(f) - h(e)` are read off single exchanges and propagated
    /// over each connected component of the matroid; the remaining freedom is
    /// one offset per component, pinned by the value on one base. An integral
    /// witness is returned whenever a component's rank divides the residual;
    /// otherwise the residual is spread evenly and the witness is rational.
    pub fn projectively_equivalent(&self, other: &Valuation) -> Result<Option<RationalPoint>> {
        if self.ground() != other.ground() || self.family != other.family {
            return Err(Error::FamilyMismatch);
        }
        let n_elems = self.ground().len();
        let bases = self.family.bases();
        let diff: Vec<i128> = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| *b as i128 - *a as i128)
            .collect();

        let mut edges: Vec<Vec<(usize, i128)>> = vec![Vec::new(); n_elems];
        let full = self.ground().full();
        for (i, &b) in bases.iter().enumerate() {
            for e in b.iter() {
                for f in full.difference(b).iter() {
                    if let Some(j) = self.family.position(b.without(e).with(f)) {
                        let d = diff[j] - diff[i];
                        edges[e].push((f, d));
                        edges[f].push((e, -d));
                    }
                }
            }
        }

        let loops = self.family.loops();
        let mut potential: Vec<Option<i128>> = vec![None; n_elems];
        let mut component = vec![usize::MAX; n_elems];
        let mut components: Vec<ElementSet> = Vec::new();
        for start in full.difference(loops).iter() {
            if potential[start].is_some() {
                continue;
            }
            let id = components.len();
            let mut members = ElementSet::singleton(start);
            potential[start] = Some(0);
            component[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(e) = queue.pop_front() {
                let pe = potential[e].expect("visited");
                for &(f, d) in &edges[e] {
                    match potential[f] {
                        None => {
                            potential[f] = Some(pe + d);
                            component[f] = id;
                            members = members.with(f);
                            queue.push_back(f);
                        }
                        Some(pf) if pf == pe + d => {}
                        Some(_) => return Ok(None),
                    }
                }
            }
            components.push(members);
        }

        let residual_of = |i: usize| -> i128 {
            diff[i] - bases[i].iter().map(|e| potential[e].expect("non-loop")).sum::<i128>()
        };
        let residual = residual_of(0);
        if (1..bases.len()).any(|i| residual_of(i) != residual) {
            return Ok(None);
        }

        let ranks: Vec<i128> = components
            .iter()
            .map(|c| bases[0].intersection(*c).len() as i128)
            .collect();
        let to_rational = |v: i128| -> Result<Rational> {
            i64::try_from(v).map(Rational::from_integer).map_err(|_| Error::Overflow)
        };
        let mut offsets = vec![Rational::zero(); components.len()];
        if residual != 0 {
            if let Some(k) = ranks.iter().position(|&r| r != 0 && residual % r == 0) {
                offsets[k] = to_rational(residual / ranks[k])?;
            } else {
                let each = Rational::new(
                    i64::try_from(residual).map_err(|_| Error::Overflow)?,
                    self.rank() as i64,
                );
                offsets.iter_mut().for_each(|o| *o = each);
            }
        }

        let mut witness = Vec::with_capacity(n_elems);
        for e in 0..n_elems {
            witness.push(match potential[e] {
                None => Rational::zero(),
                Some(p) => to_rational(p)? + offsets[component[e]],
            });
        }
        let witness = RationalPoint::new(witness);
        for (i, &b) in bases.iter().enumerate() {
            if witness.sum_over(b) != to_rational(diff[i])? {
                return Err(Error::Theorem(alloc::format!(
                    "projective witness fails on {}",
                    self.ground().format_set(b)
                )));
            }
        }
        Ok(Some(witness))
    }
}
