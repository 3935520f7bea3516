//! The lattice `L(ω)` of integer points of the tropical linear space under
//! the componentwise order.
//!
//! The lattice is infinite and is never materialised: points are produced on
//! demand and carry their maximizer matroid, which every operation reads.
//!
//! - height: `r(x) = max_B (ω + x)(B)`
//! - covers of `x`: `x + 1_F` for the parallel classes `F` of `M_{ω+x}`
//! - co-covers of `x`: `x - 1_{E∖H}` for the hyperplanes `H` of `M_{ω+x}`
//!   (translation by `-1` leaves the maximizer family unchanged)
//! - meet: componentwise minimum
//! - join: descend from a member above both inputs through co-covers that
//!   stay above `max(x, y)`. The members above a fixed vector form a
//!   meet-closed set, so a locally minimal member is the minimum.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::matroid::BaseFamily;
use crate::point::Point;
use crate::valuation::Valuation;

/// A certified member of `L(ω)` together with its maximizer matroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePoint {
    point: Point,
    matroid: BaseFamily,
    height: i64,
}

impl LatticePoint {
    /// Certifies membership, failing with [`Error::NotMember`].
    pub fn new(v: &Valuation, point: Point) -> Result<Self> {
        let matroid = v.maximizer_family(&point)?;
        if !matroid.loops().is_empty() {
            return Err(Error::NotMember(point.format(v.ground())));
        }
        let height = i64::try_from(v.max_value(&point)?).map_err(|_| Error::Overflow)?;
        Ok(LatticePoint { point, matroid, height })
    }

    /// Like [`LatticePoint::new`] for points the theory guarantees to be
    /// members; failure is reported as a theorem violation.
    pub(crate) fn derived(v: &Valuation, point: Point, how: &str) -> Result<Self> {
        match LatticePoint::new(v, point) {
            Err(Error::NotMember(p)) => {
                Err(Error::Theorem(alloc::format!("{how} produced non-member {p}")))
            }
            other => other,
        }
    }

    pub fn point(&self) -> &Point {
        &self.point
    }

    pub fn into_point(self) -> Point {
        self.point
    }

    /// The maximizer matroid `M_{ω+x}`.
    pub fn matroid(&self) -> &BaseFamily {
        &self.matroid
    }

    pub fn height(&self) -> i64 {
        self.height
    }

    pub fn le(&self, other: &LatticePoint) -> bool {
        self.point.le(&other.point)
    }
}

pub fn height(x: &LatticePoint) -> i64 {
    x.height()
}

pub fn covers(v: &Valuation, x: &LatticePoint) -> Result<Vec<LatticePoint>> {
    x.matroid
        .parallel_classes()
        .into_iter()
        .map(|class| LatticePoint::derived(v, x.point.add_on(class, 1)?, "cover"))
        .collect()
}

pub fn cocovers(v: &Valuation, x: &LatticePoint) -> Result<Vec<LatticePoint>> {
    let full = v.ground().full();
    x.matroid
        .hyperplanes()
        .into_iter()
        .map(|h| LatticePoint::derived(v, x.point.add_on(full.difference(h), -1)?, "co-cover"))
        .collect()
}

/// `x + k·1` as a lattice point.
pub fn shift(v: &Valuation, x: &LatticePoint, k: i64) -> Result<LatticePoint> {
    LatticePoint::derived(v, x.point.shifted(k)?, "shift")
}

pub fn meet(v: &Valuation, x: &LatticePoint, y: &LatticePoint) -> Result<LatticePoint> {
    LatticePoint::derived(v, x.point.inf(&y.point), "meet")
}

/// Least member above both `x` and `y`.
pub fn join(v: &Valuation, x: &LatticePoint, y: &LatticePoint) -> Result<LatticePoint> {
    let floor = x.point.sup(&y.point);
    let k = y
        .point
        .coords()
        .iter()
        .zip(x.point.coords())
        .map(|(b, a)| b - a)
        .max()
        .unwrap_or(0)
        .max(0);
    let mut u = shift(v, x, k)?;
    let full = v.ground().full();
    'descend: loop {
        for h in u.matroid.hyperplanes() {
            let cand = u.point.add_on(full.difference(h), -1)?;
            if floor.le(&cand) {
                u = LatticePoint::derived(v, cand, "co-cover")?;
                continue 'descend;
            }
        }
        return Ok(u);
    }
}

/// Join of a nonempty list of points.
pub fn join_all<'a, I>(v: &Valuation, points: I) -> Result<Option<LatticePoint>>
where
    I: IntoIterator<Item = &'a LatticePoint>,
{
    let mut acc: Option<LatticePoint> = None;
    for p in points {
        acc = Some(match acc {
            None => p.clone(),
            Some(a) => join(v, &a, p)?,
        });
    }
    Ok(acc)
}

/// All members `z` with `x ≤ z ≤ y`, ordered by height and then by
/// decreasing coordinates. Found by walking covers upward from `x`; every
/// member of a finite interval is reachable that way.
pub fn interval(v: &Valuation, x: &LatticePoint, y: &LatticePoint, caps: &Caps) -> Result<Vec<LatticePoint>> {
    if !x.le(y) {
        return Err(Error::Incomparable);
    }
    let mut seen = BTreeSet::new();
    seen.insert(x.point.clone());
    let mut found = alloc::vec![x.clone()];
    let mut queue = VecDeque::from([x.clone()]);
    while let Some(z) = queue.pop_front() {
        for c in covers(v, &z)? {
            if c.point.le(&y.point) && seen.insert(c.point.clone()) {
                if found.len() >= caps.interval_points {
                    return Err(Error::CapExceeded {
                        what: "interval size",
                        limit: caps.interval_points,
                        actual: found.len() + 1,
                    });
                }
                found.push(c.clone());
                queue.push_back(c);
            }
        }
    }
    found.sort_by(|a, b| a.height.cmp(&b.height).then_with(|| b.point.cmp(&a.point)));
    Ok(found)
}

/// Whether a cover chain is a segment: its interval is exactly the chain.
pub fn is_segment(v: &Valuation, chain: &[LatticePoint], caps: &Caps) -> Result<bool> {
    let (Some(first), Some(last)) = (chain.first(), chain.last()) else {
        return Err(Error::NotCoverChain("empty chain".into()));
    };
    for w in chain.windows(2) {
        if !covers(v, &w[0])?.iter().any(|c| c.point == w[1].point) {
            return Err(Error::NotCoverChain(alloc::format!(
                "{} does not cover {}",
                w[1].point.format(v.ground()),
                w[0].point.format(v.ground())
            )));
        }
    }
    let span = interval(v, first, last, caps)?;
    let mine: BTreeSet<&Point> = chain.iter().map(|p| &p.point).collect();
    Ok(span.len() == mine.len() && span.iter().all(|p| mine.contains(&p.point)))
}

/// Some member of `L(ω)`. Starting from `0`, each loop `e` of the current
/// maximizer matroid is raised by exactly enough to put it into a maximizer.
pub fn find_point(v: &Valuation) -> Result<LatticePoint> {
    let loops = v.family().loops();
    if !loops.is_empty() {
        return Err(Error::HasLoops(v.ground().format_set(loops)));
    }
    let mut c = Point::zeros(v.ground().len());
    for _ in 0..=v.ground().len() {
        let m = v.maximizer_family(&c)?;
        let Some(e) = m.loops().first() else {
            return LatticePoint::derived(v, c, "find_point");
        };
        let top = v.max_value(&c)?;
        let best_with_e = (0..v.len())
            .filter(|&i| v.family().bases()[i].contains(e))
            .map(|i| v.eval(i, &c))
            .max()
            .expect("not a loop of the underlying matroid");
        let raise = i64::try_from(top - best_with_e).map_err(|_| Error::Overflow)?;
        c = c.add_on(crate::set::ElementSet::singleton(e), raise)?;
    }
    Err(Error::Theorem("find_point did not terminate within |E| raises".into()))
}
