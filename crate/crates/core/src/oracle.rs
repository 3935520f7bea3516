//! Brute-force references for cross-checking.
//!
//! Nothing here calls into [`crate::matroid`], [`crate::lattice`],
//! [`crate::ends`] or [`crate::reconstruct`] except
//! [`brute_member_cross`], whose whole job is to compare the two membership
//! definitions in [`crate::tropical`]. Inputs must be tiny; box scans fail
//! with [`Error::CapExceeded`] beyond [`Caps::oracle_box`].

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::generators::poly::Poly;
use crate::point::Point;
use crate::set::ElementSet;
use crate::tropical;
use crate::valuation::Valuation;

fn table(v: &Valuation) -> BTreeMap<u64, i64> {
    v.iter().map(|(b, w)| (b.bits(), w)).collect()
}

fn shifted(v: &Valuation, x: &Point) -> Vec<(ElementSet, i128)> {
    v.iter()
        .map(|(b, w)| (b, w as i128 + b.iter().map(|e| x.coords()[e] as i128).sum::<i128>()))
        .collect()
}

pub fn naive_height(v: &Valuation, x: &Point) -> i128 {
    shifted(v, x).iter().map(|p| p.1).max().expect("nonempty family")
}

pub fn naive_maximizers(v: &Valuation, x: &Point) -> Vec<ElementSet> {
    let vals = shifted(v, x);
    let top = vals.iter().map(|p| p.1).max().expect("nonempty family");
    vals.into_iter().filter(|p| p.1 == top).map(|p| p.0).collect()
}

pub fn naive_member(v: &Valuation, x: &Point) -> bool {
    let covered = naive_maximizers(v, x).iter().fold(0u64, |a, b| a | b.bits());
    covered == v.ground().full().bits()
}

/// `e` together with every other covered element sharing no maximizer
/// with it.
fn naive_class(maximizers: &[ElementSet], n: usize, e: usize) -> ElementSet {
    let covered = maximizers.iter().fold(0u64, |a, b| a | b.bits());
    let mut class = ElementSet::singleton(e);
    for f in 0..n {
        if f != e
            && covered & (1 << f) != 0
            && !maximizers.iter().any(|b| b.contains(e) && b.contains(f))
        {
            class = class.with(f);
        }
    }
    class
}

/// Largest `max_B |B ∩ X|`; a different route to the rank than greedy
/// augmentation.
pub fn brute_rank(v: &Valuation, set: ElementSet) -> usize {
    v.family().bases().iter().map(|b| b.intersection(set).len()).max().unwrap_or(0)
}

/// All closed sets by scanning `2^E`.
pub fn brute_flats(v: &Valuation) -> Vec<ElementSet> {
    let n = v.ground().len();
    let mut out = Vec::new();
    for bits in 0..(1u64 << n) {
        let s = ElementSet::from_bits(bits);
        let r = brute_rank(v, s);
        if (0..n).filter(|&e| !s.contains(e)).all(|e| brute_rank(v, s.with(e)) > r) {
            out.push(s);
        }
    }
    out
}

pub fn brute_max(v: &Valuation) -> i64 {
    v.values().iter().copied().max().expect("nonempty family")
}

/// Whether `(B, B', e)` admits no exchange, with `ω = -∞` off the family.
pub fn brute_exc_fails(v: &Valuation, b: ElementSet, b2: ElementSet, e: usize) -> bool {
    let w = table(v);
    let val = |s: ElementSet| w.get(&s.bits()).map(|&x| x as i128);
    let (Some(wb), Some(wb2)) = (val(b), val(b2)) else {
        return false;
    };
    if !b.contains(e) || b2.contains(e) {
        return false;
    }
    !(0..v.ground().len()).filter(|&f| b2.contains(f) && !b.contains(f)).any(|f| {
        match (val(b.without(e).with(f)), val(b2.without(f).with(e))) {
            (Some(p), Some(q)) => wb + wb2 <= p + q,
            _ => false,
        }
    })
}

/// First failing triple over all pairs of bases and elements.
pub fn brute_exc(v: &Valuation) -> Option<(ElementSet, ElementSet, usize)> {
    for (b, _) in v.iter() {
        for (b2, _) in v.iter() {
            for e in 0..v.ground().len() {
                if brute_exc_fails(v, b, b2, e) {
                    return Some((b, b2, e));
                }
            }
        }
    }
    None
}

/// Every integer point of `[lo, hi]`.
pub fn box_points(lo: &Point, hi: &Point, caps: &Caps) -> Result<Vec<Point>> {
    let mut size: usize = 1;
    for (a, b) in lo.coords().iter().zip(hi.coords()) {
        if b < a {
            return Ok(Vec::new());
        }
        size = size.saturating_mul((b - a + 1) as usize);
    }
    if size > caps.oracle_box {
        return Err(Error::CapExceeded { what: "oracle box", limit: caps.oracle_box, actual: size });
    }
    let mut out = Vec::with_capacity(size);
    let mut cur = lo.coords().to_vec();
    loop {
        out.push(Point::new(cur.clone()));
        let mut i = 0;
        loop {
            if i == cur.len() {
                return Ok(out);
            }
            if cur[i] < hi.coords()[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = lo.coords()[i];
            i += 1;
        }
    }
}

/// Minimum member above `max(x, y)`, by scanning the box between that
/// vector and the two candidate upper bounds `x + k·1`, `y + k'·1`.
pub fn brute_join(v: &Valuation, x: &Point, y: &Point, caps: &Caps) -> Result<Point> {
    let c = x.sup(y);
    let k = y.coords().iter().zip(x.coords()).map(|(b, a)| b - a).max().unwrap_or(0).max(0);
    let k2 = x.coords().iter().zip(y.coords()).map(|(a, b)| a - b).max().unwrap_or(0).max(0);
    let hi = x.shifted(k)?.inf(&y.shifted(k2)?);
    let members: Vec<Point> =
        box_points(&c, &hi, caps)?.into_iter().filter(|p| naive_member(v, p)).collect();
    let mut it = members.iter();
    let first = it.next().ok_or_else(|| Error::Theorem("no member above both points".into()))?;
    let least = it.fold(first.clone(), |a, p| a.inf(p));
    if !members.contains(&least) {
        return Err(Error::Theorem("members above both points have no minimum".into()));
    }
    Ok(least)
}

/// Members of the box `[x, y]`.
pub fn brute_interval(v: &Valuation, x: &Point, y: &Point, caps: &Caps) -> Result<Vec<Point>> {
    Ok(box_points(x, y, caps)?.into_iter().filter(|p| naive_member(v, p)).collect())
}

/// Agreement length of the rays of `e` and `f` from `x`, traced literally.
pub fn brute_delta(v: &Valuation, x: &Point, e: usize, f: usize, depth: usize) -> Result<i64> {
    let n = v.ground().len();
    let (mut a, mut b) = (x.clone(), x.clone());
    for i in 1..=depth {
        a = a.add_on(naive_class(&naive_maximizers(v, &a), n, e), 1)?;
        b = b.add_on(naive_class(&naive_maximizers(v, &b), n, f), 1)?;
        if a != b {
            return Ok(i as i64 - 1);
        }
    }
    Err(Error::Inconclusive { depth })
}

/// The ray of `e` from `x` up to `depth`, traced literally.
pub fn brute_ray(v: &Valuation, x: &Point, e: usize, depth: usize) -> Result<Vec<Point>> {
    let n = v.ground().len();
    let mut out = Vec::with_capacity(depth);
    let mut a = x.clone();
    for _ in 0..depth {
        a = a.add_on(naive_class(&naive_maximizers(v, &a), n, e), 1)?;
        out.push(a.clone());
    }
    Ok(out)
}

/// Runs both membership definitions and insists they agree.
pub fn brute_member_cross(v: &Valuation, x: &Point, caps: &Caps) -> Result<bool> {
    let loop_free = tropical::is_member(v, x)?;
    let tw = tropical::is_member_tw(v, &x.to_rational(), caps)?;
    if loop_free != tw {
        return Err(Error::Theorem(alloc::format!(
            "membership definitions disagree at {x}: loop-free {loop_free}, twice-attained {tw}"
        )));
    }
    Ok(loop_free)
}

/// Largest point of `S(B)` in the box `[x - reach·1, x]`.
pub fn brute_skeleton_max_below(
    v: &Valuation,
    x: &Point,
    b: ElementSet,
    reach: i64,
    caps: &Caps,
) -> Result<Option<Point>> {
    let candidates: Vec<Point> = box_points(&x.shifted(-reach)?, x, caps)?
        .into_iter()
        .filter(|p| naive_member(v, p) && naive_maximizers(v, p).contains(&b))
        .collect();
    let Some(first) = candidates.first() else {
        return Ok(None);
    };
    let top = candidates.iter().fold(first.clone(), |a, p| a.sup(p));
    Ok(candidates.contains(&top).then_some(top))
}

/// Determinant by Laplace expansion along the first row.
pub fn cofactor_det(rows: &[Vec<Poly>]) -> Result<Poly> {
    let n = rows.len();
    if n == 0 {
        return Ok(Poly::constant(1));
    }
    if n == 1 {
        return Ok(rows[0][0].clone());
    }
    let mut acc = Poly::zero();
    for j in 0..n {
        if rows[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = rows[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = rows[0][j].mul(&cofactor_det(&minor)?)?;
        acc = if j % 2 == 0 { acc.add(&term)? } else { acc.sub(&term)? };
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::fixtures::{rep23, tree, u23};
    use crate::generators::poly::determinant;
    use alloc::vec;

    fn pt(c: &[i64]) -> Point {
        Point::new(c.to_vec())
    }

    #[test]
    fn join_examples() {
        let caps = Caps::default();
        let u = u23();
        assert_eq!(brute_join(&u, &pt(&[1, 0, 0]), &pt(&[0, 1, 0]), &caps), Ok(pt(&[1, 1, 1])));
        assert_eq!(brute_join(&u, &pt(&[2, 0, 0]), &pt(&[1, 1, 1]), &caps), Ok(pt(&[2, 1, 1])));
        assert_eq!(brute_join(&u, &pt(&[1, 0, 0]), &pt(&[1, 0, 0]), &caps), Ok(pt(&[1, 0, 0])));
    }

    #[test]
    fn delta_examples() {
        assert_eq!(brute_delta(&rep23(), &pt(&[1, 1, 0]), 1, 2, 5), Ok(1));
        assert_eq!(brute_delta(&rep23(), &pt(&[1, 1, 0]), 2, 1, 5), Ok(1));
        assert_eq!(brute_delta(&u23(), &pt(&[0, 0, 0]), 0, 1, 3), Ok(0));
        assert_eq!(brute_delta(&tree(), &pt(&[0, 0, 0]), 0, 1, 5), Ok(2));
        assert_eq!(brute_delta(&tree(), &pt(&[0, 0, 0]), 0, 1, 2), Err(Error::Inconclusive { depth: 2 }));
    }

    #[test]
    fn membership_cross_examples() {
        let caps = Caps::default();
        assert_eq!(brute_member_cross(&rep23(), &pt(&[0, 1, 0]), &caps), Ok(true));
        assert_eq!(brute_member_cross(&rep23(), &pt(&[0, 0, 0]), &caps), Ok(false));
        for p in box_points(&pt(&[0, 0, 0]), &pt(&[1, 1, 1]), &caps).unwrap() {
            let both = brute_member_cross(&u23(), &p, &caps).unwrap();
            assert_eq!(both, naive_member(&u23(), &p));
        }
    }

    #[test]
    fn box_cap() {
        let caps = Caps { oracle_box: 10, ..Caps::default() };
        assert!(matches!(
            box_points(&pt(&[0, 0, 0]), &pt(&[2, 2, 2]), &caps),
            Err(Error::CapExceeded { actual: 27, .. })
        ));
        assert_eq!(box_points(&pt(&[1, 0]), &pt(&[0, 0]), &caps), Ok(vec![]));
    }

    #[test]
    fn exc_examples() {
        assert_eq!(brute_exc(&rep23()), None);
        assert_eq!(brute_exc(&tree()), None);
        assert_eq!(brute_max(&rep23()), 1);
    }

    #[test]
    fn skeleton_example() {
        let caps = Caps::default();
        let b = ElementSet::from_indices([1, 2]);
        assert_eq!(
            brute_skeleton_max_below(&rep23(), &pt(&[1, 1, 0]), b, 3, &caps),
            Ok(Some(pt(&[0, 1, 0])))
        );
    }

    #[test]
    fn cofactor_matches_bareiss() {
        let p = |c: &[i64]| Poly::new(c.to_vec());
        let m = vec![
            vec![p(&[1]), p(&[0, 1]), p(&[2])],
            vec![p(&[0, 0, 1]), p(&[-1]), p(&[0, 3])],
            vec![p(&[1, 1]), p(&[0]), p(&[1])],
        ];
        assert_eq!(cofactor_det(&m), determinant(&m));
        assert_eq!(cofactor_det(&[]), Ok(Poly::constant(1)));
    }

    #[test]
    fn flats_of_u23() {
        assert_eq!(brute_flats(&u23()).len(), 5);
        assert_eq!(brute_rank(&u23(), ElementSet::from_indices([0, 1, 2])), 2);
    }
}
