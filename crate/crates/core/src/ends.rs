//! Rays, ends and the ultrametrics on them.
//!
//! For a finite simple valuation the ends of `L(ω)` are the ground elements.
//! The ray of `e` from `x` steps through `a^{ℓ+1} = a^ℓ + 1_{F^ℓ}`, where
//! `F^ℓ` is the parallel class of `e` in `M_{ω+a^ℓ}`. Two rays agree up to
//! some depth and never meet again; that depth is
//!
//! ```text
//! δ_x(e, f) = r(x) - max{ (ω + x)(B) : e, f ∈ B }
//! ```
//!
//! and `d_x = exp(-δ_x)` is an ultrametric. Metrics are kept as their integer
//! exponents.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lattice::{self, LatticePoint};
use crate::matroid::BaseFamily;
use crate::point::{Point, Rational, RationalPoint};
use crate::set::ElementSet;
use crate::tropical;
use crate::valuation::Valuation;

/// Fails with [`Error::NotSimple`] unless the underlying matroid is simple.
pub fn require_simple(v: &Valuation) -> Result<()> {
    let loops = v.family().loops();
    if !loops.is_empty() {
        return Err(Error::NotSimple(alloc::format!("loops {}", v.ground().format_set(loops))));
    }
    if let Some(c) = v.family().parallel_classes().into_iter().find(|c| c.len() > 1) {
        return Err(Error::NotSimple(alloc::format!("parallel class {}", v.ground().format_set(c))));
    }
    Ok(())
}

/// A finite truncation of the ray of `direction` from `start`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ray {
    pub start: LatticePoint,
    /// Parallel classes `F^0 ⊇ F^1 ⊇ ⋯`, each containing `direction`.
    pub steps: Vec<ElementSet>,
    /// `a^1, a^2, …`; `points[ℓ] = a^{ℓ+1}`.
    pub points: Vec<LatticePoint>,
    pub direction: usize,
}

impl Ray {
    /// `a^ℓ`, with `a^0` the start.
    pub fn point(&self, depth: usize) -> Option<&LatticePoint> {
        if depth == 0 {
            Some(&self.start)
        } else {
            self.points.get(depth - 1)
        }
    }

    /// `a^0, a^1, …` as a chain.
    pub fn chain(&self) -> Vec<LatticePoint> {
        core::iter::once(self.start.clone()).chain(self.points.iter().cloned()).collect()
    }
}

/// The first step of `e`'s ray at `x`: `x + 1_{class of e at x}`.
pub fn first_step(v: &Valuation, x: &LatticePoint, e: usize) -> Result<(ElementSet, LatticePoint)> {
    let class = x
        .matroid()
        .class_of(e)
        .ok_or_else(|| Error::Theorem(alloc::format!("{} is a loop at a member", v.ground().label(e))))?;
    let next = LatticePoint::derived(v, x.point().add_on(class, 1)?, "ray step")?;
    Ok((class, next))
}

pub fn trace_ray(v: &Valuation, x: &LatticePoint, e: usize, depth: usize) -> Result<Ray> {
    require_simple(v)?;
    check_element(v, e)?;
    let mut steps = Vec::with_capacity(depth);
    let mut points: Vec<LatticePoint> = Vec::with_capacity(depth);
    for _ in 0..depth {
        let at = points.last().unwrap_or(x);
        let (class, next) = first_step(v, at, e)?;
        steps.push(class);
        points.push(next);
    }
    Ok(Ray { start: x.clone(), steps, points, direction: e })
}

fn check_element(v: &Valuation, e: usize) -> Result<()> {
    if e < v.ground().len() {
        Ok(())
    } else {
        Err(Error::UnknownLabel(alloc::format!("#{e}")))
    }
}

/// Depth at which the rays of `e` and `f` from `x` separate.
pub fn delta(v: &Valuation, x: &LatticePoint, e: usize, f: usize) -> Result<i64> {
    require_simple(v)?;
    check_element(v, e)?;
    check_element(v, f)?;
    if e == f {
        return Err(Error::SameElement(v.ground().label(e).into()));
    }
    let joint = (0..v.len())
        .filter(|&i| {
            let b = v.family().bases()[i];
            b.contains(e) && b.contains(f)
        })
        .map(|i| v.eval(i, x.point()))
        .max()
        .ok_or_else(|| Error::NoJointBase {
            first: v.ground().label(e).into(),
            second: v.ground().label(f).into(),
        })?;
    i64::try_from(x.height() as i128 - joint).map_err(|_| Error::Overflow)
}

/// `δ_x` on all pairs; the diagonal is infinite and stored as `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UltrametricMatrix {
    size: usize,
    entries: Vec<Option<i64>>,
}

impl UltrametricMatrix {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, e: usize, f: usize) -> Option<i64> {
        self.entries[e * self.size + f]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Option<i64>]> {
        self.entries.chunks(self.size.max(1))
    }
}

pub fn ultrametric_matrix(v: &Valuation, x: &LatticePoint) -> Result<UltrametricMatrix> {
    require_simple(v)?;
    let n = v.ground().len();
    let mut entries = alloc::vec![None; n * n];
    for e in 0..n {
        for f in e + 1..n {
            let d = delta(v, x, e, f)?;
            entries[e * n + f] = Some(d);
            entries[f * n + e] = Some(d);
        }
    }
    Ok(UltrametricMatrix { size: n, entries })
}

/// Exponent of the Dress–Terhalle metric: `max{ (ω - p)(B) : e, f ∈ B }` for
/// `p` in the tight span.
pub fn dress_terhalle_metric(v: &Valuation, p: &RationalPoint, e: usize, f: usize) -> Result<Rational> {
    check_element(v, e)?;
    check_element(v, f)?;
    if e == f {
        return Err(Error::SameElement(v.ground().label(e).into()));
    }
    if !tropical::in_tight_span(v, p)? {
        return Err(Error::NotInTightSpan);
    }
    v.iter()
        .filter(|(b, _)| b.contains(e) && b.contains(f))
        .map(|(b, w)| Rational::from_integer(w) - p.sum_over(b))
        .max()
        .ok_or_else(|| Error::NoJointBase {
            first: v.ground().label(e).into(),
            second: v.ground().label(f).into(),
        })
}

/// Coordinates of `y` relative to `x`: `y_x(e)` is how far `e`'s ray from
/// `x` stays below `y`. For `y` not above `x`, `y` is first lifted by
/// `k·1` and the result shifted back by `k`.
pub fn coordinate(v: &Valuation, x: &LatticePoint, y: &LatticePoint) -> Result<Point> {
    require_simple(v)?;
    let k = x
        .point()
        .coords()
        .iter()
        .zip(y.point().coords())
        .map(|(a, b)| a - b)
        .max()
        .unwrap_or(0)
        .max(0);
    let lifted = lattice::shift(v, y, k)?;
    let mut out = Vec::with_capacity(v.ground().len());
    for e in 0..v.ground().len() {
        let mut at = x.clone();
        let mut steps = 0i64;
        loop {
            let (_, next) = first_step(v, &at, e)?;
            if !next.le(&lifted) {
                break;
            }
            at = next;
            steps += 1;
        }
        out.push(steps - k);
    }
    Ok(Point::new(out))
}

/// `y = ⋁_e e_x^{c(e)}` together with a base `B` of `M_{ω+y}` on which the
/// coordinates of `y` relative to `x` equal `c`.
pub fn raise(v: &Valuation, x: &LatticePoint, c: &Point) -> Result<(LatticePoint, ElementSet)> {
    require_simple(v)?;
    c.check_dim(v.ground().len())?;
    let mut tips = Vec::with_capacity(c.len());
    for (e, &depth) in c.coords().iter().enumerate() {
        let depth = usize::try_from(depth)
            .map_err(|_| Error::Degenerate(alloc::format!("negative ray depth {depth}")))?;
        let ray = trace_ray(v, x, e, depth)?;
        tips.push(ray.point(depth).expect("traced").clone());
    }
    let y = lattice::join_all(v, tips.iter())?.unwrap_or_else(|| x.clone());
    let coords = coordinate(v, x, &y)?;
    let base = y
        .matroid()
        .bases()
        .iter()
        .copied()
        .find(|b| b.iter().all(|e| coords.get(e) == c.get(e)))
        .ok_or_else(|| Error::Theorem("no base realises the requested coordinates".into()))?;
    Ok((y, base))
}

/// `M_{ω+x}`.
pub fn matroid_at(x: &LatticePoint) -> BaseFamily {
    x.matroid().clone()
}

/// Bases independent at some point of the lattice. Each base `B` of the
/// underlying matroid is certified by projecting a member onto the skeleton
/// of `B`; the result must be the whole underlying family.
pub fn matroid_at_infinity(v: &Valuation) -> Result<BaseFamily> {
    require_simple(v)?;
    let start = lattice::find_point(v)?;
    let mut certified = Vec::with_capacity(v.len());
    for &b in v.family().bases() {
        let p = crate::reconstruct::project_xb(v, &start, b)?;
        if !p.matroid().contains(b) {
            return Err(Error::Theorem(alloc::format!(
                "skeleton projection for {} does not certify it",
                v.ground().format_set(b)
            )));
        }
        certified.push(b);
    }
    let family = BaseFamily::new(v.ground_arc().clone(), v.rank(), certified)?;
    if &family != v.family() {
        return Err(Error::Theorem("matroid at infinity differs from the underlying matroid".into()));
    }
    Ok(family)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::fixtures::{rep23, tree, u23};
    use alloc::vec;

    fn pt(c: &[i64]) -> Point {
        Point::new(c.to_vec())
    }

    fn lp(v: &Valuation, c: &[i64]) -> LatticePoint {
        LatticePoint::new(v, pt(c)).unwrap()
    }

    fn set(items: &[usize]) -> ElementSet {
        ElementSet::from_indices(items.iter().map(|e| e - 1))
    }

    #[test]
    fn rays_in_u23() {
        let u = u23();
        let ray = trace_ray(&u, &lp(&u, &[0, 0, 0]), 0, 3).unwrap();
        assert_eq!(ray.steps, vec![set(&[1]); 3]);
        let pts: Vec<Point> = ray.points.iter().map(|p| p.point().clone()).collect();
        assert_eq!(pts, vec![pt(&[1, 0, 0]), pt(&[2, 0, 0]), pt(&[3, 0, 0])]);
    }

    #[test]
    fn rays_in_rep23() {
        let r = rep23();
        let ray = trace_ray(&r, &lp(&r, &[1, 1, 0]), 1, 2).unwrap();
        assert_eq!(ray.steps, vec![set(&[2, 3]), set(&[2])]);
        assert_eq!(ray.points[0].point(), &pt(&[1, 2, 1]));
        assert_eq!(ray.points[1].point(), &pt(&[1, 3, 1]));
    }

    #[test]
    fn ray_in_tree() {
        let t = tree();
        let ray = trace_ray(&t, &lp(&t, &[0, 0, 0]), 0, 1).unwrap();
        assert_eq!(ray.steps, vec![set(&[1, 2])]);
    }

    #[test]
    fn rays_need_simple() {
        let g = alloc::sync::Arc::new(crate::set::GroundSet::numbered(3).unwrap());
        let v = Valuation::from_pairs(g, 2, vec![(set(&[1, 2]), 0), (set(&[1, 3]), 0)]).unwrap();
        let x = lp(&v, &[0, 0, 0]);
        assert!(matches!(trace_ray(&v, &x, 0, 1), Err(Error::NotSimple(_))));
    }

    #[test]
    fn delta_examples() {
        let u = u23();
        let x = lp(&u, &[0, 0, 0]);
        assert_eq!(delta(&u, &x, 0, 1), Ok(0));
        assert_eq!(delta(&u, &x, 1, 2), Ok(0));
        let r = rep23();
        assert_eq!(delta(&r, &lp(&r, &[1, 1, 0]), 1, 2), Ok(1));
        let t = tree();
        assert_eq!(delta(&t, &lp(&t, &[0, 0, 0]), 0, 1), Ok(2));
        assert!(matches!(delta(&u, &x, 1, 1), Err(Error::SameElement(_))));
    }

    #[test]
    fn matrix_examples() {
        let t = tree();
        let m = ultrametric_matrix(&t, &lp(&t, &[0, 0, 0])).unwrap();
        assert_eq!(m.get(0, 1), Some(2));
        assert_eq!(m.get(0, 2), Some(0));
        assert_eq!(m.get(1, 2), Some(0));
        assert_eq!(m.get(1, 1), None);
        for e in 0..3 {
            for f in 0..3 {
                assert_eq!(m.get(e, f), m.get(f, e));
            }
        }
        let u = u23();
        let m = ultrametric_matrix(&u, &lp(&u, &[0, 0, 0])).unwrap();
        assert!(m.rows().flatten().all(|d| d.is_none_or(|d| d == 0)));
    }

    #[test]
    fn dress_terhalle_examples() {
        let t = tree();
        let p = RationalPoint::zeros(3);
        assert_eq!(dress_terhalle_metric(&t, &p, 0, 1), Ok(Rational::from_integer(-2)));
        assert_eq!(dress_terhalle_metric(&t, &p, 0, 2), Ok(Rational::from_integer(0)));
        assert_eq!(dress_terhalle_metric(&t, &p, 2, 0), dress_terhalle_metric(&t, &p, 0, 2));
        let off = pt(&[1, 0, 0]).to_rational();
        assert_eq!(dress_terhalle_metric(&t, &off, 0, 1), Err(Error::NotInTightSpan));
    }

    #[test]
    fn coordinate_examples() {
        let u = u23();
        let origin = lp(&u, &[0, 0, 0]);
        assert_eq!(coordinate(&u, &origin, &lp(&u, &[2, 0, 0])), Ok(pt(&[2, 0, 0])));
        assert_eq!(coordinate(&u, &origin, &origin), Ok(pt(&[0, 0, 0])));
        let r = rep23();
        // Each ray from (0,1,0) takes one step inside (1,2,1): e1 -> (1,1,0),
        // e2 -> (0,2,0), e3 -> (0,1,1); the second steps leave the box.
        assert_eq!(coordinate(&r, &lp(&r, &[0, 1, 0]), &lp(&r, &[1, 2, 1])), Ok(pt(&[1, 1, 1])));
        // Not above x: y_x = -x_y.
        let a = lp(&r, &[1, 1, 0]);
        let b = lp(&r, &[0, 1, 0]);
        let ab = coordinate(&r, &a, &b).unwrap();
        let ba = coordinate(&r, &b, &a).unwrap();
        assert_eq!(ab.coords().iter().map(|c| -c).collect::<Vec<_>>(), ba.coords());
    }

    #[test]
    fn raise_examples() {
        let u = u23();
        let (y, b) = raise(&u, &lp(&u, &[0, 0, 0]), &pt(&[1, 1, 0])).unwrap();
        assert_eq!(y.point(), &pt(&[1, 1, 1]));
        assert_eq!(b, set(&[1, 2]));

        let (y, _) = raise(&u, &lp(&u, &[1, 0, 0]), &pt(&[0, 0, 0])).unwrap();
        assert_eq!(y.point(), &pt(&[1, 0, 0]));

        let r = rep23();
        let (y, b) = raise(&r, &lp(&r, &[0, 1, 0]), &pt(&[0, 1, 0])).unwrap();
        assert_eq!(y.point(), &pt(&[0, 2, 0]));
        assert_eq!(b, set(&[1, 2]));
    }

    #[test]
    fn matroids_at_points_and_infinity() {
        let r = rep23();
        assert_eq!(matroid_at(&lp(&r, &[0, 1, 0])).len(), 3);
        assert_eq!(&matroid_at_infinity(&r).unwrap(), r.family());
        assert_eq!(&matroid_at_infinity(&u23()).unwrap(), u23().family());
        assert_eq!(&matroid_at_infinity(&tree()).unwrap(), tree().family());
    }
}
