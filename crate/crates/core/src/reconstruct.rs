//! Reading the valuation back off the lattice.
//!
//! The skeleton `S(B)` of a base `B` is the set of members at which `B` is a
//! maximizer. `x_B` is the largest skeleton point below `x`, reached by
//! iterating `y ← (⋁_{e ∈ B} e^1_y) - 1` from `y = x`. Then
//! `ω^{L,x}(B) = r(x_B) - r(x)` and, basewise,
//! `ω^{L,x}(B) = (ω + x)(B) - r(x)`.

use alloc::vec::Vec;

use crate::ends::{first_step, require_simple};
use crate::error::{Error, Result};
use crate::lattice::{self, LatticePoint};
use crate::point::{Point, RationalPoint};
use crate::set::ElementSet;
use crate::valuation::Valuation;

/// Upper bound on projection iterations before declaring non-termination.
const MAX_PROJECTION_STEPS: usize = 100_000;

fn require_base(v: &Valuation, b: ElementSet) -> Result<()> {
    if v.family().contains(b) {
        Ok(())
    } else {
        Err(Error::NotABase(v.ground().format_set(b)))
    }
}

/// Whether `y ∈ S(B)`.
pub fn skeleton_member(v: &Valuation, b: ElementSet, y: &LatticePoint) -> Result<bool> {
    require_simple(v)?;
    require_base(v, b)?;
    Ok(y.matroid().contains(b))
}

/// `x_B`, the maximum point of `S(B)` below `x`.
pub fn project_xb(v: &Valuation, x: &LatticePoint, b: ElementSet) -> Result<LatticePoint> {
    require_simple(v)?;
    require_base(v, b)?;
    let mut y = x.clone();
    for _ in 0..MAX_PROJECTION_STEPS {
        if y.matroid().contains(b) {
            return Ok(y);
        }
        let steps = b
            .iter()
            .map(|e| first_step(v, &y, e).map(|(_, p)| p))
            .collect::<Result<Vec<_>>>()?;
        let top = lattice::join_all(v, steps.iter())?.expect("bases are nonempty");
        let next = lattice::shift(v, &top, -1)?;
        if !next.le(&y) {
            return Err(Error::Theorem("skeleton projection moved upward".into()));
        }
        y = next;
    }
    Err(Error::Theorem("skeleton projection did not terminate".into()))
}

/// `ω^{L,x}(B) = r(x_B) - r(x)` on every base of the matroid at infinity,
/// which for a simple valuation is the underlying family.
pub fn omega_from_lattice(v: &Valuation, x: &LatticePoint) -> Result<Valuation> {
    require_simple(v)?;
    let values = v
        .family()
        .bases()
        .iter()
        .map(|&b| {
            let p = project_xb(v, x, b)?;
            p.height().checked_sub(x.height()).ok_or(Error::Overflow)
        })
        .collect::<Result<Vec<_>>>()?;
    Valuation::new(v.family().clone(), values)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundTrip {
    pub reconstructed: Valuation,
    /// `h` with `reconstructed = ω + h`.
    pub witness: RationalPoint,
}

/// Checks `(ω + x)(B) = r(x_B)` on every base, then returns the
/// reconstructed valuation with a projective-equivalence witness.
pub fn roundtrip_check(v: &Valuation, x: &LatticePoint) -> Result<RoundTrip> {
    let reconstructed = omega_from_lattice(v, x)?;
    for (i, &b) in v.family().bases().iter().enumerate() {
        let expected = v.eval(i, x.point()) - x.height() as i128;
        let got = reconstructed.values()[i] as i128;
        if expected != got {
            return Err(Error::Theorem(alloc::format!(
                "round trip fails on {}: (ω+x)(B) - r(x) = {expected}, lattice gives {got}",
                v.ground().format_set(b)
            )));
        }
    }
    let witness = v
        .projectively_equivalent(&reconstructed)?
        .ok_or_else(|| Error::Theorem("reconstruction is not projectively equivalent".into()))?;
    Ok(RoundTrip { reconstructed, witness })
}

/// A pair with `r(x) + r(y) > r(x ∧ y) + r(x ∨ y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularViolation {
    pub x: Point,
    pub y: Point,
    pub sum: i64,
    pub meet_join_sum: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModularReport {
    pub checked: usize,
    pub violations: Vec<ModularViolation>,
}

impl ModularReport {
    pub fn all_modular(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `r(x) + r(y) = r(x ∧ y) + r(x ∨ y)` on each sampled pair.
/// A clean report is evidence, not proof, of modularity.
pub fn modular_probe(v: &Valuation, pairs: &[(LatticePoint, LatticePoint)]) -> Result<ModularReport> {
    let mut report = ModularReport::default();
    for (x, y) in pairs {
        let m = lattice::meet(v, x, y)?;
        let j = lattice::join(v, x, y)?;
        let sum = x.height() + y.height();
        let other = m.height() + j.height();
        if sum < other {
            return Err(Error::Theorem("semimodular inequality fails".into()));
        }
        if sum != other {
            report.violations.push(ModularViolation {
                x: x.point().clone(),
                y: y.point().clone(),
                sum,
                meet_join_sum: other,
            });
        }
        report.checked += 1;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::fixtures::{rep23, tree, u23};
    use crate::generators::gen_uniform_zero;

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
    fn skeleton_examples() {
        let r = rep23();
        assert_eq!(skeleton_member(&r, set(&[1, 3]), &lp(&r, &[0, 1, 0])), Ok(true));
        assert_eq!(skeleton_member(&r, set(&[2, 3]), &lp(&r, &[1, 1, 0])), Ok(false));
        let u = u23();
        for &b in u.family().bases() {
            assert_eq!(skeleton_member(&u, b, &lp(&u, &[0, 0, 0])), Ok(true));
        }
        let g = alloc::sync::Arc::new(crate::set::GroundSet::numbered(4).unwrap());
        let u24 = Valuation::zero(crate::matroid::BaseFamily::uniform(g, 2).unwrap());
        let x = lp(&u24, &[0, 0, 0, 0]);
        assert!(matches!(skeleton_member(&u24, set(&[1, 2, 3]), &x), Err(Error::NotABase(_))));
    }

    #[test]
    fn projection_examples() {
        let r = rep23();
        let x = lp(&r, &[1, 1, 0]);
        assert_eq!(project_xb(&r, &x, set(&[2, 3])).unwrap().point(), &pt(&[0, 1, 0]));
        assert_eq!(project_xb(&r, &x, set(&[1, 2])).unwrap().point(), &pt(&[1, 1, 0]));
        let u = u23();
        for &b in u.family().bases() {
            assert_eq!(project_xb(&u, &lp(&u, &[0, 0, 0]), b).unwrap().point(), &pt(&[0, 0, 0]));
        }
        let t = tree();
        assert_eq!(project_xb(&t, &lp(&t, &[0, 0, 0]), set(&[1, 2])).unwrap().point(), &pt(&[0, 0, -2]));
    }

    #[test]
    fn omega_examples() {
        let r = rep23();
        assert_eq!(omega_from_lattice(&r, &lp(&r, &[1, 1, 0])).unwrap().values(), &[0, 0, -1]);
        let u = u23();
        assert_eq!(omega_from_lattice(&u, &lp(&u, &[0, 0, 0])).unwrap().values(), &[0, 0, 0]);
        let t = tree();
        assert_eq!(omega_from_lattice(&t, &lp(&t, &[0, 0, 0])).unwrap().values(), &[-2, 0, 0]);
    }

    #[test]
    fn roundtrip_examples() {
        let r = rep23();
        let rt = roundtrip_check(&r, &lp(&r, &[1, 1, 0])).unwrap();
        assert_eq!(rt.reconstructed.values(), &[0, 0, -1]);
        // x - (r(x)/n)·1 = (1,1,0) - 1
        assert_eq!(rt.witness.to_integer(), Some(pt(&[0, 0, -1])));
        let u = u23();
        let rt = roundtrip_check(&u, &lp(&u, &[0, 0, 0])).unwrap();
        assert_eq!(rt.witness.to_integer(), Some(pt(&[0, 0, 0])));
        let t = tree();
        let rt = roundtrip_check(&t, &lp(&t, &[0, 0, 0])).unwrap();
        assert_eq!(rt.reconstructed, t);
    }

    #[test]
    fn modular_examples() {
        let u = u23();
        let report = modular_probe(&u, &[(lp(&u, &[1, 0, 0]), lp(&u, &[0, 1, 0]))]).unwrap();
        assert!(report.all_modular());
        assert_eq!(report.checked, 1);

        // Two disjoint lines of U_{3,4} meet only in the bottom of [0, 1].
        let u34 = gen_uniform_zero(&["a", "b", "c", "d"], 3).unwrap();
        let x = lp(&u34, &[1, 1, 0, 0]);
        let y = lp(&u34, &[0, 0, 1, 1]);
        let report = modular_probe(&u34, &[(x, y)]).unwrap();
        assert_eq!(report.violations.len(), 1);
        assert_eq!((report.violations[0].sum, report.violations[0].meet_join_sum), (4, 3));
    }
}
