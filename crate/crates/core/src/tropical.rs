//! The tropical linear space `T(ω)`: points `x` whose maximizer matroid
//! `M_{ω+x}` has no loop. Equivalently, for every `(n+1)`-subset `C` the
//! maximum of `ω(C - f) - x(f)` over `f ∈ C` with `C - f` a base is attained
//! at least twice.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::point::{Point, Rational, RationalPoint};
use crate::set::{subsets_of_size, ElementSet};
use crate::valuation::Valuation;

/// `x = base + Σ λ_i 1_{F_i}` with `F_1 ⊂ F_2 ⊂ ⋯` flats of the maximizer
/// matroid at `base`, every `λ_i > 0` and `Σ λ_i < 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatChainDecomposition {
    pub base: Point,
    pub chain: Vec<(ElementSet, Rational)>,
}

impl FlatChainDecomposition {
    pub fn reconstruct(&self) -> RationalPoint {
        let mut coords: Vec<Rational> =
            self.base.coords().iter().map(|&c| Rational::from_integer(c)).collect();
        for (flat, lambda) in &self.chain {
            for e in flat.iter() {
                coords[e] += lambda;
            }
        }
        RationalPoint::new(coords)
    }
}

/// Loop-free maximizer matroid.
pub fn is_member(v: &Valuation, x: &Point) -> Result<bool> {
    Ok(v.maximizer_family(x)?.loops().is_empty())
}

/// The twice-attained test over all `(n+1)`-subsets.
pub fn is_member_tw(v: &Valuation, x: &RationalPoint, caps: &Caps) -> Result<bool> {
    let n_elems = v.ground().len();
    x.check_dim(n_elems)?;
    if n_elems > caps.tw_elements {
        return Err(Error::CapExceeded { what: "twice-attained test ground set", limit: caps.tw_elements, actual: n_elems });
    }
    if v.rank() > caps.tw_rank {
        return Err(Error::CapExceeded { what: "twice-attained test rank", limit: caps.tw_rank, actual: v.rank() });
    }
    let to_rat = |w: i64| Rational::from_integer(w);
    for c in subsets_of_size(n_elems, v.rank() + 1) {
        let mut best: Option<Rational> = None;
        let mut count = 0;
        for f in c.iter() {
            if let Some(w) = v.value(c.without(f)) {
                let val = to_rat(w) - x.get(f);
                match best {
                    Some(b) if val < b => {}
                    Some(b) if val == b => count += 1,
                    _ => {
                        best = Some(val);
                        count = 1;
                    }
                }
            }
        }
        if best.is_some() && count < 2 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn require_tw(v: &Valuation, x: &RationalPoint, caps: &Caps) -> Result<()> {
    if is_member_tw(v, x, caps)? {
        Ok(())
    } else {
        Err(Error::NotMember(alloc::format!("{x}")))
    }
}

/// Componentwise floor of a member; the floor is again a member.
pub fn floor_point(v: &Valuation, x: &RationalPoint, caps: &Caps) -> Result<Point> {
    require_tw(v, x, caps)?;
    let floor = x.floor();
    if !is_member(v, &floor)? {
        return Err(Error::Theorem(alloc::format!("floor {floor} of a member is not a member")));
    }
    Ok(floor)
}

/// Splits a member into its floor plus a strictly nested chain of flats with
/// positive coefficients. The flats are the upper level sets of the
/// fractional parts.
pub fn decompose(v: &Valuation, x: &RationalPoint, caps: &Caps) -> Result<FlatChainDecomposition> {
    let base = floor_point(v, x, caps)?;
    let frac: Vec<Rational> = x.coords().iter().map(|c| c - c.floor()).collect();
    let mut levels: Vec<Rational> = frac.iter().copied().filter(|f| !f.is_zero()).collect();
    levels.sort_unstable_by(|a, b| b.cmp(a));
    levels.dedup();

    let matroid = v.maximizer_family(&base)?;
    let mut chain = Vec::with_capacity(levels.len());
    for (i, &alpha) in levels.iter().enumerate() {
        let flat = (0..frac.len()).filter(|&e| frac[e] >= alpha).collect::<ElementSet>();
        if matroid.closure(flat) != flat {
            return Err(Error::Theorem(alloc::format!(
                "level set {} is not a flat",
                v.ground().format_set(flat)
            )));
        }
        let next = levels.get(i + 1).copied().unwrap_or_else(Rational::zero);
        chain.push((flat, alpha - next));
    }
    Ok(FlatChainDecomposition { base, chain })
}

/// `min(x, y)` of two members.
pub fn trop_min(v: &Valuation, x: &Point, y: &Point) -> Result<Point> {
    for p in [x, y] {
        if !is_member(v, p)? {
            return Err(Error::NotMember(alloc::format!("{p}")));
        }
    }
    let m = x.inf(y);
    if !is_member(v, &m)? {
        return Err(Error::Theorem(alloc::format!("min {m} of members is not a member")));
    }
    Ok(m)
}

/// Whether `p(e) = max_{B ∋ e} (ω(B) - Σ_{f ∈ B - e} p(f))` for every `e`.
pub fn in_tight_span(v: &Valuation, p: &RationalPoint) -> Result<bool> {
    p.check_dim(v.ground().len())?;
    for e in 0..v.ground().len() {
        let best = v
            .iter()
            .filter(|(b, _)| b.contains(e))
            .map(|(b, w)| Rational::from_integer(w) - p.sum_over(b.without(e)))
            .max();
        if best != Some(p.get(e)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Normalises a member into the tight span: shift by `-(r/n)·1` so the
/// maximum of `ω + x'` is zero, then negate.
pub fn tight_span_point(v: &Valuation, x: &Point) -> Result<RationalPoint> {
    if !is_member(v, x)? {
        return Err(Error::NotMember(alloc::format!("{x}")));
    }
    let top = i64::try_from(v.max_value(x)?).map_err(|_| Error::Overflow)?;
    let shift = Rational::new(top, v.rank() as i64);
    let p = RationalPoint::new(
        x.coords().iter().map(|&c| shift - Rational::from_integer(c)).collect(),
    );
    if !in_tight_span(v, &p)? {
        return Err(Error::Theorem(alloc::format!("{p} fails the tight-span equations")));
    }
    Ok(p)
}
