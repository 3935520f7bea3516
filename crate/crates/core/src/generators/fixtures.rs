//! Named desk-scale instances.
//!
//! - `U23`: `ω ≡ 0` on `U_{2,3}` over `e1, e2, e3`.
//! - `REP23`: determinant degrees of the columns `(1,0), (0,1), (1,t)`,
//!   i.e. `ω{e1,e2} = 0`, `ω{e1,e3} = 1`, `ω{e2,e3} = 0`.
//! - `TREE`: path `z - a`, leaves `u, u'` hanging off `a`, leaf `v` off `z`,
//!   rooted at `z`, giving `ω{u,u'} = -2`, `ω{u,v} = ω{u',v} = 0`.

use alloc::sync::Arc;
use alloc::vec;

use super::tree::TreeInstance;
use crate::matroid::BaseFamily;
use crate::set::{ElementSet, GroundSet};
use crate::valuation::Valuation;

pub fn u23() -> Valuation {
    let g = Arc::new(GroundSet::numbered(3).expect("valid labels"));
    Valuation::zero(BaseFamily::uniform(g, 2).expect("valid family"))
}

pub fn rep23() -> Valuation {
    let g = Arc::new(GroundSet::numbered(3).expect("valid labels"));
    let s = |a: usize, b: usize| ElementSet::from_indices([a, b]);
    Valuation::from_pairs(g, 2, vec![(s(0, 1), 0), (s(0, 2), 1), (s(1, 2), 0)])
        .expect("valid valuation")
}

pub fn tree_instance() -> TreeInstance {
    TreeInstance::from_labels(
        &["z", "a", "u", "u'", "v"],
        &[("z", "a"), ("a", "u"), ("a", "u'"), ("z", "v")],
        &["u", "u'", "v"],
        "z",
    )
    .expect("valid tree")
}

pub fn tree() -> Valuation {
    super::tree::gen_tree_metric(&tree_instance()).expect("valid tree metric")
}
