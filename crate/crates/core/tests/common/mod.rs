//! Shared corpus and sampling for the integration tests.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use valmat_core::ends::require_simple;
use valmat_core::generators::{gen_representable, gen_tree_metric, gen_uniform_zero, random_poly_matrix, random_tree};
use valmat_core::lattice::{self, LatticePoint};
use valmat_core::Valuation;

pub struct Instance {
    pub name: String,
    /// As generated; may have loops or parallel elements.
    pub raw: Valuation,
    /// Simple version of `raw`.
    pub simple: Valuation,
}

fn instance(name: String, raw: Valuation) -> Instance {
    let simple = if require_simple(&raw).is_ok() {
        raw.clone()
    } else {
        raw.simplify().expect("generated valuations simplify").valuation
    };
    Instance { name, raw, simple }
}

/// `U_{n,m}` for `n ≤ 3`, `m ≤ 6`; 10 tree metrics with at most 6 leaves;
/// 10 polynomial matrices with at most 3 rows, 6 columns and degree 3.
pub fn corpus() -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 1..=3usize {
        for m in n..=6usize {
            let labels: Vec<String> = (1..=m).map(|i| format!("e{i}")).collect();
            out.push(instance(format!("U{n},{m}"), gen_uniform_zero(&labels, n).unwrap()));
        }
    }
    // Seeds are scanned in order, skipping instances too small to exercise
    // anything beyond a single base.
    let mut seed = 0u64;
    let mut trees = 0;
    while trees < 10 {
        let tree = random_tree(seed, 6).unwrap();
        seed += 1;
        if tree.leaves().len() >= 4 {
            out.push(instance(format!("tree#{}", seed - 1), gen_tree_metric(&tree).unwrap()));
            trees += 1;
        }
    }
    let mut seed = 0u64;
    let mut matrices = 0;
    while matrices < 10 {
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + seed);
        let rows = rng.gen_range(2..=3usize);
        let cols = rng.gen_range(rows + 2..=6usize);
        let m = random_poly_matrix(seed, rows, cols, 3).unwrap();
        seed += 1;
        let inst = instance(format!("poly#{}", seed - 1), gen_representable(&m).unwrap());
        if inst.simple.ground().len() > inst.simple.rank() + 1 {
            out.push(inst);
            matrices += 1;
        }
    }
    out
}

/// A uniformly random cover or cocover step, repeated `steps` times.
pub fn walk<R: Rng>(v: &Valuation, from: &LatticePoint, steps: usize, rng: &mut R) -> LatticePoint {
    let mut at = from.clone();
    for _ in 0..steps {
        let mut next = lattice::covers(v, &at).unwrap();
        next.extend(lattice::cocovers(v, &at).unwrap());
        at = next.choose(rng).expect("every member has covers").clone();
    }
    at
}

/// `count` members reached by walks of up to `max_steps` from a found point.
pub fn sample_points<R: Rng>(v: &Valuation, count: usize, max_steps: usize, rng: &mut R) -> Vec<LatticePoint> {
    let start = lattice::find_point(v).unwrap();
    (0..count)
        .map(|_| {
            let steps = rng.gen_range(0..=max_steps);
            walk(v, &start, steps, rng)
        })
        .collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
