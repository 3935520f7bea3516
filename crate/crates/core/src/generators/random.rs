//! Seeded instance generators for tests and the command-line tool.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::poly::{gen_representable, Poly, PolyMatrix};
use super::tree::TreeInstance;
use crate::error::{Error, Result};
use crate::matroid::BaseFamily;
use crate::point::Point;
use crate::set::GroundSet;
use crate::valuation::Valuation;

/// Coordinate bound of the translation applied by [`gen_perturbed`].
pub const PERTURB_BOUND: i64 = 3;

/// `ω ≡ 0` on `U_{rank, |labels|}`.
pub fn gen_uniform_zero<S: AsRef<str>>(labels: &[S], rank: usize) -> Result<Valuation> {
    if rank > labels.len() {
        return Err(Error::Degenerate(alloc::format!(
            "rank {rank} exceeds {} elements",
            labels.len()
        )));
    }
    let ground = GroundSet::new(labels.iter().map(|l| l.as_ref().to_string()))?;
    Ok(Valuation::zero(BaseFamily::uniform(Arc::new(ground), rank)?))
}

/// A point with coordinates drawn uniformly from `[-bound, bound]`.
pub fn random_point<R: Rng>(rng: &mut R, len: usize, bound: i64) -> Point {
    Point::new((0..len).map(|_| rng.gen_range(-bound..=bound)).collect())
}

/// The translation vector [`gen_perturbed`] uses for `seed`.
pub fn perturbation(len: usize, seed: u64) -> Point {
    random_point(&mut ChaCha8Rng::seed_from_u64(seed), len, PERTURB_BOUND)
}

/// `ω + x` for a seeded random `x ∈ [-3, 3]^E`.
pub fn gen_perturbed(v: &Valuation, seed: u64) -> Result<Valuation> {
    v.translate(&perturbation(v.ground().len(), seed))
}

/// A random tree on 3 to 9 vertices with 2 to `max_leaves` marked leaves and
/// a random root.
pub fn random_tree(seed: u64, max_leaves: usize) -> Result<TreeInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_leaves = max_leaves.max(2);
    let n: usize = rng.gen_range(3..=9usize.max(max_leaves));
    let vertices: Vec<String> = (0..n).map(|i| alloc::format!("v{i}")).collect();
    let edges = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let k = rng.gen_range(2..=max_leaves.min(n));
    let mut leaves: Vec<usize> = order[..k].to_vec();
    leaves.sort_unstable();
    let root = rng.gen_range(0..n);
    TreeInstance::new(vertices, edges, leaves, root)
}

/// A random sparse `rows × cols` polynomial matrix with coefficients in
/// `[-2, 2]` and degrees at most `max_degree`, redrawn until some maximal
/// minor is nonzero.
pub fn random_poly_matrix(seed: u64, rows: usize, cols: usize, max_degree: usize) -> Result<PolyMatrix> {
    if rows == 0 || rows > cols {
        return Err(Error::InvalidMatrix(alloc::format!("{rows} × {cols} has no bases")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let labels: Vec<String> = (1..=cols).map(|i| alloc::format!("e{i}")).collect();
    loop {
        let entries = (0..rows)
            .map(|_| {
                (0..cols)
                    .map(|_| {
                        if rng.gen_bool(0.4) {
                            Poly::zero()
                        } else {
                            let deg = rng.gen_range(0..=max_degree);
                            Poly::new((0..=deg).map(|_| rng.gen_range(-2..=2)).collect())
                        }
                    })
                    .collect()
            })
            .collect();
        let m = PolyMatrix::new(labels.clone(), entries)?;
        match gen_representable(&m) {
            Ok(_) => return Ok(m),
            Err(Error::Degenerate(_)) => continue,
            Err(e) => return Err(e),
        }
    }
}
