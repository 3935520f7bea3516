//! Instance generators: tree metrics, determinant degrees of polynomial
//! matrices, uniform and randomly perturbed valuations, and the small named
//! fixtures used throughout the tests.

pub mod fixtures;
pub mod poly;
pub mod random;
pub mod tree;

pub use poly::{gen_representable, Poly, PolyMatrix};
pub use random::{gen_perturbed, gen_uniform_zero, random_poly_matrix, random_tree};
pub use tree::{gen_tree_metric, TreeInstance};
