//! Tree metrics as rank-2 valuated matroids.

use alloc::collections::VecDeque;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matroid::BaseFamily;
use crate::set::{subsets_of_size, GroundSet};
use crate::valuation::Valuation;

/// A tree with unit-length edges, a leaf set `X` (any vertices, at least
/// two) and a root `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeInstance {
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
    leaves: Vec<usize>,
    root: usize,
    depth: Vec<i64>,
    parent: Vec<Option<usize>>,
}

impl TreeInstance {
    pub fn new(
        vertices: Vec<String>,
        edges: Vec<(usize, usize)>,
        leaves: Vec<usize>,
        root: usize,
    ) -> Result<Self> {
        let n = vertices.len();
        if n == 0 {
            return Err(Error::InvalidTree("no vertices".into()));
        }
        for (i, v) in vertices.iter().enumerate() {
            if v.is_empty() || vertices[..i].contains(v) {
                return Err(Error::InvalidTree(alloc::format!("bad vertex label `{v}`")));
            }
        }
        if root >= n {
            return Err(Error::InvalidTree("root out of range".into()));
        }
        if edges.len() + 1 != n {
            return Err(Error::InvalidTree(alloc::format!(
                "{} edges on {n} vertices",
                edges.len()
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &edges {
            if a >= n || b >= n || a == b {
                return Err(Error::InvalidTree("bad edge".into()));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut depth = vec![-1i64; n];
        let mut parent = vec![None; n];
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if depth[w] < 0 {
                    depth[w] = depth[v] + 1;
                    parent[w] = Some(v);
                    queue.push_back(w);
                }
            }
        }
        if depth.iter().any(|&d| d < 0) {
            return Err(Error::InvalidTree("not connected".into()));
        }
        if leaves.len() < 2 {
            return Err(Error::InvalidTree("fewer than two leaves".into()));
        }
        for (i, &l) in leaves.iter().enumerate() {
            if l >= n || leaves[..i].contains(&l) {
                return Err(Error::InvalidTree("bad leaf".into()));
            }
        }
        Ok(TreeInstance { vertices, edges, leaves, root, depth, parent })
    }

    pub fn from_labels(
        vertices: &[&str],
        edges: &[(&str, &str)],
        leaves: &[&str],
        root: &str,
    ) -> Result<Self> {
        let pos = |l: &str| {
            vertices
                .iter()
                .position(|v| *v == l)
                .ok_or_else(|| Error::InvalidTree(alloc::format!("unknown vertex `{l}`")))
        };
        let edges = edges
            .iter()
            .map(|(a, b)| Ok((pos(a)?, pos(b)?)))
            .collect::<Result<Vec<_>>>()?;
        let leaves = leaves.iter().map(|l| pos(l)).collect::<Result<Vec<_>>>()?;
        TreeInstance::new(
            vertices.iter().map(|v| v.to_string()).collect(),
            edges,
            leaves,
            pos(root)?,
        )
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn leaves(&self) -> &[usize] {
        &self.leaves
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// Lowest common ancestor with respect to the root.
    pub fn lca(&self, mut a: usize, mut b: usize) -> usize {
        while self.depth[a] > self.depth[b] {
            a = self.parent[a].expect("non-root has a parent");
        }
        while self.depth[b] > self.depth[a] {
            b = self.parent[b].expect("non-root has a parent");
        }
        while a != b {
            a = self.parent[a].expect("non-root has a parent");
            b = self.parent[b].expect("non-root has a parent");
        }
        a
    }

    /// Number of edges between two vertices.
    pub fn distance(&self, a: usize, b: usize) -> i64 {
        self.depth[a] + self.depth[b] - 2 * self.depth[self.lca(a, b)]
    }

    pub fn depth(&self, v: usize) -> i64 {
        self.depth[v]
    }

    fn leaf_family(&self) -> Result<BaseFamily> {
        let ground = GroundSet::new(self.leaves.iter().map(|&l| self.vertices[l].clone()))?;
        BaseFamily::uniform(Arc::new(ground), 2)
    }

    /// The pairwise leaf distance `d` as a valuation on the same family.
    pub fn distance_valuation(&self) -> Result<Valuation> {
        let family = self.leaf_family()?;
        let values = family
            .bases()
            .iter()
            .map(|b| {
                let mut it = b.iter().map(|i| self.leaves[i]);
                let (u, v) = (it.next().expect("pair"), it.next().expect("pair"));
                self.distance(u, v)
            })
            .collect();
        Valuation::new(family, values)
    }

    /// `-d(z, u)` for each leaf `u`, in leaf order.
    pub fn root_offsets(&self) -> Vec<i64> {
        self.leaves.iter().map(|&l| -self.depth[l]).collect()
    }
}

/// `ω(u, v) = -2 d(z, lca(u, v))` on all pairs of leaves.
pub fn gen_tree_metric(tree: &TreeInstance) -> Result<Valuation> {
    let family = tree.leaf_family()?;
    debug_assert_eq!(family.len(), subsets_of_size(tree.leaves.len(), 2).count());
    let values = family
        .bases()
        .iter()
        .map(|b| {
            let mut it = b.iter().map(|i| tree.leaves[i]);
            let (u, v) = (it.next().expect("pair"), it.next().expect("pair"));
            -2 * tree.depth[tree.lca(u, v)]
        })
        .collect();
    Valuation::new(family, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::fixtures::{tree, tree_instance};
    use crate::point::Point;

    #[test]
    fn fixture_values() {
        let v = tree();
        let vals: Vec<i64> = v.values().to_vec();
        // bases in order {u,u'}, {u,v}, {u',v}
        assert_eq!(vals, vec![-2, 0, 0]);
        assert_eq!(v.check_exc(), Ok(None));
    }

    #[test]
    fn star_is_all_zero() {
        let t = TreeInstance::from_labels(
            &["z", "a", "b", "c"],
            &[("z", "a"), ("z", "b"), ("z", "c")],
            &["a", "b", "c"],
            "z",
        )
        .unwrap();
        assert!(gen_tree_metric(&t).unwrap().values().iter().all(|&w| w == 0));
    }

    #[test]
    fn path_gives_single_base() {
        let t = TreeInstance::from_labels(&["u", "z", "v"], &[("u", "z"), ("z", "v")], &["u", "v"], "z")
            .unwrap();
        let v = gen_tree_metric(&t).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!(v.values(), &[0]);
    }

    #[test]
    fn distance_is_projectively_equivalent() {
        let t = tree_instance();
        let d = t.distance_valuation().unwrap();
        assert_eq!(d.values(), &[2, 3, 3]);
        let h = d.projectively_equivalent(&tree()).unwrap().unwrap();
        assert_eq!(h.to_integer(), Some(Point::new(t.root_offsets())));
        assert_eq!(t.root_offsets(), vec![-2, -2, -1]);
    }

    #[test]
    fn rejects_bad_trees() {
        assert!(TreeInstance::from_labels(&["a", "b", "c"], &[("a", "b")], &["a", "b"], "a").is_err());
        assert!(TreeInstance::from_labels(
            &["a", "b", "c"],
            &[("a", "b"), ("b", "a")],
            &["a", "c"],
            "a"
        )
        .is_err());
        assert!(TreeInstance::from_labels(&["a", "b"], &[("a", "b")], &["a"], "a").is_err());
    }
}
