use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// An unrooted tree stored as an undirected graph. Leaves carry names;
/// internal nodes do not.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Tree {
    pub(crate) nodes: Vec<Node>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub(crate) struct Node {
    pub(crate) name: Option<String>,
    pub(crate) edges: Vec<(usize, f64)>,
}

/// A bipartition of the leaves, as the sorted-leaf indices on the side that
/// does not contain the first leaf.
pub type Split = Vec<u64>;

impl Tree {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_leaf(&mut self, name: impl Into<String>) -> usize {
        self.nodes.push(Node {
            name: Some(name.into()),
            edges: Vec::new(),
        });
        self.nodes.len() - 1
    }

    pub fn add_internal(&mut self) -> usize {
        self.nodes.push(Node::default());
        self.nodes.len() - 1
    }

    pub fn connect(&mut self, a: usize, b: usize, length: f64) {
        self.nodes[a].edges.push((b, length));
        self.nodes[b].edges.push((a, length));
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn name(&self, node: usize) -> Option<&str> {
        self.nodes[node].name.as_deref()
    }

    pub fn neighbors(&self, node: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.nodes[node].edges.iter().copied()
    }

    pub fn degree(&self, node: usize) -> usize {
        self.nodes[node].edges.len()
    }

    /// Leaf names in sorted order.
    pub fn leaf_names(&self) -> Vec<String> {
        let mut names: Vec<String> = self.nodes.iter().filter_map(|n| n.name.clone()).collect();
        names.sort();
        names
    }

    /// True when every unnamed node has degree 3 (a degree-2 root is tolerated).
    pub fn is_binary(&self) -> bool {
        let roots = self
            .nodes
            .iter()
            .filter(|n| n.name.is_none() && n.edges.len() == 2)
            .count();
        roots <= 1
            && self
                .nodes
                .iter()
                .filter(|n| n.name.is_none())
                .all(|n| n.edges.len() == 3 || n.edges.len() == 2)
    }

    /// The non-trivial bipartitions induced by the edges.
    pub fn splits(&self) -> BTreeSet<Split> {
        let names = self.leaf_names();
        let k = names.len();
        let words = k.div_ceil(64).max(1);
        let index = |name: &str| names.binary_search_by(|n| n.as_str().cmp(name)).unwrap();
        let mut out = BTreeSet::new();
        if self.nodes.is_empty() {
            return out;
        }

        // Iterative post-order from node 0.
        let n = self.nodes.len();
        let mut parent = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut stack = vec![0usize];
        let mut seen = vec![false; n];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            order.push(v);
            for &(u, _) in &self.nodes[v].edges {
                if !seen[u] {
                    seen[u] = true;
                    parent[u] = v;
                    stack.push(u);
                }
            }
        }
        let mut below: Vec<Vec<u64>> = vec![vec![0; words]; n];
        for &v in order.iter().rev() {
            if let Some(name) = &self.nodes[v].name {
                let i = index(name);
                below[v][i / 64] |= 1 << (i % 64);
            }
            if parent[v] != usize::MAX {
                let p = parent[v];
                let mut side = below[v].clone();
                let size: u32 = side.iter().map(|w| w.count_ones()).sum();
                if size as usize >= 2 && size as usize + 2 <= k {
                    if side[0] & 1 == 1 {
                        for (w, word) in side.iter_mut().enumerate() {
                            let valid = if (w + 1) * 64 <= k {
                                u64::MAX
                            } else {
                                (1u64 << (k - w * 64)) - 1
                            };
                            *word = !*word & valid;
                        }
                    }
                    out.insert(side);
                }
                let child = below[v].clone();
                for (a, b) in below[p].iter_mut().zip(child) {
                    *a |= b;
                }
            }
        }
        out
    }
}

/// Number of non-trivial bipartitions found in exactly one of the trees.
pub fn rf_distance(t1: &Tree, t2: &Tree) -> Result<usize> {
    if t1.leaf_names() != t2.leaf_names() {
        return Err(Error::LeafSetMismatch);
    }
    let (s1, s2) = (t1.splits(), t2.splits());
    Ok(s1.symmetric_difference(&s2).count())
}

/// `1 − rf / (2(k − 3))` for trees on `k` leaves.
pub fn accuracy(inferred: &Tree, truth: &Tree) -> Result<f64> {
    let rf = rf_distance(inferred, truth)?;
    let k = truth.leaf_names().len();
    if k <= 3 {
        return Err(Error::TooFewTaxa { needed: 4, got: k });
    }
    Ok(1.0 - rf as f64 / (2 * (k - 3)) as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// ((a,b),(c,d)) style quartet with `pair` grouped together.
    fn quartet(pair: [&str; 2], rest: [&str; 2]) -> Tree {
        let mut t = Tree::new();
        let l: Vec<usize> = pair.iter().chain(&rest).map(|n| t.add_leaf(*n)).collect();
        let u = t.add_internal();
        let v = t.add_internal();
        t.connect(l[0], u, 1.0);
        t.connect(l[1], u, 1.0);
        t.connect(l[2], v, 1.0);
        t.connect(l[3], v, 1.0);
        t.connect(u, v, 1.0);
        t
    }

    #[test]
    fn quartet_splits() {
        let t = quartet(["a", "b"], ["c", "d"]);
        assert_eq!(t.splits().len(), 1);
        assert!(t.is_binary());
        assert_eq!(rf_distance(&t, &t).unwrap(), 0);
        let other = quartet(["a", "c"], ["b", "d"]);
        assert_eq!(rf_distance(&t, &other).unwrap(), 2);
        assert_eq!(accuracy(&t, &other).unwrap(), 0.0);
        assert_eq!(accuracy(&t, &t).unwrap(), 1.0);
        // same split written from the other side
        let same = quartet(["d", "c"], ["b", "a"]);
        assert_eq!(rf_distance(&t, &same).unwrap(), 0);
    }

    #[test]
    fn leaf_mismatch() {
        let t = quartet(["a", "b"], ["c", "d"]);
        let u = quartet(["a", "b"], ["c", "e"]);
        assert!(matches!(rf_distance(&t, &u), Err(Error::LeafSetMismatch)));
    }

    #[test]
    fn star_has_no_splits_and_no_accuracy() {
        let mut t = Tree::new();
        let c = t.add_internal();
        for n in ["a", "b", "c"] {
            let l = t.add_leaf(n);
            t.connect(c, l, 1.0);
        }
        assert!(t.splits().is_empty());
        assert!(matches!(accuracy(&t, &t), Err(Error::TooFewTaxa { .. })));
    }
}
