//! Random additive and ultrametric trees with known topology.

use std::collections::BTreeSet;

use rand::Rng;
use salza_core::{DistanceMatrix, Tree};

/// Rooted binary tree grown by joining random pairs of clusters. Nodes
/// `0..n` are the leaves.
pub struct RandomTree {
    pub labels: Vec<String>,
    pub parent: Vec<Option<usize>>,
    /// Length of the branch to the parent.
    pub branch: Vec<f64>,
    pub height: Vec<f64>,
}

impl RandomTree {
    /// Branch lengths drawn independently from [0.1, 1).
    pub fn additive(n: usize, rng: &mut impl Rng) -> Self {
        Self::grow(n, rng, false)
    }

    /// Every leaf at height 0 and each merge strictly above its children.
    pub fn ultrametric(n: usize, rng: &mut impl Rng) -> Self {
        Self::grow(n, rng, true)
    }

    fn grow(n: usize, rng: &mut impl Rng, clock: bool) -> Self {
        let mut t = Self {
            labels: (0..n).map(|i| format!("t{i}")).collect(),
            parent: vec![None; n],
            branch: vec![0.0; n],
            height: vec![0.0; n],
        };
        let mut active: Vec<usize> = (0..n).collect();
        while active.len() > 1 {
            let a = active.swap_remove(rng.random_range(0..active.len()));
            let b = active.swap_remove(rng.random_range(0..active.len()));
            let k = t.parent.len();
            t.parent.push(None);
            t.branch.push(0.0);
            t.parent[a] = Some(k);
            t.parent[b] = Some(k);
            if clock {
                let h = t.height[a].max(t.height[b]) + rng.random_range(0.1..1.0);
                t.height.push(h);
                t.branch[a] = h - t.height[a];
                t.branch[b] = h - t.height[b];
            } else {
                t.height.push(0.0);
                t.branch[a] = rng.random_range(0.1..1.0);
                t.branch[b] = rng.random_range(0.1..1.0);
            }
            active.push(k);
        }
        t
    }

    fn leaves(&self) -> usize {
        self.labels.len()
    }

    fn path_distance(&self, a: usize, b: usize) -> f64 {
        let mut up = vec![None; self.parent.len()];
        let (mut v, mut d) = (a, 0.0);
        loop {
            up[v] = Some(d);
            match self.parent[v] {
                Some(p) => {
                    d += self.branch[v];
                    v = p;
                }
                None => break,
            }
        }
        let (mut v, mut d) = (b, 0.0);
        loop {
            if let Some(da) = up[v] {
                return da + d;
            }
            d += self.branch[v];
            v = self.parent[v].unwrap();
        }
    }

    pub fn distances(&self) -> DistanceMatrix {
        let n = self.leaves();
        let mut values = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    values[i * n + j] = self.path_distance(i, j);
                }
            }
        }
        DistanceMatrix::new(self.labels.clone(), values).unwrap()
    }

    /// Leaf-label sets under every internal node.
    pub fn clades(&self) -> BTreeSet<BTreeSet<String>> {
        let mut sets: Vec<BTreeSet<String>> = vec![BTreeSet::new(); self.parent.len()];
        for leaf in 0..self.leaves() {
            let mut v = Some(leaf);
            while let Some(u) = v {
                sets[u].insert(self.labels[leaf].clone());
                v = self.parent[u];
            }
        }
        sets.into_iter().skip(self.leaves()).collect()
    }

    pub fn merge_heights(&self) -> Vec<f64> {
        let mut h = self.height[self.leaves()..].to_vec();
        h.sort_by(f64::total_cmp);
        h
    }
}

pub fn tree_clades(t: &Tree) -> BTreeSet<BTreeSet<String>> {
    fn walk(t: &Tree, v: usize, out: &mut BTreeSet<BTreeSet<String>>) -> BTreeSet<String> {
        let node = &t.nodes[v];
        if let Some(l) = &node.label {
            return BTreeSet::from([l.clone()]);
        }
        let mut here = BTreeSet::new();
        for &(c, _) in &node.children {
            here.extend(walk(t, c, out));
        }
        out.insert(here.clone());
        here
    }
    let mut out = BTreeSet::new();
    walk(t, t.root, &mut out);
    out
}

pub fn tree_merge_heights(t: &Tree) -> Vec<f64> {
    let mut h: Vec<f64> =
        t.nodes.iter().filter(|n| !n.children.is_empty()).map(|n| n.height.unwrap()).collect();
    h.sort_by(f64::total_cmp);
    h
}

/// Non-trivial bipartitions, each written as the side without the
/// smallest label.
pub fn splits(clades: &BTreeSet<BTreeSet<String>>, labels: &[String]) -> BTreeSet<BTreeSet<String>> {
    let all: BTreeSet<String> = labels.iter().cloned().collect();
    let first = all.iter().next().unwrap().clone();
    clades
        .iter()
        .filter(|c| c.len() >= 2 && c.len() + 2 <= all.len())
        .map(|c| if c.contains(&first) { all.difference(c).cloned().collect() } else { c.clone() })
        .collect()
}
