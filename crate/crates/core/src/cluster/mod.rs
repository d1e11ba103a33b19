//! Hierarchical clustering of distance matrices into trees.

mod newick;
mod nj;
mod upgma;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

pub use newick::to_newick;
pub use nj::neighbor_joining;
pub use upgma::upgma;

use crate::error::{Error, Result};

/// Largest asymmetry tolerated before a matrix is rejected.
const SYMMETRY_TOLERANCE: f64 = 1e-9;

/// Symmetric matrix of non-negative distances with a zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    labels: Vec<String>,
    values: Vec<f64>,
}

impl DistanceMatrix {
    /// `values` is row-major, `labels.len()` squared long. Entries that
    /// differ from their transpose by less than 1e-9 are averaged.
    pub fn new(labels: Vec<String>, mut values: Vec<f64>) -> Result<Self> {
        let n = labels.len();
        if n < 2 {
            return Err(Error::InvalidMatrix(format!("need at least 2 items, got {n}")));
        }
        if values.len() != n * n {
            return Err(Error::InvalidMatrix(format!("expected {} values, got {}", n * n, values.len())));
        }
        for i in 0..n {
            if values[i * n + i] != 0.0 {
                return Err(Error::InvalidMatrix(format!("non-zero diagonal at {i}")));
            }
            for j in 0..i {
                let (a, b) = (values[i * n + j], values[j * n + i]);
                if !a.is_finite() || !b.is_finite() || a < 0.0 || b < 0.0 {
                    return Err(Error::InvalidMatrix(format!("negative or non-finite distance at ({i}, {j})")));
                }
                if (a - b).abs() > SYMMETRY_TOLERANCE {
                    return Err(Error::InvalidMatrix(format!("asymmetric at ({i}, {j}): {a} vs {b}")));
                }
                let mean = if a == b { a } else { 0.5 * (a + b) };
                values[i * n + j] = mean;
                values[j * n + i] = mean;
            }
        }
        Ok(Self { labels, values })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.len() + j]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Node {
    /// Set on leaves only.
    pub label: Option<String>,
    /// Child node ids with the length of the branch leading to them.
    pub children: Vec<(usize, f64)>,
    /// Distance from the leaves, for ultrametric trees.
    pub height: Option<f64>,
}

impl Node {
    fn leaf(label: String) -> Self {
        Self { label: Some(label), children: Vec::new(), height: Some(0.0) }
    }
}

/// Leaf-labeled tree. Neighbor-joining trees are unrooted and are stored
/// hanging from their last internal node; UPGMA trees are rooted.
#[derive(Debug, Clone, PartialEq)]
pub struct Tree {
    pub nodes: Vec<Node>,
    pub root: usize,
    pub rooted: bool,
}

impl Tree {
    pub fn leaf_labels(&self) -> Vec<&str> {
        self.nodes.iter().filter_map(|n| n.label.as_deref()).collect()
    }

    pub fn leaf_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.children.is_empty()).count()
    }
}

fn leaves(d: &DistanceMatrix) -> Vec<Node> {
    d.labels().iter().cloned().map(Node::leaf).collect()
}
