//! Causal and full directed algorithmic information over a set of strings.
//!
//! `info(i → j)` is how much the estimate of `x_j` drops when `x_i` joins
//! the conditioning set made of every other string:
//!
//! ```text
//! info(i → j) = S(x_j ‖ X \ {x_i, x_j}) − S(x_j ‖ X \ x_j)
//! ```
//!
//! The causal flavor lets `x_j` reference only the aligned past of the
//! others ([`ConditioningMode::PastOfBoth`]); the full flavor lets it
//! reference all of them ([`ConditioningMode::PastOfYAllOfX`]). Both keep
//! the own past of `x_j`. With two strings the first term is the simple
//! complexity of `x_j`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::admissible::Weighting;
use crate::complexity::conditional_complexity;
use crate::error::{Error, Result};
use crate::lz::{ConditioningMode, Context};

/// Labeled strings with unique labels and non-empty contents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringSet {
    labels: Vec<String>,
    items: Vec<Vec<u8>>,
}

impl StringSet {
    pub fn new(items: Vec<(String, Vec<u8>)>) -> Result<Self> {
        let mut labels = Vec::with_capacity(items.len());
        let mut data = Vec::with_capacity(items.len());
        for (label, bytes) in items {
            if labels.contains(&label) {
                return Err(Error::DuplicateLabel(label));
            }
            if bytes.is_empty() {
                return Err(Error::EmptyString(label));
            }
            labels.push(label);
            data.push(bytes);
        }
        Ok(Self { labels, items: data })
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn get(&self, i: usize) -> &[u8] {
        &self.items[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &[u8])> {
        self.labels.iter().map(String::as_str).zip(self.items.iter().map(Vec::as_slice))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DirectedKind {
    Causal,
    Full,
}

impl DirectedKind {
    pub fn mode(self) -> ConditioningMode {
        match self {
            DirectedKind::Causal => ConditioningMode::PastOfBoth,
            DirectedKind::Full => ConditioningMode::PastOfYAllOfX,
        }
    }
}

/// Filter below which directed information values are treated as noise.
pub const DEFAULT_THRESHOLD: f64 = 5e-3;

fn check_index(set: &StringSet, i: usize) -> Result<()> {
    if i >= set.len() {
        return Err(Error::IndexOutOfRange { index: i, len: set.len() });
    }
    Ok(())
}

/// Estimate of `x_target` conditioned on every other string except `excluded`.
pub fn conditioned_estimate(
    set: &StringSet,
    target: usize,
    excluded: Option<usize>,
    kind: DirectedKind,
    weighting: &Weighting,
) -> Result<f64> {
    check_index(set, target)?;
    let sources: Vec<&[u8]> = (0..set.len())
        .filter(|&k| k != target && Some(k) != excluded)
        .map(|k| set.get(k))
        .collect();
    let ctx = Context::new(kind.mode(), sources)?;
    Ok(conditional_complexity(set.get(target), &ctx, weighting)?.value)
}

pub fn directed_info(set: &StringSet, from: usize, to: usize, kind: DirectedKind, weighting: &Weighting) -> Result<f64> {
    if set.len() < 2 {
        return Err(Error::TooFewStrings { needed: 2, got: set.len() });
    }
    check_index(set, from)?;
    check_index(set, to)?;
    if from == to {
        return Err(Error::SameIndex(from, to));
    }
    let without = conditioned_estimate(set, to, Some(from), kind, weighting)?;
    let with = conditioned_estimate(set, to, None, kind, weighting)?;
    Ok(without - with)
}

pub fn causal_directed_info(set: &StringSet, from: usize, to: usize, weighting: &Weighting) -> Result<f64> {
    directed_info(set, from, to, DirectedKind::Causal, weighting)
}

pub fn full_directed_info(set: &StringSet, from: usize, to: usize, weighting: &Weighting) -> Result<f64> {
    directed_info(set, from, to, DirectedKind::Full, weighting)
}

/// Square matrix of directed information; `value(i, j)` is the flow `i → j`.
/// Negative cells are estimation noise and are kept as computed.
#[derive(Debug, Clone, PartialEq)]
pub struct DirectedInfoMatrix {
    pub labels: Vec<String>,
    pub values: Vec<f64>,
    pub kind: DirectedKind,
    pub threshold: f64,
}

impl DirectedInfoMatrix {
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn value(&self, from: usize, to: usize) -> f64 {
        self.values[from * self.size() + to]
    }

    /// Assembles the matrix from per-target baselines `S(x_j ‖ X \ x_j)` and
    /// a cell function giving `S(x_j ‖ X \ {x_i, x_j})`.
    pub fn from_parts(
        labels: Vec<String>,
        kind: DirectedKind,
        threshold: f64,
        baselines: &[f64],
        mut without: impl FnMut(usize, usize) -> f64,
    ) -> Self {
        let n = labels.len();
        let mut values = alloc::vec![0.0; n * n];
        for from in 0..n {
            for to in 0..n {
                if from != to {
                    values[from * n + to] = without(from, to) - baselines[to];
                }
            }
        }
        Self { labels, values, kind, threshold }
    }
}

/// Serial computation of every ordered pair; the conditioned-on-everything
/// baseline of each target is computed once.
pub fn directed_info_matrix(set: &StringSet, kind: DirectedKind, weighting: &Weighting) -> Result<DirectedInfoMatrix> {
    if set.len() < 2 {
        return Err(Error::TooFewStrings { needed: 2, got: set.len() });
    }
    let n = set.len();
    let baselines = (0..n)
        .map(|j| conditioned_estimate(set, j, None, kind, weighting))
        .collect::<Result<Vec<_>>>()?;
    let mut cells = Vec::with_capacity(n * n);
    for from in 0..n {
        for to in 0..n {
            cells.push(if from == to {
                0.0
            } else {
                conditioned_estimate(set, to, Some(from), kind, weighting)?
            });
        }
    }
    Ok(DirectedInfoMatrix::from_parts(
        set.labels().to_vec(),
        kind,
        DEFAULT_THRESHOLD,
        &baselines,
        |i, j| cells[i * n + j],
    ))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CausalGraph {
    pub labels: Vec<String>,
    pub edges: Vec<Edge>,
}

impl CausalGraph {
    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.edges.iter().any(|e| e.from == from && e.to == to)
    }

    pub fn is_acyclic(&self) -> bool {
        let n = self.labels.len();
        let mut indegree = alloc::vec![0usize; n];
        for e in &self.edges {
            indegree[e.to] += 1;
        }
        let mut ready: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = ready.pop() {
            seen += 1;
            for e in self.edges.iter().filter(|e| e.from == v) {
                indegree[e.to] -= 1;
                if indegree[e.to] == 0 {
                    ready.push(e.to);
                }
            }
        }
        seen == n
    }
}

/// Keeps every off-diagonal cell at or above `threshold` as a weighted edge.
pub fn extract_dag(m: &DirectedInfoMatrix, threshold: f64) -> CausalGraph {
    let n = m.size();
    let edges = (0..n)
        .flat_map(|from| (0..n).map(move |to| (from, to)))
        .filter(|&(from, to)| from != to && m.value(from, to) >= threshold)
        .map(|(from, to)| Edge { from, to, weight: m.value(from, to) })
        .collect();
    let graph = CausalGraph { labels: m.labels.clone(), edges };
    if !graph.is_acyclic() {
        log::warn!("causality graph at threshold {threshold} contains a cycle");
    }
    graph
}
