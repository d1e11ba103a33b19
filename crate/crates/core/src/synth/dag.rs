use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use super::{check_stochastic, pick, seeded_rng};
use crate::directed::StringSet;
use crate::error::{Error, Result};
use crate::lz::MIN_MATCH;

/// Processes copying from each other's past.
///
/// Row `i` of `connectivity` has `processes + 1` entries: entry `j <
/// processes` is the probability that a step of process `i` copies from
/// process `j`, and the last entry the probability that it emits fresh
/// uniform symbols (its innovation).
#[derive(Debug, Clone, PartialEq)]
pub struct DagSpec {
    pub processes: usize,
    pub connectivity: Vec<f64>,
    pub length: usize,
    pub burn_in: usize,
    /// Segment length is `round(copy_scale · p)`, at least 3 for copies and
    /// 1 for innovation.
    pub copy_scale: f64,
    pub alphabet_size: usize,
    pub seed: u64,
}

impl DagSpec {
    pub const DEFAULT_BURN_IN: usize = 12;
    pub const DEFAULT_COPY_SCALE: f64 = 20.0;
    pub const DEFAULT_ALPHABET: usize = 256;

    /// Spec with default burn-in, copy scale and alphabet.
    pub fn new(connectivity: Vec<Vec<f64>>, length: usize, seed: u64) -> Self {
        Self {
            processes: connectivity.len(),
            connectivity: connectivity.into_iter().flatten().collect(),
            length,
            burn_in: Self::DEFAULT_BURN_IN,
            copy_scale: Self::DEFAULT_COPY_SCALE,
            alphabet_size: Self::DEFAULT_ALPHABET,
            seed,
        }
    }

    pub fn weight(&self, to: usize, from: usize) -> f64 {
        self.connectivity[to * (self.processes + 1) + from]
    }

    pub fn innovation(&self, process: usize) -> f64 {
        self.weight(process, self.processes)
    }

    /// Ground-truth edges `from → to`, one per non-zero copy probability.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.processes;
        let mut edges = Vec::new();
        for from in 0..n {
            for to in 0..n {
                if self.weight(to, from) > 0.0 {
                    edges.push((from, to));
                }
            }
        }
        edges
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.processes;
        if n == 0 {
            return Err(Error::InvalidSpec("no processes".into()));
        }
        if self.connectivity.len() != n * (n + 1) {
            return Err(Error::InvalidSpec(format!(
                "connectivity has {} entries, expected {}",
                self.connectivity.len(),
                n * (n + 1)
            )));
        }
        if !(2..=256).contains(&self.alphabet_size) {
            return Err(Error::InvalidSpec(format!("alphabet size {} outside 2..=256", self.alphabet_size)));
        }
        if self.length == 0 || self.burn_in < MIN_MATCH {
            return Err(Error::InvalidSpec("length must be positive and burn-in at least 3".into()));
        }
        if !self.copy_scale.is_finite() || self.copy_scale <= 0.0 {
            return Err(Error::InvalidSpec("copy scale must be positive".into()));
        }
        check_stochastic(&self.connectivity, n + 1).map_err(Error::InvalidSpec)?;
        if !is_acyclic(n, &self.edges()) {
            return Err(Error::CyclicConnectivity);
        }
        Ok(())
    }
}

fn is_acyclic(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut indegree = vec![0usize; n];
    for &(_, to) in edges {
        indegree[to] += 1;
    }
    let mut ready: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = ready.pop() {
        seen += 1;
        for &(_, to) in edges.iter().filter(|e| e.0 == v) {
            indegree[to] -= 1;
            if indegree[to] == 0 {
                ready.push(to);
            }
        }
    }
    seen == n
}

/// Generates the processes round-robin: each round, every unfinished
/// process appends one segment.
///
/// A copy from process `j` into process `i` starts at a uniform point of
/// `j`'s aligned past, the first `len(i)` bytes of `j` as generated so far,
/// and lies entirely inside it. Outputs are clipped to `length` exactly and
/// labeled `p0`, `p1`, ...
pub fn gen_dag_processes(spec: &DagSpec) -> Result<StringSet> {
    spec.validate()?;
    let n = spec.processes;
    let mut rng = seeded_rng(spec.seed);
    let alphabet = spec.alphabet_size;
    let mut procs: Vec<Vec<u8>> = (0..n)
        .map(|_| {
            let mut p = Vec::with_capacity(spec.length + 64);
            p.extend((0..spec.burn_in).map(|_| rng.random_range(0..alphabet) as u8));
            p
        })
        .collect();

    while procs.iter().any(|p| p.len() < spec.length) {
        for i in 0..n {
            if procs[i].len() >= spec.length {
                continue;
            }
            let row = &spec.connectivity[i * (n + 1)..(i + 1) * (n + 1)];
            let j = pick(row, rng.random::<f64>());
            let scaled = libm::round(spec.copy_scale * row[j]) as usize;
            if j == n {
                let len = scaled.max(1);
                for _ in 0..len {
                    let b = rng.random_range(0..alphabet) as u8;
                    procs[i].push(b);
                }
            } else {
                let avail = procs[i].len().min(procs[j].len());
                let len = scaled.max(MIN_MATCH).min(avail);
                let start = rng.random_range(0..=avail - len);
                let segment = procs[j][start..start + len].to_vec();
                procs[i].extend_from_slice(&segment);
            }
        }
    }

    let items = procs
        .into_iter()
        .enumerate()
        .map(|(i, mut p)| {
            p.truncate(spec.length);
            (format!("p{i}"), p)
        })
        .collect();
    StringSet::new(items)
}
