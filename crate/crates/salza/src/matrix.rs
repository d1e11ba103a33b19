//! Pairwise matrices computed cell by cell on the current rayon pool.
//! Cells are gathered in index order, so results do not depend on the
//! thread count.

use rayon::prelude::*;
use salza_core::directed::{conditioned_estimate, DEFAULT_THRESHOLD};
use salza_core::{nsd, DirectedInfoMatrix, DirectedKind, DistanceMatrix, StringSet, Weighting};

use crate::error::Result;

pub fn nsd_matrix(items: &[(String, Vec<u8>)], weighting: &Weighting) -> Result<DistanceMatrix> {
    let n = items.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let cells = pairs
        .par_iter()
        .map(|&(i, j)| nsd(&items[i].1, &items[j].1, weighting))
        .collect::<salza_core::Result<Vec<f64>>>()?;
    let mut values = vec![0.0; n * n];
    for (&(i, j), v) in pairs.iter().zip(cells) {
        values[i * n + j] = v;
        values[j * n + i] = v;
    }
    Ok(DistanceMatrix::new(items.iter().map(|(l, _)| l.clone()).collect(), values)?)
}

pub fn directed_matrix(set: &StringSet, kind: DirectedKind, weighting: &Weighting) -> Result<DirectedInfoMatrix> {
    let n = set.len();
    if n < 2 {
        return Err(salza_core::Error::TooFewStrings { needed: 2, got: n }.into());
    }
    let baselines = (0..n)
        .into_par_iter()
        .map(|j| conditioned_estimate(set, j, None, kind, weighting))
        .collect::<salza_core::Result<Vec<f64>>>()?;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let cells = pairs
        .par_iter()
        .map(|&(from, to)| conditioned_estimate(set, to, Some(from), kind, weighting))
        .collect::<salza_core::Result<Vec<f64>>>()?;
    let mut without = vec![0.0; n * n];
    for (&(i, j), v) in pairs.iter().zip(cells) {
        without[i * n + j] = v;
    }
    Ok(DirectedInfoMatrix::from_parts(set.labels().to_vec(), kind, DEFAULT_THRESHOLD, &baselines, |i, j| without[i * n + j]))
}
