use alloc::vec;
use alloc::vec::Vec;

use super::{leaves, DistanceMatrix, Node, Tree};

/// Saitou-Nei neighbor joining.
///
/// At each step the active pair minimizing
/// `Q(a, b) = (r − 2)·d(a, b) − R(a) − R(b)` is joined, ties going to the
/// first pair in index order. The last three nodes hang from a central
/// node. Branch lengths may come out negative and are kept as is.
pub fn neighbor_joining(d: &DistanceMatrix) -> Tree {
    let n = d.len();
    let mut nodes = leaves(d);
    if n == 2 {
        let half = d.get(0, 1) / 2.0;
        nodes.push(Node { label: None, children: vec![(0, half), (1, half)], height: None });
        return Tree { nodes, root: 2, rooted: false };
    }

    // Distances between node ids; joined nodes get fresh ids.
    let size = 2 * n;
    let mut dist = vec![0.0; size * size];
    for i in 0..n {
        for j in 0..n {
            dist[i * size + j] = d.get(i, j);
        }
    }
    let at = |dist: &[f64], a: usize, b: usize| dist[a * size + b];
    let mut active: Vec<usize> = (0..n).collect();

    while active.len() > 3 {
        let r = active.len();
        let sums: Vec<f64> = active
            .iter()
            .map(|&a| active.iter().map(|&b| at(&dist, a, b)).sum())
            .collect();
        let mut best = (f64::INFINITY, 0, 1);
        for x in 0..r {
            for y in x + 1..r {
                let q = (r as f64 - 2.0) * at(&dist, active[x], active[y]) - sums[x] - sums[y];
                if q < best.0 {
                    best = (q, x, y);
                }
            }
        }
        let (_, x, y) = best;
        let (a, b) = (active[x], active[y]);
        let dab = at(&dist, a, b);
        let la = dab / 2.0 + (sums[x] - sums[y]) / (2.0 * (r as f64 - 2.0));
        let lb = dab - la;

        let u = nodes.len();
        nodes.push(Node { label: None, children: vec![(a, la), (b, lb)], height: None });
        for &k in &active {
            if k != a && k != b {
                let v = (at(&dist, a, k) + at(&dist, b, k) - dab) / 2.0;
                dist[u * size + k] = v;
                dist[k * size + u] = v;
            }
        }
        // The merged node takes the place of its first member.
        active[x] = u;
        active.remove(y);
    }

    let (a, b, c) = (active[0], active[1], active[2]);
    let (dab, dac, dbc) = (at(&dist, a, b), at(&dist, a, c), at(&dist, b, c));
    let root = nodes.len();
    nodes.push(Node {
        label: None,
        children: vec![
            (a, (dab + dac - dbc) / 2.0),
            (b, (dab + dbc - dac) / 2.0),
            (c, (dac + dbc - dab) / 2.0),
        ],
        height: None,
    });
    Tree { nodes, root, rooted: false }
}
