use alloc::vec;
use alloc::vec::Vec;

use super::{leaves, DistanceMatrix, Node, Tree};

/// Average-linkage agglomeration. Each merge sits at half the merge
/// distance; ties go to the first pair in index order.
pub fn upgma(d: &DistanceMatrix) -> Tree {
    let n = d.len();
    let mut nodes = leaves(d);
    let size = 2 * n;
    let mut dist = vec![0.0; size * size];
    for i in 0..n {
        for j in 0..n {
            dist[i * size + j] = d.get(i, j);
        }
    }
    let mut weight = vec![1usize; size];
    let mut active: Vec<usize> = (0..n).collect();

    while active.len() > 1 {
        let mut best = (f64::INFINITY, 0, 1);
        for x in 0..active.len() {
            for y in x + 1..active.len() {
                let v = dist[active[x] * size + active[y]];
                if v < best.0 {
                    best = (v, x, y);
                }
            }
        }
        let (dab, x, y) = best;
        let (a, b) = (active[x], active[y]);
        let height = dab / 2.0;
        let ha = nodes[a].height.unwrap_or(0.0);
        let hb = nodes[b].height.unwrap_or(0.0);
        let u = nodes.len();
        nodes.push(Node {
            label: None,
            children: vec![(a, height - ha), (b, height - hb)],
            height: Some(height),
        });
        weight[u] = weight[a] + weight[b];
        let (wa, wb) = (weight[a] as f64, weight[b] as f64);
        for &k in &active {
            if k != a && k != b {
                let v = (wa * dist[a * size + k] + wb * dist[b * size + k]) / (wa + wb);
                dist[u * size + k] = v;
                dist[k * size + u] = v;
            }
        }
        // The merged node takes the place of its first member.
        active[x] = u;
        active.remove(y);
    }

    let root = active[0];
    Tree { nodes, root, rooted: true }
}
