//! Graphviz output for causality graphs.

use std::fmt::Write;

use salza_core::CausalGraph;

use crate::tsv::fmt_real;

const MIN_PEN: f64 = 1.0;
const MAX_PEN: f64 = 8.0;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Every label becomes a node. Edge `penwidth` grows linearly with the
/// weight, reaching its maximum on the heaviest edge; the raw weight is
/// kept in the `info` attribute.
pub fn to_dot(g: &CausalGraph) -> String {
    let heaviest = g.edges.iter().map(|e| e.weight).fold(0.0f64, f64::max);
    let mut out = String::from("digraph causality {\n");
    for l in &g.labels {
        writeln!(out, "  {};", quote(l)).unwrap();
    }
    for e in &g.edges {
        let pen = if heaviest > 0.0 { MIN_PEN + (MAX_PEN - MIN_PEN) * e.weight.max(0.0) / heaviest } else { MIN_PEN };
        writeln!(
            out,
            "  {} -> {} [penwidth={}, info={}];",
            quote(&g.labels[e.from]),
            quote(&g.labels[e.to]),
            fmt_real(pen),
            fmt_real(e.weight)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
