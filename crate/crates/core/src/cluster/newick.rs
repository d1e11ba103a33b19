use alloc::string::String;
use core::fmt::Write;

use super::Tree;

/// Newick text with branch lengths, terminated by `;`.
///
/// Labels that would not survive unquoted (blanks, underscores, Newick
/// punctuation) are single-quoted with embedded quotes doubled. Lengths are
/// written with the shortest round-trip decimal form, sign included.
pub fn to_newick(tree: &Tree) -> String {
    let mut out = String::new();
    write_node(tree, tree.root, &mut out);
    out.push(';');
    out
}

fn write_node(tree: &Tree, id: usize, out: &mut String) {
    let node = &tree.nodes[id];
    if node.children.is_empty() {
        write_label(node.label.as_deref().unwrap_or(""), out);
        return;
    }
    out.push('(');
    for (k, &(child, len)) in node.children.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        write_node(tree, child, out);
        let _ = write!(out, ":{len}");
    }
    out.push(')');
}

fn needs_quotes(label: &str) -> bool {
    label.is_empty()
        || label
            .chars()
            .any(|c| c.is_whitespace() || "()[]':;,_".contains(c))
}

fn write_label(label: &str, out: &mut String) {
    if !needs_quotes(label) {
        out.push_str(label);
        return;
    }
    out.push('\'');
    for c in label.chars() {
        if c == '\'' {
            out.push('\'');
        }
        out.push(c);
    }
    out.push('\'');
}
