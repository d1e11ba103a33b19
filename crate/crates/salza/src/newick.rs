//! Newick reading, used to check written trees, and a console rendering.

use salza_core::Tree;

use crate::error::{Error, Result};
use crate::tsv::fmt_real;

#[derive(Debug, Clone, PartialEq)]
pub struct NewickNode {
    pub label: Option<String>,
    pub length: Option<f64>,
    pub children: Vec<NewickNode>,
}

impl NewickNode {
    pub fn leaf_labels(&self) -> Vec<&str> {
        if self.children.is_empty() {
            return self.label.as_deref().into_iter().collect();
        }
        self.children.iter().flat_map(NewickNode::leaf_labels).collect()
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    name: &'a str,
}

impl Parser<'_> {
    fn err(&self, message: impl Into<String>) -> Error {
        let before = &self.chars[..self.pos.min(self.chars.len())];
        let line = 1 + before.iter().filter(|&&c| c == '\n').count();
        let column = 1 + before.iter().rev().take_while(|&&c| c != '\n').count();
        Error::parse(self.name, line, column, message)
    }

    fn skip(&mut self) {
        loop {
            match self.peek() {
                Some(c) if c.is_whitespace() => self.pos += 1,
                Some('[') => {
                    while self.peek().is_some_and(|c| c != ']') {
                        self.pos += 1;
                    }
                    self.pos += 1;
                }
                _ => return,
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn label(&mut self) -> Result<Option<String>> {
        self.skip();
        if self.peek() == Some('\'') {
            self.pos += 1;
            let mut s = String::new();
            loop {
                match self.peek() {
                    None => return Err(self.err("unterminated quoted label")),
                    Some('\'') if self.chars.get(self.pos + 1) == Some(&'\'') => {
                        s.push('\'');
                        self.pos += 2;
                    }
                    Some('\'') => {
                        self.pos += 1;
                        return Ok(Some(s));
                    }
                    Some(c) => {
                        s.push(c);
                        self.pos += 1;
                    }
                }
            }
        }
        let start = self.pos;
        while self.peek().is_some_and(|c| !c.is_whitespace() && !"()[]':;,".contains(c)) {
            self.pos += 1;
        }
        if self.pos == start {
            return Ok(None);
        }
        Ok(Some(self.chars[start..self.pos].iter().collect::<String>().replace('_', " ")))
    }

    fn length(&mut self) -> Result<Option<f64>> {
        if !self.eat(':') {
            return Ok(None);
        }
        self.skip();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit() || "+-.eE".contains(c)) {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse().map(Some).map_err(|_| self.err(format!("invalid branch length `{text}`")))
    }

    fn node(&mut self) -> Result<NewickNode> {
        let mut children = Vec::new();
        if self.eat('(') {
            loop {
                children.push(self.node()?);
                if self.eat(',') {
                    continue;
                }
                if self.eat(')') {
                    break;
                }
                return Err(self.err("expected `,` or `)`"));
            }
        }
        let label = self.label()?;
        if children.is_empty() && label.is_none() {
            return Err(self.err("expected a label or `(`"));
        }
        let length = self.length()?;
        Ok(NewickNode { label, length, children })
    }
}

/// Parses one tree terminated by `;`. Unquoted underscores read as spaces.
pub fn parse_newick(text: &str, source_name: &str) -> Result<NewickNode> {
    let mut p = Parser { chars: text.chars().collect(), pos: 0, name: source_name };
    let root = p.node()?;
    if !p.eat(';') {
        return Err(p.err("expected `;`"));
    }
    p.skip();
    if p.peek().is_some() {
        return Err(p.err("trailing text after `;`"));
    }
    Ok(root)
}

/// Indented drawing with branch lengths, one node per line.
pub fn render_ascii(tree: &Tree) -> String {
    fn walk(tree: &Tree, v: usize, length: Option<f64>, prefix: &str, last: bool, top: bool, out: &mut String) {
        let node = &tree.nodes[v];
        let name = node.label.as_deref().unwrap_or("*");
        let len = length.map(|l| format!(" {}", fmt_real(l))).unwrap_or_default();
        if top {
            out.push_str(&format!("{name}\n"));
        } else {
            out.push_str(&format!("{prefix}{}{name}{len}\n", if last { "`-- " } else { "+-- " }));
        }
        let inner = if top { String::new() } else { format!("{prefix}{}", if last { "    " } else { "|   " }) };
        for (k, &(c, l)) in node.children.iter().enumerate() {
            walk(tree, c, Some(l), &inner, k + 1 == node.children.len(), false, out);
        }
    }
    let mut out = String::new();
    walk(tree, tree.root, None, "", true, true, &mut out);
    out
}
