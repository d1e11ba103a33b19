//! Tab-separated tables: matrices with a label header row and column,
//! factorization dumps and length profiles. Reals carry 9 significant
//! digits; lines end with LF.

use std::fmt::Write;

use salza_core::lz::{Offset, Region};
use salza_core::synth::LengthProfile;
use salza_core::{Factorization, Symbol};

use crate::error::{Error, Result};

/// Shortest rendering of `v` rounded to 9 significant digits, fixed or
/// exponent notation like C's `%.9g`.
pub fn fmt_real(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sci = format!("{v:.8e}");
    let (mantissa, exp) = sci.split_once('e').unwrap();
    let exp: i32 = exp.parse().unwrap();
    if (-4..9).contains(&exp) {
        trim_zeros(format!("{:.*}", (8 - exp) as usize, v))
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa.to_string()), exp.abs())
    }
}

fn trim_zeros(mut s: String) -> String {
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    s
}

/// Square matrix with an empty corner cell, labels across the first row
/// and down the first column.
pub fn write_matrix(labels: &[String], values: &[f64]) -> String {
    let n = labels.len();
    let mut out = String::new();
    for l in labels {
        out.push('\t');
        out.push_str(l);
    }
    out.push('\n');
    for (i, l) in labels.iter().enumerate() {
        out.push_str(l);
        for v in &values[i * n..(i + 1) * n] {
            out.push('\t');
            out.push_str(&fmt_real(*v));
        }
        out.push('\n');
    }
    out
}

/// Inverse of [`write_matrix`]. Row labels must repeat the header labels
/// in the same order. Positions in errors are 1-based.
pub fn parse_matrix(text: &str, source_name: &str) -> Result<(Vec<String>, Vec<f64>)> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let Some((_, header)) = lines.next() else {
        return Err(Error::parse(source_name, 1, 1, "empty matrix"));
    };
    let labels: Vec<String> = header.split('\t').skip(1).map(|s| s.trim().to_string()).collect();
    let n = labels.len();
    if n == 0 {
        return Err(Error::parse(source_name, 1, 2, "header has no labels"));
    }
    let mut values = Vec::with_capacity(n * n);
    let mut rows = 0;
    for (idx, line) in lines {
        let line_no = idx + 1;
        if rows == n {
            return Err(Error::parse(source_name, line_no, 1, format!("more than {n} rows")));
        }
        let cells: Vec<&str> = line.split('\t').collect();
        if cells[0].trim() != labels[rows] {
            return Err(Error::parse(
                source_name,
                line_no,
                1,
                format!("row label `{}` does not match column label `{}`", cells[0].trim(), labels[rows]),
            ));
        }
        if cells.len() != n + 1 {
            return Err(Error::parse(
                source_name,
                line_no,
                cells.len().min(n + 1) + 1,
                format!("expected {n} values, found {}", cells.len() - 1),
            ));
        }
        for (c, cell) in cells[1..].iter().enumerate() {
            let v: f64 = cell
                .trim()
                .parse()
                .map_err(|_| Error::parse(source_name, line_no, c + 2, format!("invalid number `{cell}`")))?;
            values.push(v);
        }
        rows += 1;
    }
    if rows < n {
        return Err(Error::parse(source_name, text.lines().count() + 1, 1, format!("expected {n} rows, found {rows}")));
    }
    Ok((labels, values))
}

/// One row per symbol: start position, length, `lit` or `ref`, the region
/// copied from (`self` or a source index) and the literal byte or the copy
/// start.
pub fn write_symbols(f: &Factorization) -> String {
    let mut out = String::from("pos\tlength\tkind\tsource\toffset\n");
    for (pos, s) in f.positions() {
        match *s {
            Symbol::Literal(b) => writeln!(out, "{pos}\t1\tlit\t-\t{b}"),
            Symbol::Reference { length, offset: Offset { region, position } } => {
                let src = match region {
                    Region::Own => "self".to_string(),
                    Region::Source(i) => i.to_string(),
                };
                writeln!(out, "{pos}\t{length}\tref\t{src}\t{position}")
            }
        }
        .unwrap();
    }
    out
}

pub fn write_profiles(profiles: &[LengthProfile]) -> String {
    let mut out = String::from("mu\tlength\tl0\tZ\tS_threshold\tSZ_threshold\tS_sigmoid\tSZ_sigmoid\n");
    for p in profiles {
        let reals = [p.mu, p.target_length as f64, p.l0, p.size, p.spread_threshold, p.value_threshold, p.spread_sigmoid, p.value_sigmoid];
        let cells: Vec<String> = reals.iter().map(|&v| fmt_real(v)).collect();
        out.push_str(&cells.join("\t"));
        out.push('\n');
    }
    out
}
