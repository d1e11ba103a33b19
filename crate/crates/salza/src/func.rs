//! Admissible function selection from command-line values.

use std::path::Path;

use salza_core::{AdmissibleFunction, CustomTable, Shape, Weighting};

use crate::corpus::read_nonempty;
use crate::error::{Error, Result};

/// `func` is `sigmoid`, `threshold` or `table:<path>`; `l0` is `auto`,
/// meaning the cutoff of whichever reference region is in use, or a fixed
/// real. Tables ignore `l0`.
pub fn parse_weighting(func: &str, l0: &str) -> Result<Weighting> {
    if let Some(path) = func.strip_prefix("table:") {
        if l0 != "auto" {
            log::warn!("--l0 has no effect on a table function");
        }
        let path = Path::new(path);
        let text = String::from_utf8(read_nonempty(path)?)
            .map_err(|_| Error::Usage(format!("{}: not UTF-8 text", path.display())))?;
        return Ok(Weighting::Fixed(AdmissibleFunction::Custom(parse_table(&text, &path.display().to_string())?)));
    }
    let shape = match func {
        "sigmoid" => Shape::Sigmoid,
        "threshold" => Shape::Threshold,
        other => return Err(Error::Usage(format!("unknown function `{other}`, expected sigmoid, threshold or table:<path>"))),
    };
    if l0 == "auto" {
        return Ok(Weighting::Adaptive(shape));
    }
    let cutoff: f64 = l0
        .parse()
        .ok()
        .filter(|c: &f64| c.is_finite() && *c >= 0.0)
        .ok_or_else(|| Error::Usage(format!("invalid --l0 `{l0}`, expected auto or a non-negative real")))?;
    Ok(Weighting::Fixed(match shape {
        Shape::Sigmoid => AdmissibleFunction::sigmoid(cutoff),
        Shape::Threshold => AdmissibleFunction::threshold(cutoff),
    }))
}

/// Lines of `length value`; `value` applies from `length` up to the next
/// listed length.
pub fn parse_table(text: &str, source_name: &str) -> Result<CustomTable> {
    let mut steps = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::parse(source_name, idx + 1, 1, "expected `length value`"));
        }
        let l = fields[0].parse().map_err(|_| Error::parse(source_name, idx + 1, 1, format!("invalid length `{}`", fields[0])))?;
        let v = fields[1].parse().map_err(|_| Error::parse(source_name, idx + 1, 2, format!("invalid value `{}`", fields[1])))?;
        steps.push((l, v));
    }
    Ok(CustomTable::new(steps)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_and_cutoffs() {
        assert_eq!(parse_weighting("sigmoid", "auto").unwrap(), Weighting::Adaptive(Shape::Sigmoid));
        assert_eq!(parse_weighting("threshold", "auto").unwrap(), Weighting::Adaptive(Shape::Threshold));
        assert_eq!(parse_weighting("threshold", "1.5").unwrap(), Weighting::Fixed(AdmissibleFunction::threshold(1.5)));
        assert!(parse_weighting("cosine", "auto").is_err());
        assert!(parse_weighting("sigmoid", "-1").is_err());
        assert!(parse_weighting("sigmoid", "x").is_err());
    }

    #[test]
    fn table_files() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("f.txt");
        std::fs::write(&path, "# step\n3 0.5\n6 1\n").unwrap();
        let w = parse_weighting(&format!("table:{}", path.display()), "auto").unwrap();
        let Weighting::Fixed(f) = w else { panic!() };
        assert_eq!([f.eval(2), f.eval(3), f.eval(5), f.eval(6), f.eval(60)], [0.0, 0.5, 0.5, 1.0, 1.0]);
        std::fs::write(&path, "3 0.5\n2\n").unwrap();
        let e = parse_weighting(&format!("table:{}", path.display()), "auto").unwrap_err().to_string();
        assert!(e.contains("line 2"), "{e}");
    }
}
