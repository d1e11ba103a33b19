//! Generator spec files.
//!
//! A file holds one or more specs. `[name]` opens a named spec; lines
//! before the first header form an unnamed one. Inside a spec, `key =
//! value` lines set scalars and a `transition:` or `connectivity:` line
//! opens a matrix given as tab- or space-separated rows on the following
//! lines. `#` starts a comment.
//!
//! ```text
//! [chain]
//! length = 15000
//! seed = 3
//! realizations = 4
//! transition:
//! 0.9 0.1
//! 0.2 0.8
//! ```

use std::collections::BTreeMap;

use salza_core::synth::{random_transition, seeded_rng, DagSpec, MarkovSpec};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Section {
    pub name: Option<String>,
    pub line: usize,
    values: BTreeMap<String, (String, usize)>,
    matrix: Option<(String, Vec<Vec<f64>>, usize)>,
}

pub fn parse_sections(text: &str, source_name: &str) -> Result<Vec<Section>> {
    let mut sections = vec![Section { line: 1, ..Section::default() }];
    let mut in_matrix = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            in_matrix = false;
            continue;
        }
        let current = sections.last_mut().unwrap();
        if let Some(name) = line.strip_prefix('[') {
            let name = name
                .strip_suffix(']')
                .ok_or_else(|| Error::parse(source_name, line_no, line.len(), "expected `]`"))?
                .trim();
            sections.push(Section { name: Some(name.to_string()), line: line_no, ..Section::default() });
            in_matrix = false;
        } else if let Some((key, value)) = line.split_once('=') {
            in_matrix = false;
            let key = key.trim().to_string();
            if current.values.insert(key.clone(), (value.trim().to_string(), line_no)).is_some() {
                return Err(Error::parse(source_name, line_no, 1, format!("duplicate key `{key}`")));
            }
        } else if let Some(kind) = line.strip_suffix(':') {
            if current.matrix.is_some() {
                return Err(Error::parse(source_name, line_no, 1, "second matrix in one spec"));
            }
            current.matrix = Some((kind.trim().to_string(), Vec::new(), line_no));
            in_matrix = true;
        } else if in_matrix {
            let mut row = Vec::new();
            let mut offset = 0;
            for cell in raw.split(['\t', ' ']) {
                let column = offset + 1;
                offset += cell.len() + 1;
                if cell.is_empty() {
                    continue;
                }
                if cell.starts_with('#') {
                    break;
                }
                let v = cell
                    .parse()
                    .map_err(|_| Error::parse(source_name, line_no, column, format!("invalid number `{cell}`")))?;
                row.push(v);
            }
            current.matrix.as_mut().unwrap().1.push(row);
        } else {
            return Err(Error::parse(source_name, line_no, 1, format!("unexpected line `{line}`")));
        }
    }
    if sections[0].values.is_empty() && sections[0].matrix.is_none() && sections.len() > 1 {
        sections.remove(0);
    }
    Ok(sections)
}

impl Section {
    fn describe(&self) -> String {
        match &self.name {
            Some(n) => format!("spec `{n}`"),
            None => "spec".into(),
        }
    }

    fn get<T: std::str::FromStr>(&self, key: &str, source_name: &str) -> Result<Option<T>> {
        match self.values.get(key) {
            None => Ok(None),
            Some((v, line)) => v.parse().map(Some).map_err(|_| {
                Error::parse(source_name, *line, 1, format!("invalid value `{v}` for `{key}`"))
            }),
        }
    }

    fn require<T: std::str::FromStr>(&self, key: &str, source_name: &str) -> Result<T> {
        self.get(key, source_name)?
            .ok_or_else(|| Error::parse(source_name, self.line, 1, format!("{} is missing `{key}`", self.describe())))
    }

    fn check_keys(&self, allowed: &[&str], source_name: &str) -> Result<()> {
        for (k, (_, line)) in &self.values {
            if !allowed.contains(&k.as_str()) {
                return Err(Error::parse(source_name, *line, 1, format!("unknown key `{k}`")));
            }
        }
        Ok(())
    }

    fn matrix(&self, kind: &str, source_name: &str) -> Result<Option<&Vec<Vec<f64>>>> {
        match &self.matrix {
            None => Ok(None),
            Some((k, rows, _)) if k == kind => Ok(Some(rows)),
            Some((k, _, line)) => Err(Error::parse(source_name, *line, 1, format!("expected `{kind}:`, found `{k}:`"))),
        }
    }
}

/// Markov realizations to generate, with the label of each.
///
/// Keys: `length`, `seed`, `realizations` (default 1), `alphabet` and,
/// instead of a `transition:` matrix, `support` for a random matrix whose
/// rows each reach `support` successors. Realization `r` uses seed
/// `seed + r`; a random matrix is drawn from `seed` itself.
pub fn markov_specs(text: &str, source_name: &str, seed_override: Option<u64>) -> Result<Vec<(String, MarkovSpec)>> {
    let mut out = Vec::new();
    for s in parse_sections(text, source_name)? {
        s.check_keys(&["length", "seed", "realizations", "alphabet", "support"], source_name)?;
        let length: usize = s.require("length", source_name)?;
        let seed = match seed_override {
            Some(v) => v,
            None => s.get("seed", source_name)?.unwrap_or(0),
        };
        let realizations: usize = s.get("realizations", source_name)?.unwrap_or(1);
        let (alphabet, transition) = match (s.matrix("transition", source_name)?, s.get::<usize>("support", source_name)?) {
            (Some(rows), None) => {
                let a = rows.len();
                if let Some(declared) = s.get::<usize>("alphabet", source_name)? {
                    if declared != a {
                        return Err(Error::parse(source_name, s.line, 1, format!("alphabet {declared} but {a} transition rows")));
                    }
                }
                if let Some(r) = rows.iter().position(|r| r.len() != a) {
                    return Err(Error::parse(source_name, s.line, 1, format!("transition row {} has {} entries, expected {a}", r + 1, rows[r].len())));
                }
                (a, rows.concat())
            }
            (None, Some(support)) => {
                let a: usize = s.require("alphabet", source_name)?;
                (a, random_transition(a, support, &mut seeded_rng(seed)))
            }
            _ => {
                return Err(Error::parse(source_name, s.line, 1, format!("{} needs exactly one of `transition:` or `support`", s.describe())))
            }
        };
        let base = s.name.clone().unwrap_or_else(|| "markov".into());
        for r in 0..realizations {
            let label = if realizations == 1 { base.clone() } else { format!("{base}-{r}") };
            let spec = MarkovSpec { alphabet_size: alphabet, transition: transition.clone(), length, seed: seed.wrapping_add(r as u64) };
            spec.validate()?;
            out.push((label, spec));
        }
    }
    Ok(out)
}

/// DAG specs keyed by section name. Keys: `length`, `seed`, `burn_in`,
/// `copy_scale`, `alphabet`; the `connectivity:` matrix has one row per
/// process and a final innovation column.
pub fn dag_specs(text: &str, source_name: &str, seed_override: Option<u64>) -> Result<Vec<(Option<String>, DagSpec)>> {
    let mut out = Vec::new();
    for s in parse_sections(text, source_name)? {
        s.check_keys(&["length", "seed", "burn_in", "copy_scale", "alphabet"], source_name)?;
        let rows = s
            .matrix("connectivity", source_name)?
            .ok_or_else(|| Error::parse(source_name, s.line, 1, format!("{} is missing `connectivity:`", s.describe())))?;
        let n = rows.len();
        if let Some(r) = rows.iter().position(|r| r.len() != n + 1) {
            return Err(Error::parse(source_name, s.line, 1, format!("connectivity row {} has {} entries, expected {}", r + 1, rows[r].len(), n + 1)));
        }
        let seed = match seed_override {
            Some(v) => v,
            None => s.get("seed", source_name)?.unwrap_or(0),
        };
        let mut spec = DagSpec::new(rows.clone(), s.require("length", source_name)?, seed);
        if let Some(b) = s.get("burn_in", source_name)? {
            spec.burn_in = b;
        }
        if let Some(k) = s.get("copy_scale", source_name)? {
            spec.copy_scale = k;
        }
        if let Some(a) = s.get("alphabet", source_name)? {
            spec.alphabet_size = a;
        }
        spec.validate()?;
        out.push((s.name.clone(), spec));
    }
    Ok(out)
}
