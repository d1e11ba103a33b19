//! Input files and their labels.

use std::collections::HashSet;
use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};

/// Expands directories into their regular files, sorted by name.
pub fn expand(paths: &[PathBuf]) -> Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    for p in paths {
        if p.is_dir() {
            let mut files: Vec<PathBuf> = fs::read_dir(p)
                .map_err(|e| Error::io(p, e))?
                .map(|entry| entry.map(|e| e.path()).map_err(|e| Error::io(p, e)))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .filter(|f| f.is_file())
                .collect();
            files.sort();
            out.extend(files);
        } else {
            out.push(p.clone());
        }
    }
    Ok(out)
}

/// Basename labels; a repeated basename gets `-2`, `-3`, ... appended.
pub fn labels(paths: &[PathBuf]) -> Vec<String> {
    let mut seen = HashSet::new();
    paths
        .iter()
        .map(|p| {
            let base = p.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_else(|| p.display().to_string());
            let mut label = base.clone();
            let mut k = 2;
            while !seen.insert(label.clone()) {
                label = format!("{base}-{k}");
                k += 1;
            }
            if label != base {
                log::warn!("{} relabeled `{label}`: basename `{base}` already used", p.display());
            }
            label
        })
        .collect()
}

pub fn read_nonempty(path: &Path) -> Result<Vec<u8>> {
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    if bytes.is_empty() {
        return Err(Error::Usage(format!("{}: empty file", path.display())));
    }
    Ok(bytes)
}

/// Labeled contents of every input, directories expanded.
pub fn read_inputs(paths: &[PathBuf]) -> Result<Vec<(String, Vec<u8>)>> {
    let files = expand(paths)?;
    let labels = labels(&files);
    files.iter().zip(labels).map(|(f, l)| Ok((l, read_nonempty(f)?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collisions_get_numeric_suffixes() {
        let paths: Vec<PathBuf> = ["a/x.txt", "b/x.txt", "c/y", "d/x.txt"].iter().map(PathBuf::from).collect();
        assert_eq!(labels(&paths), ["x.txt", "x.txt-2", "y", "x.txt-3"]);
    }

    #[test]
    fn directories_expand_and_empty_files_fail() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("b"), b"bbb").unwrap();
        fs::write(dir.path().join("a"), b"aaa").unwrap();
        fs::create_dir(dir.path().join("sub")).unwrap();
        let items = read_inputs(&[dir.path().to_path_buf()]).unwrap();
        assert_eq!(items, vec![("a".to_string(), b"aaa".to_vec()), ("b".to_string(), b"bbb".to_vec())]);
        fs::write(dir.path().join("c"), b"").unwrap();
        let e = read_inputs(&[dir.path().to_path_buf()]).unwrap_err().to_string();
        assert!(e.ends_with("c: empty file"), "{e}");
        let missing = dir.path().join("nope");
        assert!(read_inputs(&[missing]).unwrap_err().to_string().contains("nope"));
    }
}
