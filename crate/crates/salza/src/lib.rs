//! File formats, corpus handling and parallel matrix construction for the
//! `salza` command-line tool.

pub mod corpus;
pub mod dot;
pub mod error;
pub mod func;
pub mod matrix;
pub mod newick;
pub mod spec;
pub mod tsv;

pub use error::{Error, Result};
