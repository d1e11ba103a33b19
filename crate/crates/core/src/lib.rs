//! Lempel-Ziv based estimators of conditional, simple and joint algorithmic
//! complexity, a normalized semi-distance for clustering arbitrary byte
//! strings, and directed information estimators for causality graphs.
//!
//! The crate is `no_std` and only needs an allocator.
//!
//! ```
//! use salza_core::{nsd, Weighting};
//!
//! let w = Weighting::default();
//! let d = nsd(b"the cat sat on the mat", b"the cat sat on the hat", &w).unwrap();
//! assert!(d > 0.0 && d < 1.0);
//! assert_eq!(nsd(b"same bytes", b"same bytes", &w).unwrap(), 0.0);
//! ```
#![no_std]

extern crate alloc;

pub mod admissible;
pub mod alphabet;
pub mod cluster;
pub mod complexity;
pub mod directed;
pub mod error;
pub mod lz;
pub mod synth;

pub use admissible::{AdmissibleFunction, CustomTable, Shape, Weighting};
pub use alphabet::Alphabet;
pub use cluster::{neighbor_joining, to_newick, upgma, DistanceMatrix, Tree};
pub use complexity::{
    conditional_complexity, estimate_from_lengths, joint_complexity, meaningful_cutoff, nsd, simple_complexity,
    ConditionalEstimate,
};
pub use directed::{
    causal_directed_info, directed_info, directed_info_matrix, extract_dag, full_directed_info, CausalGraph,
    DirectedInfoMatrix, DirectedKind, StringSet,
};
pub use error::{Error, Result};
pub use lz::{decode, factorize, ConditioningMode, Context, Factorization, Symbol};
