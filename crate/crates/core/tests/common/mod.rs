//! Reference implementations shared by the integration and acceptance suites.
#![allow(dead_code)]

pub mod oracle;
pub mod trees;
