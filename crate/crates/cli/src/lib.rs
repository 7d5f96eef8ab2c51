//! Verification campaigns and report formatting behind the `geodex` binary.

pub mod campaign;
pub mod report;
