//! Command-line front end for multiplicative Lie algebra computations.

pub mod commands;
pub mod document;
pub mod fixtures;
