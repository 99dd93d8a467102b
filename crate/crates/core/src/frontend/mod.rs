//! Command-line front end: input parsing, the MCS relaxation and output.

pub mod cli;
pub mod dimacs;
pub mod mcs;

pub use cli::{run, Args};
pub use dimacs::{parse, parse_str, render, Mode, ParseError, ParseErrorKind, ProblemFile};
pub use mcs::{mcs_transform, McsMap};
