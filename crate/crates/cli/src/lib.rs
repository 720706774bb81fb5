//! Library surface of the `taukit` command line tool: ring description
//! parsing, canonical result documents, and the verification suite runner.
//! The binary in `main.rs` is a thin argument layer over these modules.

pub mod report;
pub mod runner;
pub mod spec;
