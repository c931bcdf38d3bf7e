//! Library half of the `shiftrep` command-line tool: exit-code
//! plumbing, file I/O conventions, the JSON report format, and the
//! built-in verification suite. The binary in `main.rs` is a thin
//! argument-parsing layer over these modules.

#![forbid(unsafe_code)]

pub mod error;
pub mod experiments;
pub mod io;
pub mod report;
