//! Experiment runner for `trotterchem-core`: model files, circuit export,
//! parameter sweeps and the `trotterchem` command line.
//!
//! Every subcommand writes CSV tables (header row, floats with 17
//! significant digits) plus a `summary.json`. Sweep points run on a worker
//! pool sized by `TROTTERCHEM_THREADS`; rows are gathered in grid order, so
//! output is byte-identical across runs and thread counts.
//!
//! Exit codes: 0 success, 2 input error, 3 configuration error,
//! 4 self-check failure, 5 resource limit.

pub mod circuit_text;
pub mod cli;
pub mod commands;
pub mod error;
pub mod model_file;
pub mod sweep;
pub mod table;
pub mod verify;

pub use error::RunError;
