//! Experiment harness around `qccd-core`: circuit and schedule text
//! formats, TOML device configs, single runs, parameter sweeps and the
//! benchmark statistics table.

// `!(x > 0.0)` rejects NaN as well.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod circuit_text;
pub mod config;
pub mod dump;
pub mod error;
pub mod experiment;
pub mod output;
pub mod sweep;
pub mod table;

pub use error::LabError;
