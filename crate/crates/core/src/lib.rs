//! Compiler and cost model for trapped-ion QCCD devices laid out as a
//! 1D-linear array of traps.
//!
//! The crate is `no_std` (it needs `alloc`). It covers:
//!
//! - [`circuit`]: two-qubit gate IR, ASAP layering and movement statistics
//! - [`generators`]: worst-case random benchmarks and the structured
//!   algorithms (QFT, QAOA, Draper and Cuccaro adders)
//! - [`machine`]: trap topology and device parameters
//! - [`compiler`]: initial placement, ion relocation, two routers, and an
//!   independent schedule replay validator
//! - [`noise`]: fidelity and coherence of a compiled schedule
//!
//! File formats, sweeps and the command-line tool live in the `qccd-lab`
//! crate.

#![no_std]
// `!(x >= 0.0)` rejects NaN as well; that is the intent wherever it appears.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod circuit;
pub mod compiler;
pub mod error;
pub mod generators;
pub mod machine;
pub mod noise;

pub use circuit::{Circuit, CircuitStats, CircuitViolation, Gate, Layering, Qubit};
pub use compiler::{
    compile, greedy_minmove, naive_parallel, paired_placement, plan_move, sta_placement,
    validate_schedule, CompileOptions, EventCounts, EventKind, MachineState, MoveMode, Placement,
    PlacementKind, Primitive, Resource, RouterKind, Schedule, ScheduleEvent, ScheduleViolation,
    DEFAULT_LOOKAHEAD,
};
pub use error::{CompileError, GeneratorError, MachineError, NoiseError};
pub use generators::{Algorithm, BenchSpec, QaoaOrder};
pub use machine::{DeviceParams, Durations, Nanos, Topology};
pub use noise::{coherence, delta_f, schedule_fidelity, CoherenceMode, FidelityReport};
