//! Placement, relocation, routing and replay validation.

mod placement;
mod routers;
mod schedule;
mod state;
mod validate;

use core::fmt;

pub use placement::{paired_placement, sta_placement, Placement};
pub use routers::{greedy_minmove, naive_parallel};
pub use schedule::{EventCounts, EventKind, Primitive, Resource, RouterKind, Schedule, ScheduleEvent};
pub use state::{plan_move, MachineState};
pub use validate::{validate_schedule, ScheduleViolation};

use crate::circuit::Circuit;
use crate::error::CompileError;
use crate::machine::{DeviceParams, Topology};

/// Default lookahead window of the greedy router, in gates.
pub const DEFAULT_LOOKAHEAD: usize = 20;

/// How movement events share time.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum MoveMode {
    /// Moves run concurrently whenever traps, segments and ions allow.
    #[default]
    Overlap,
    /// At most one movement event runs at any time.
    Serialize,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum PlacementKind {
    #[default]
    Sta,
    Paired,
}

impl PlacementKind {
    pub fn label(self) -> &'static str {
        match self {
            Self::Sta => "sta",
            Self::Paired => "paired",
        }
    }

    pub fn place(self, circuit: &Circuit, topology: &Topology) -> Result<Placement, CompileError> {
        match self {
            Self::Sta => sta_placement(circuit, topology),
            Self::Paired => paired_placement(circuit, topology),
        }
    }
}

impl fmt::Display for PlacementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CompileOptions {
    pub router: RouterKind,
    pub placement: PlacementKind,
    pub lookahead: usize,
    pub move_mode: MoveMode,
}

impl Default for CompileOptions {
    fn default() -> Self {
        Self {
            router: RouterKind::Greedy,
            placement: PlacementKind::Sta,
            lookahead: DEFAULT_LOOKAHEAD,
            move_mode: MoveMode::Overlap,
        }
    }
}

/// Places and routes `circuit`. The result is not validated.
pub fn compile(
    circuit: &Circuit,
    topology: &Topology,
    params: &DeviceParams,
    options: &CompileOptions,
) -> Result<Schedule, CompileError> {
    let placement = options.placement.place(circuit, topology)?;
    match options.router {
        RouterKind::Naive => naive_parallel(circuit, &placement, topology, params, options.move_mode),
        RouterKind::Greedy => {
            greedy_minmove(circuit, &placement, topology, params, options.lookahead, options.move_mode)
        }
    }
}
