use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::circuit::Qubit;
use crate::compiler::placement::Placement;
use crate::machine::{Durations, Nanos, Topology};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EventKind {
    Gate,
    Swap,
    Split,
    Hop,
    Merge,
}

impl EventKind {
    pub fn label(self) -> &'static str {
        match self {
            Self::Gate => "gate",
            Self::Swap => "swap",
            Self::Split => "split",
            Self::Hop => "hop",
            Self::Merge => "merge",
        }
    }

    pub fn is_movement(self) -> bool {
        !matches!(self, Self::Gate)
    }
}

impl fmt::Display for EventKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Resource {
    Trap(usize),
    Segment(usize),
}

impl fmt::Display for Resource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Trap(t) => write!(f, "trap:{t}"),
            Self::Segment(s) => write!(f, "seg:{s}"),
        }
    }
}

/// An untimed event as produced by the planners.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Primitive {
    pub kind: EventKind,
    pub ion: Qubit,
    /// Second operand of gates and swaps.
    pub other: Option<Qubit>,
    pub resource: Resource,
}

impl Primitive {
    pub fn gate(a: Qubit, b: Qubit, trap: usize) -> Self {
        Self { kind: EventKind::Gate, ion: a, other: Some(b), resource: Resource::Trap(trap) }
    }

    pub fn swap(a: Qubit, b: Qubit, trap: usize) -> Self {
        Self { kind: EventKind::Swap, ion: a, other: Some(b), resource: Resource::Trap(trap) }
    }

    pub fn split(ion: Qubit, trap: usize) -> Self {
        Self { kind: EventKind::Split, ion, other: None, resource: Resource::Trap(trap) }
    }

    pub fn hop(ion: Qubit, segment: usize) -> Self {
        Self { kind: EventKind::Hop, ion, other: None, resource: Resource::Segment(segment) }
    }

    pub fn merge(ion: Qubit, trap: usize) -> Self {
        Self { kind: EventKind::Merge, ion, other: None, resource: Resource::Trap(trap) }
    }

    pub fn ions(&self) -> impl Iterator<Item = Qubit> {
        core::iter::once(self.ion).chain(self.other)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScheduleEvent {
    pub kind: EventKind,
    pub ion: Qubit,
    pub other: Option<Qubit>,
    pub resource: Resource,
    pub start: Nanos,
    pub duration: Nanos,
}

impl ScheduleEvent {
    pub fn end(&self) -> Nanos {
        self.start + self.duration
    }

    pub fn ions(&self) -> impl Iterator<Item = Qubit> {
        core::iter::once(self.ion).chain(self.other)
    }

    pub fn primitive(&self) -> Primitive {
        Primitive { kind: self.kind, ion: self.ion, other: self.other, resource: self.resource }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum RouterKind {
    /// Layer-by-layer, no lookahead, maximal parallelism.
    Naive,
    /// Movement-minimizing with a lookahead window, no layer barrier.
    Greedy,
}

impl RouterKind {
    pub fn label(self) -> &'static str {
        match self {
            Self::Naive => "naive",
            Self::Greedy => "greedy",
        }
    }
}

impl fmt::Display for RouterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct EventCounts {
    pub gates: usize,
    pub swaps: usize,
    pub splits: usize,
    pub hops: usize,
    pub merges: usize,
}

impl EventCounts {
    pub fn movement(&self) -> usize {
        self.swaps + self.splits + self.hops + self.merges
    }
}

/// A timed, compiled program.
#[derive(Debug, Clone, PartialEq)]
pub struct Schedule {
    pub events: Vec<ScheduleEvent>,
    pub initial: Placement,
    pub topology: Topology,
    pub router: RouterKind,
    pub makespan: Nanos,
}

impl Schedule {
    pub fn counts(&self) -> EventCounts {
        let mut c = EventCounts::default();
        for e in &self.events {
            match e.kind {
                EventKind::Gate => c.gates += 1,
                EventKind::Swap => c.swaps += 1,
                EventKind::Split => c.splits += 1,
                EventKind::Hop => c.hops += 1,
                EventKind::Merge => c.merges += 1,
            }
        }
        c
    }
}

/// Earliest-feasible start time assignment. Each trap, segment and ion is
/// an exclusive resource; events are appended in planning order, so per
/// resource the time order equals the planning order.
pub(crate) struct Timeline {
    durations: Durations,
    trap_free: Vec<Nanos>,
    segment_free: Vec<Nanos>,
    ion_free: Vec<Nanos>,
    /// Set when all movement must run one event at a time.
    movement_lane: Option<Nanos>,
    events: Vec<ScheduleEvent>,
}

impl Timeline {
    pub(crate) fn new(topology: &Topology, n_qubits: usize, durations: Durations, serialize_moves: bool) -> Self {
        Self {
            durations,
            trap_free: vec![0; topology.n_traps()],
            segment_free: vec![0; topology.n_segments()],
            ion_free: vec![0; n_qubits],
            movement_lane: serialize_moves.then_some(0),
            events: Vec::new(),
        }
    }

    fn duration(&self, kind: EventKind) -> Nanos {
        match kind {
            EventKind::Gate => self.durations.gate,
            EventKind::Swap => self.durations.swap,
            EventKind::Split => self.durations.split,
            EventKind::Hop => self.durations.hop,
            EventKind::Merge => self.durations.merge,
        }
    }

    /// Places one event no earlier than `not_before`; returns its end.
    pub(crate) fn push(&mut self, p: Primitive, not_before: Nanos) -> Nanos {
        let mut start = not_before;
        start = start.max(match p.resource {
            Resource::Trap(t) => self.trap_free[t],
            Resource::Segment(s) => self.segment_free[s],
        });
        for q in p.ions() {
            start = start.max(self.ion_free[q]);
        }
        let movement = p.kind.is_movement();
        if movement {
            if let Some(lane) = self.movement_lane {
                start = start.max(lane);
            }
        }
        let duration = self.duration(p.kind);
        let end = start + duration;
        match p.resource {
            Resource::Trap(t) => self.trap_free[t] = end,
            Resource::Segment(s) => self.segment_free[s] = end,
        }
        for q in p.ions() {
            self.ion_free[q] = end;
        }
        if movement {
            if let Some(lane) = self.movement_lane.as_mut() {
                *lane = end;
            }
        }
        self.events.push(ScheduleEvent {
            kind: p.kind,
            ion: p.ion,
            other: p.other,
            resource: p.resource,
            start,
            duration,
        });
        end
    }

    pub(crate) fn push_all(&mut self, prims: &[Primitive], not_before: Nanos) -> Nanos {
        prims.iter().fold(not_before, |end, p| end.max(self.push(*p, not_before)))
    }

    pub(crate) fn finish(self, initial: Placement, topology: Topology, router: RouterKind) -> Schedule {
        let makespan = self.events.iter().map(ScheduleEvent::end).max().unwrap_or(0);
        Schedule { events: self.events, initial, topology, router, makespan }
    }
}
