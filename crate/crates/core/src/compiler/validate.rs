use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::circuit::{Circuit, Qubit};
use crate::compiler::schedule::{EventKind, Resource, Schedule};
use crate::machine::Topology;

/// One replay failure. `event` fields index into `Schedule::events`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScheduleViolation {
    InvalidPlacement,
    ResourceOverlap { resource: Resource, first: usize, second: usize },
    IonOverlap { ion: Qubit, first: usize, second: usize },
    ZeroDuration { event: usize },
    BadOperands { event: usize },
    UnknownResource { event: usize },
    NotColocated { event: usize },
    IllegalSwap { event: usize },
    IllegalSplit { event: usize },
    IllegalHop { event: usize },
    IllegalMerge { event: usize },
    CapacityExceeded { event: usize, trap: usize },
    InTransitAtEnd { ion: Qubit },
    GateCoverage,
    DependencyOrder { ion: Qubit },
    MakespanMismatch { recorded: u64, actual: u64 },
}

impl fmt::Display for ScheduleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::InvalidPlacement => write!(f, "invalid initial placement"),
            Self::ResourceOverlap { resource, first, second } => {
                write!(f, "resource overlap on {resource}: events {first} and {second}")
            }
            Self::IonOverlap { ion, first, second } => {
                write!(f, "ion overlap on ion {ion}: events {first} and {second}")
            }
            Self::ZeroDuration { event } => write!(f, "zero duration: event {event}"),
            Self::BadOperands { event } => write!(f, "bad operands: event {event}"),
            Self::UnknownResource { event } => write!(f, "unknown resource: event {event}"),
            Self::NotColocated { event } => write!(f, "gate not co-located: event {event}"),
            Self::IllegalSwap { event } => write!(f, "illegal swap: event {event}"),
            Self::IllegalSplit { event } => write!(f, "illegal split: event {event}"),
            Self::IllegalHop { event } => write!(f, "illegal hop: event {event}"),
            Self::IllegalMerge { event } => write!(f, "illegal merge: event {event}"),
            Self::CapacityExceeded { event, trap } => {
                write!(f, "capacity exceeded in trap {trap}: event {event}")
            }
            Self::InTransitAtEnd { ion } => write!(f, "ion {ion} in transit at the end"),
            Self::GateCoverage => write!(f, "gate coverage differs from the circuit"),
            Self::DependencyOrder { ion } => write!(f, "dependency order broken on ion {ion}"),
            Self::MakespanMismatch { recorded, actual } => {
                write!(f, "makespan mismatch: recorded {recorded}, actual {actual}")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Edge {
    Left,
    Right,
    Either,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Ion {
    Resting(usize),
    /// Split from `trap` through `edge`, not yet hopped.
    Departing { trap: usize, edge: Edge },
    /// Hopped to the boundary of `trap`, entering from the left if `from_left`.
    Arriving { trap: usize, from_left: bool },
}

/// Replays `schedule` from its initial placement and reports every
/// violation found. An empty list means the schedule is valid.
///
/// This shares no state-tracking code with the planners.
pub fn validate_schedule(schedule: &Schedule, circuit: &Circuit, topology: &Topology) -> Vec<ScheduleViolation> {
    let mut out = Vec::new();
    let events = &schedule.events;
    let n = circuit.n_qubits();
    let cap = topology.capacity();
    let n_traps = topology.n_traps();

    // Initial state.
    let mut chains: Vec<Vec<Qubit>> = vec![Vec::new(); n_traps];
    let mut ions: Vec<Ion> = vec![Ion::Resting(usize::MAX); n];
    let placement_ok = schedule.initial.n_qubits() == n && {
        let mut slots: Vec<Vec<Option<Qubit>>> = vec![vec![None; cap]; n_traps];
        let mut ok = true;
        for q in 0..n {
            let (t, pos) = schedule.initial.location(q);
            match slots.get_mut(t).and_then(|row| row.get_mut(pos)) {
                Some(slot @ None) if pos + 1 < cap => *slot = Some(q),
                _ => ok = false,
            }
        }
        for (t, row) in slots.iter().enumerate() {
            let len = row.iter().take_while(|s| s.is_some()).count();
            ok &= row[len..].iter().all(Option::is_none);
            chains[t] = row[..len].iter().map(|s| s.unwrap()).collect();
            for &q in &chains[t] {
                ions[q] = Ion::Resting(t);
            }
        }
        ok
    };
    if !placement_ok {
        out.push(ScheduleViolation::InvalidPlacement);
        return out;
    }

    // Static checks and exclusivity.
    let mut by_resource: BTreeMap<Resource, Vec<usize>> = BTreeMap::new();
    let mut by_ion: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, e) in events.iter().enumerate() {
        if e.duration == 0 {
            out.push(ScheduleViolation::ZeroDuration { event: i });
        }
        let operands_ok = e.ion < n
            && match e.kind {
                EventKind::Gate | EventKind::Swap => matches!(e.other, Some(o) if o < n && o != e.ion),
                _ => e.other.is_none(),
            };
        if !operands_ok {
            out.push(ScheduleViolation::BadOperands { event: i });
        }
        let resource_ok = match (e.kind, e.resource) {
            (EventKind::Hop, Resource::Segment(s)) => s + 1 < n_traps,
            (EventKind::Hop, Resource::Trap(_)) => false,
            (_, Resource::Trap(t)) => t < n_traps,
            (_, Resource::Segment(_)) => false,
        };
        if !resource_ok {
            out.push(ScheduleViolation::UnknownResource { event: i });
        }
        if !operands_ok || !resource_ok {
            continue;
        }
        by_resource.entry(e.resource).or_default().push(i);
        by_ion[e.ion].push(i);
        if let Some(o) = e.other {
            by_ion[o].push(i);
        }
    }
    if !out.is_empty() {
        return out;
    }
    let overlaps = |list: &mut Vec<usize>| -> Option<(usize, usize)> {
        list.sort_by_key(|&i| (events[i].start, i));
        list.windows(2)
            .find(|w| events[w[1]].start < events[w[0]].start + events[w[0]].duration)
            .map(|w| (w[0], w[1]))
    };
    for (resource, list) in &mut by_resource {
        if let Some((first, second)) = overlaps(list) {
            out.push(ScheduleViolation::ResourceOverlap { resource: *resource, first, second });
        }
    }
    for (ion, list) in by_ion.iter_mut().enumerate() {
        if let Some((first, second)) = overlaps(list) {
            out.push(ScheduleViolation::IonOverlap { ion, first, second });
        }
    }

    // Replay in time order.
    let mut order: Vec<usize> = (0..events.len()).collect();
    order.sort_by_key(|&i| (events[i].start, i));
    let mut partners: Vec<Vec<Qubit>> = vec![Vec::new(); n];
    let mut executed: BTreeMap<(Qubit, Qubit), usize> = BTreeMap::new();
    for &i in &order {
        let e = &events[i];
        let q = e.ion;
        match (e.kind, e.resource) {
            (EventKind::Gate, Resource::Trap(t)) => {
                let o = e.other.unwrap();
                if ions[q] != Ion::Resting(t) || ions[o] != Ion::Resting(t) {
                    out.push(ScheduleViolation::NotColocated { event: i });
                }
                partners[q].push(o);
                partners[o].push(q);
                *executed.entry((q.min(o), q.max(o))).or_insert(0) += 1;
            }
            (EventKind::Swap, Resource::Trap(t)) => {
                let o = e.other.unwrap();
                let pq = chains[t].iter().position(|&x| x == q);
                let po = chains[t].iter().position(|&x| x == o);
                match (pq, po) {
                    (Some(a), Some(b)) if a.abs_diff(b) == 1 => chains[t].swap(a, b),
                    _ => out.push(ScheduleViolation::IllegalSwap { event: i }),
                }
            }
            (EventKind::Split, Resource::Trap(t)) => {
                let len = chains[t].len();
                match chains[t].iter().position(|&x| x == q) {
                    Some(pos) if pos == 0 || pos + 1 == len => {
                        let edge = if len == 1 {
                            Edge::Either
                        } else if pos == 0 {
                            Edge::Left
                        } else {
                            Edge::Right
                        };
                        chains[t].remove(pos);
                        ions[q] = Ion::Departing { trap: t, edge };
                    }
                    _ => out.push(ScheduleViolation::IllegalSplit { event: i }),
                }
            }
            (EventKind::Hop, Resource::Segment(s)) => match ions[q] {
                Ion::Departing { trap, edge } if trap == s && edge != Edge::Left => {
                    ions[q] = Ion::Arriving { trap: s + 1, from_left: true };
                }
                Ion::Departing { trap, edge } if trap == s + 1 && edge != Edge::Right => {
                    ions[q] = Ion::Arriving { trap: s, from_left: false };
                }
                _ => out.push(ScheduleViolation::IllegalHop { event: i }),
            },
            (EventKind::Merge, Resource::Trap(t)) => match ions[q] {
                Ion::Arriving { trap, from_left } if trap == t => {
                    if chains[t].len() >= cap {
                        out.push(ScheduleViolation::CapacityExceeded { event: i, trap: t });
                    }
                    if from_left {
                        chains[t].insert(0, q);
                    } else {
                        chains[t].push(q);
                    }
                    ions[q] = Ion::Resting(t);
                }
                _ => out.push(ScheduleViolation::IllegalMerge { event: i }),
            },
            _ => unreachable!("resource kinds checked above"),
        }
    }
    for (ion, state) in ions.iter().enumerate() {
        if !matches!(state, Ion::Resting(_)) {
            out.push(ScheduleViolation::InTransitAtEnd { ion });
        }
    }

    // Coverage and per-qubit order against the circuit.
    let mut expected: BTreeMap<(Qubit, Qubit), usize> = BTreeMap::new();
    let mut expected_partners: Vec<Vec<Qubit>> = vec![Vec::new(); n];
    for g in circuit.gates() {
        *expected.entry(g.sorted()).or_insert(0) += 1;
        expected_partners[g.qubit_a].push(g.qubit_b);
        expected_partners[g.qubit_b].push(g.qubit_a);
    }
    if expected != executed {
        out.push(ScheduleViolation::GateCoverage);
    } else {
        for ion in 0..n {
            if partners[ion] != expected_partners[ion] {
                out.push(ScheduleViolation::DependencyOrder { ion });
            }
        }
    }
    let actual = events.iter().map(|e| e.start + e.duration).max().unwrap_or(0);
    if actual != schedule.makespan {
        out.push(ScheduleViolation::MakespanMismatch { recorded: schedule.makespan, actual });
    }
    out
}
