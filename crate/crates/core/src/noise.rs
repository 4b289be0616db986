//! Fidelity of a compiled schedule.
//!
//! Every event contributes an independent success factor; the product is
//! then multiplied by the coherence factor `exp(-t / T2)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::circuit::Circuit;
use crate::compiler::{validate_schedule, EventKind, Resource, RouterKind, Schedule};
use crate::error::NoiseError;
use crate::machine::{DeviceParams, Nanos};

/// `exp(-t / t2)`; `t` and `t2` in the same unit.
pub fn coherence(t: f64, t2: f64) -> Result<f64, NoiseError> {
    if !(t2 > 0.0) {
        return Err(NoiseError::NonPositiveT2(t2));
    }
    if !(t >= 0.0) {
        return Err(NoiseError::NegativeTime(t));
    }
    Ok(libm::exp(-t / t2))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum CoherenceMode {
    /// One factor for the whole makespan.
    #[default]
    Global,
    /// Product over qubits of `exp(-idle / T2)`, where idle is the part of
    /// the makespan the qubit spends in no event.
    PerQubitIdle,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FidelityReport {
    pub fidelity: f64,
    pub coherence: f64,
    pub raw_fidelity: f64,
    /// Makespan in microseconds.
    pub exec_time_us: f64,
    pub gates: usize,
    pub swaps: usize,
    pub splits: usize,
    pub hops: usize,
    pub merges: usize,
    pub n_traps: usize,
    pub capacity: usize,
    pub router: RouterKind,
}

impl FidelityReport {
    pub fn movement_events(&self) -> usize {
        self.swaps + self.splits + self.hops + self.merges
    }
}

/// Success factor of one event in a trap holding `occupancy` ions.
pub fn event_factor(kind: EventKind, occupancy: usize, params: &DeviceParams) -> f64 {
    match kind {
        EventKind::Gate => 1.0 - params.gate_error(occupancy),
        EventKind::Swap => 1.0 - params.swap_error(occupancy),
        EventKind::Split => params.f_split,
        EventKind::Hop => params.f_hop,
        EventKind::Merge => params.f_merge,
    }
}

/// Validates `schedule` against `circuit`, then evaluates its fidelity.
pub fn schedule_fidelity(
    schedule: &Schedule,
    circuit: &Circuit,
    params: &DeviceParams,
    mode: CoherenceMode,
) -> Result<FidelityReport, NoiseError> {
    let violations = validate_schedule(schedule, circuit, &schedule.topology);
    if !violations.is_empty() {
        return Err(NoiseError::InvalidSchedule(violations));
    }
    if !(params.t2_ms > 0.0) {
        return Err(NoiseError::NonPositiveT2(params.t2_ms));
    }
    let n_traps = schedule.topology.n_traps();
    let mut occupancy = schedule.initial.occupancy(n_traps);
    let mut order: Vec<usize> = (0..schedule.events.len()).collect();
    order.sort_by_key(|&i| (schedule.events[i].start, i));
    let mut raw = 1.0;
    for &i in &order {
        let e = &schedule.events[i];
        let load = match e.resource {
            Resource::Trap(t) => occupancy[t],
            Resource::Segment(_) => 0,
        };
        raw *= event_factor(e.kind, load, params);
        match (e.kind, e.resource) {
            (EventKind::Split, Resource::Trap(t)) => occupancy[t] -= 1,
            (EventKind::Merge, Resource::Trap(t)) => occupancy[t] += 1,
            _ => {}
        }
    }
    let t2_ns = params.t2_ms * 1e6;
    let coherence = match mode {
        CoherenceMode::Global => coherence(schedule.makespan as f64, t2_ns)?,
        CoherenceMode::PerQubitIdle => {
            let mut busy: Vec<Nanos> = vec![0; circuit.n_qubits()];
            for e in &schedule.events {
                for q in e.ions() {
                    busy[q] += e.duration;
                }
            }
            busy.iter().try_fold(1.0, |acc, &b| {
                Ok::<_, NoiseError>(acc * coherence((schedule.makespan - b) as f64, t2_ns)?)
            })?
        }
    };
    let counts = schedule.counts();
    Ok(FidelityReport {
        fidelity: raw * coherence,
        coherence,
        raw_fidelity: raw,
        exec_time_us: schedule.makespan as f64 / 1000.0,
        gates: counts.gates,
        swaps: counts.swaps,
        splits: counts.splits,
        hops: counts.hops,
        merges: counts.merges,
        n_traps,
        capacity: schedule.topology.capacity(),
        router: schedule.router,
    })
}

/// Relative fidelity gain of `parallel` over `sequential`, in percent.
pub fn delta_f(parallel: f64, sequential: f64) -> Result<f64, NoiseError> {
    if sequential == 0.0 {
        return Err(NoiseError::ZeroBaseline);
    }
    Ok(100.0 * (parallel - sequential) / sequential)
}
