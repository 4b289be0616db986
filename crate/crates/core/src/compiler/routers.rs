use alloc::vec;
use alloc::vec::Vec;

use crate::circuit::{Circuit, Gate, Qubit};
use crate::compiler::placement::Placement;
use crate::compiler::schedule::{Primitive, RouterKind, Schedule, Timeline};
use crate::compiler::state::{plan_move, MachineState};
use crate::compiler::MoveMode;
use crate::error::CompileError;
use crate::machine::{DeviceParams, Nanos, Topology};

fn prepare(
    circuit: &Circuit,
    placement: &Placement,
    topology: &Topology,
    params: &DeviceParams,
) -> Result<(), CompileError> {
    if !circuit.is_valid() {
        return Err(CompileError::InvalidCircuit);
    }
    if placement.n_qubits() != circuit.n_qubits() {
        return Err(CompileError::InvalidPlacement("qubit count differs from the circuit"));
    }
    placement.check(topology)?;
    params.check()?;
    Ok(())
}

/// Layer-by-layer router without lookahead.
///
/// For every ASAP layer the gates are co-located in ascending gate order:
/// a gate runs in its lower qubit's trap if that trap has a free slot,
/// else in the partner's trap, else in the nearest trap with two free
/// slots (ties: lower index). All moves of a layer finish before any of
/// its gates start, and the next layer's moves wait for those gates.
pub fn naive_parallel(
    circuit: &Circuit,
    placement: &Placement,
    topology: &Topology,
    params: &DeviceParams,
    mode: MoveMode,
) -> Result<Schedule, CompileError> {
    prepare(circuit, placement, topology, params)?;
    let mut state = MachineState::new(placement, topology);
    let mut timeline =
        Timeline::new(topology, circuit.n_qubits(), params.durations(), mode == MoveMode::Serialize);
    let gates = circuit.gates();
    let mut barrier: Nanos = 0;
    for (li, layer) in circuit.layering().layers.iter().enumerate() {
        let mut moves = Vec::new();
        // A later move can displace an ion of an already co-located gate,
        // so repeat until the whole layer is co-located.
        let mut settled = false;
        for _ in 0..=layer.len() + 1 {
            for &gi in layer {
                colocate_naive(&mut state, gates, layer, &gates[gi], &mut moves)?;
            }
            if layer.iter().all(|&gi| state.colocated(gates[gi].qubit_a, gates[gi].qubit_b).is_some()) {
                settled = true;
                break;
            }
        }
        if !settled {
            return Err(CompileError::RoutingStalled { layer: li });
        }
        let moves_end = timeline.push_all(&moves, barrier);
        let mut layer_end = moves_end;
        for &gi in layer {
            let g = &gates[gi];
            let trap = state.colocated(g.qubit_a, g.qubit_b).expect("layer settled");
            layer_end = layer_end.max(timeline.push(Primitive::gate(g.qubit_a, g.qubit_b, trap), moves_end));
        }
        barrier = layer_end;
    }
    Ok(timeline.finish(placement.clone(), *topology, RouterKind::Naive))
}

fn colocate_naive(
    state: &mut MachineState,
    gates: &[Gate],
    layer: &[usize],
    gate: &Gate,
    moves: &mut Vec<Primitive>,
) -> Result<(), CompileError> {
    let (lo, hi) = gate.sorted();
    if state.colocated(lo, hi).is_some() {
        return Ok(());
    }
    let mut pinned: Vec<Qubit> = layer
        .iter()
        .map(|&gi| &gates[gi])
        .filter(|g| state.colocated(g.qubit_a, g.qubit_b).is_some())
        .flat_map(|g| [g.qubit_a, g.qubit_b])
        .collect();
    pinned.extend([lo, hi]);
    let t_lo = state.trap_of(lo).ok_or(CompileError::NotInTrap(lo))?;
    let t_hi = state.trap_of(hi).ok_or(CompileError::NotInTrap(hi))?;
    let (movers, dest): (&[Qubit], usize) = if state.free_slots(t_lo) > 0 {
        (&[hi], t_lo)
    } else if state.free_slots(t_hi) > 0 {
        (&[lo], t_hi)
    } else if let Some(t) = nearest_with_room(state, t_lo, 2) {
        (&[lo, hi], t)
    } else {
        (&[hi], t_lo)
    };
    for &q in movers {
        moves.extend(plan_move(state, q, dest, &pinned)?);
    }
    Ok(())
}

fn nearest_with_room(state: &MachineState, from: usize, room: usize) -> Option<usize> {
    (0..state.n_traps())
        .filter(|&t| state.free_slots(t) >= room)
        .min_by_key(|&t| (t.abs_diff(from), t))
}

/// Movement-minimizing router with a lookahead window and no layer barrier.
///
/// Gates are taken in ASAP order. For a gate whose qubits sit in different
/// traps, the qubit with fewer gates among the next `lookahead` gates moves
/// to its partner (ties: fewer remaining gates overall, then lower index).
/// If the partner's trap is full the roles swap; if both are full the
/// destination is cleared by bubble displacement. Every event starts at
/// its earliest feasible time.
pub fn greedy_minmove(
    circuit: &Circuit,
    placement: &Placement,
    topology: &Topology,
    params: &DeviceParams,
    lookahead: usize,
    mode: MoveMode,
) -> Result<Schedule, CompileError> {
    prepare(circuit, placement, topology, params)?;
    let mut state = MachineState::new(placement, topology);
    let mut timeline =
        Timeline::new(topology, circuit.n_qubits(), params.durations(), mode == MoveMode::Serialize);
    let gates = circuit.gates();
    let layering = circuit.layering();
    let order: Vec<usize> = layering.layers.iter().flatten().copied().collect();
    let mut remaining = vec![0usize; circuit.n_qubits()];
    for g in gates {
        remaining[g.qubit_a] += 1;
        remaining[g.qubit_b] += 1;
    }
    for (k, &gi) in order.iter().enumerate() {
        let g = &gates[gi];
        if state.colocated(g.qubit_a, g.qubit_b).is_none() {
            let window = &order[k + 1..order.len().min(k + 1 + lookahead)];
            let upcoming = |q: Qubit| window.iter().filter(|&&w| gates[w].touches(q)).count();
            let key = |q: Qubit| (upcoming(q), remaining[q], q);
            let (mut mover, mut partner) = if key(g.qubit_a) <= key(g.qubit_b) {
                (g.qubit_a, g.qubit_b)
            } else {
                (g.qubit_b, g.qubit_a)
            };
            let mut dest = state.trap_of(partner).ok_or(CompileError::NotInTrap(partner))?;
            let here = state.trap_of(mover).ok_or(CompileError::NotInTrap(mover))?;
            if state.free_slots(dest) == 0 && state.free_slots(here) > 0 {
                core::mem::swap(&mut mover, &mut partner);
                dest = here;
            }
            let moves = plan_move(&mut state, mover, dest, &[partner])?;
            timeline.push_all(&moves, 0);
        }
        let trap = state
            .colocated(g.qubit_a, g.qubit_b)
            .ok_or(CompileError::RoutingStalled { layer: layering.layer_of[gi] })?;
        timeline.push(Primitive::gate(g.qubit_a, g.qubit_b, trap), 0);
        remaining[g.qubit_a] -= 1;
        remaining[g.qubit_b] -= 1;
    }
    Ok(timeline.finish(placement.clone(), *topology, RouterKind::Greedy))
}
