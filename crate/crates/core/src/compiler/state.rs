use alloc::vec;
use alloc::vec::Vec;

use crate::circuit::Qubit;
use crate::compiler::placement::Placement;
use crate::compiler::schedule::{EventKind, Primitive, Resource};
use crate::error::CompileError;
use crate::machine::Topology;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Location {
    Trap(usize),
    /// Split off `from`, currently at the boundary of `at`.
    Transit { from: usize, at: usize },
}

/// Ion chains of every trap as seen by the planners. An ion in transit
/// belongs to no chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MachineState {
    capacity: usize,
    chains: Vec<Vec<Qubit>>,
    location: Vec<Location>,
}

impl MachineState {
    pub fn new(placement: &Placement, topology: &Topology) -> Self {
        let chains = placement.chains(topology.n_traps());
        let mut location = vec![Location::Trap(0); placement.n_qubits()];
        for (t, chain) in chains.iter().enumerate() {
            for &q in chain {
                location[q] = Location::Trap(t);
            }
        }
        Self { capacity: topology.capacity(), chains, location }
    }

    pub fn n_traps(&self) -> usize {
        self.chains.len()
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn chain(&self, trap: usize) -> &[Qubit] {
        &self.chains[trap]
    }

    pub fn occupancy(&self, trap: usize) -> usize {
        self.chains[trap].len()
    }

    pub fn free_slots(&self, trap: usize) -> usize {
        self.capacity - self.chains[trap].len()
    }

    /// Trap holding `q`, or `None` while it is in transit.
    pub fn trap_of(&self, q: Qubit) -> Option<usize> {
        match self.location[q] {
            Location::Trap(t) => Some(t),
            Location::Transit { .. } => None,
        }
    }

    pub fn position(&self, q: Qubit) -> Option<usize> {
        let t = self.trap_of(q)?;
        self.chains[t].iter().position(|&x| x == q)
    }

    /// Trap shared by `a` and `b`, if any.
    pub fn colocated(&self, a: Qubit, b: Qubit) -> Option<usize> {
        match (self.trap_of(a), self.trap_of(b)) {
            (Some(x), Some(y)) if x == y => Some(x),
            _ => None,
        }
    }

    /// Applies a movement primitive, appending it to `out`.
    pub(crate) fn emit(&mut self, p: Primitive, out: &mut Vec<Primitive>) {
        self.apply(&p);
        out.push(p);
    }

    // Planner-side update. Legality is the planner's job; the replay
    // validator checks it independently.
    fn apply(&mut self, p: &Primitive) {
        match (p.kind, p.resource) {
            (EventKind::Gate, _) => {}
            (EventKind::Swap, Resource::Trap(t)) => {
                let other = p.other.expect("swap has two operands");
                let chain = &mut self.chains[t];
                let i = chain.iter().position(|&x| x == p.ion).expect("swap operand in trap");
                let j = chain.iter().position(|&x| x == other).expect("swap operand in trap");
                chain.swap(i, j);
            }
            (EventKind::Split, Resource::Trap(t)) => {
                self.chains[t].retain(|&x| x != p.ion);
                self.location[p.ion] = Location::Transit { from: t, at: t };
            }
            (EventKind::Hop, Resource::Segment(s)) => {
                if let Location::Transit { at, .. } = self.location[p.ion] {
                    let next = if at == s { s + 1 } else { s };
                    self.location[p.ion] = Location::Transit { from: at, at: next };
                }
            }
            (EventKind::Merge, Resource::Trap(t)) => {
                let enters_left = match self.location[p.ion] {
                    Location::Transit { from, .. } => from < t,
                    Location::Trap(_) => true,
                };
                if enters_left {
                    self.chains[t].insert(0, p.ion);
                } else {
                    self.chains[t].push(p.ion);
                }
                self.location[p.ion] = Location::Trap(t);
            }
            _ => unreachable!("primitive on the wrong resource kind"),
        }
    }

    /// Swaps `q` step by step to the left or right edge of its chain.
    fn swap_to_edge(&mut self, q: Qubit, right: bool, out: &mut Vec<Primitive>) {
        let t = self.trap_of(q).expect("ion rests in a trap");
        loop {
            let pos = self.position(q).expect("ion rests in a trap");
            let neighbour = if right {
                self.chains[t].get(pos + 1)
            } else {
                pos.checked_sub(1).map(|i| &self.chains[t][i])
            };
            match neighbour {
                Some(&n) => self.emit(Primitive::swap(q, n, t), out),
                None => break,
            }
        }
    }
}

/// Moves `qubit` to trap `dest` and returns the primitives, in order.
///
/// The ion is swapped to the departure edge, split, then hops one segment
/// at a time. Intermediate traps are crossed by merging at the near edge,
/// swapping to the far edge and splitting again. A full trap on the way is
/// cleared by displacing one of its ions (never one in `pinned` unless no
/// other exists) one hop back into the trap the moving ion just left,
/// which always has a free slot at that moment.
pub fn plan_move(
    state: &mut MachineState,
    qubit: Qubit,
    dest: usize,
    pinned: &[Qubit],
) -> Result<Vec<Primitive>, CompileError> {
    if dest >= state.n_traps() {
        return Err(CompileError::NoSuchTrap(dest));
    }
    let src = state.trap_of(qubit).ok_or(CompileError::NotInTrap(qubit))?;
    let mut out = Vec::new();
    if src == dest {
        return Ok(out);
    }
    let right = dest > src;
    state.swap_to_edge(qubit, right, &mut out);
    state.emit(Primitive::split(qubit, src), &mut out);
    let mut cur = src;
    while cur != dest {
        let next = if right { cur + 1 } else { cur - 1 };
        if state.free_slots(next) == 0 {
            make_room(state, next, cur, qubit, pinned, &mut out)?;
        }
        state.emit(Primitive::hop(qubit, cur.min(next)), &mut out);
        state.emit(Primitive::merge(qubit, next), &mut out);
        if next != dest {
            state.swap_to_edge(qubit, right, &mut out);
            state.emit(Primitive::split(qubit, next), &mut out);
        }
        cur = next;
    }
    Ok(out)
}

// Displaces one ion of the full trap `trap` into the adjacent trap `back`.
fn make_room(
    state: &mut MachineState,
    trap: usize,
    back: usize,
    moving: Qubit,
    pinned: &[Qubit],
    out: &mut Vec<Primitive>,
) -> Result<(), CompileError> {
    if state.free_slots(back) == 0 {
        return Err(CompileError::CapacityDeadlock { trap });
    }
    let toward_back_is_right = back > trap;
    let chain = state.chain(trap);
    // Nearest to the facing edge first, so the fewest swaps are needed.
    let by_distance: Vec<Qubit> = if toward_back_is_right {
        chain.iter().rev().copied().collect()
    } else {
        chain.to_vec()
    };
    let victim = by_distance
        .iter()
        .copied()
        .find(|q| !pinned.contains(q) && *q != moving)
        .or_else(|| by_distance.first().copied())
        .ok_or(CompileError::CapacityDeadlock { trap })?;
    state.swap_to_edge(victim, toward_back_is_right, out);
    state.emit(Primitive::split(victim, trap), out);
    state.emit(Primitive::hop(victim, trap.min(back)), out);
    state.emit(Primitive::merge(victim, back), out);
    Ok(())
}
