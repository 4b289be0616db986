use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::circuit::{Circuit, Qubit};
use crate::error::CompileError;
use crate::machine::Topology;

/// Initial assignment of qubits to `(trap, chain position)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Placement {
    location: Vec<(usize, usize)>,
}

impl Placement {
    /// Builds a placement from per-trap chains, listed left to right. Every
    /// qubit in `0..n_qubits` must appear exactly once.
    pub fn from_chains(n_qubits: usize, chains: &[Vec<Qubit>]) -> Result<Self, CompileError> {
        let mut location = vec![None; n_qubits];
        for (trap, chain) in chains.iter().enumerate() {
            for (pos, &q) in chain.iter().enumerate() {
                let slot = location
                    .get_mut(q)
                    .ok_or(CompileError::InvalidPlacement("qubit out of range"))?;
                if slot.is_some() {
                    return Err(CompileError::InvalidPlacement("qubit placed twice"));
                }
                *slot = Some((trap, pos));
            }
        }
        let location = location
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or(CompileError::InvalidPlacement("qubit not placed"))?;
        Ok(Self { location })
    }

    pub fn n_qubits(&self) -> usize {
        self.location.len()
    }

    /// `(trap, chain position)` of a qubit.
    pub fn location(&self, q: Qubit) -> (usize, usize) {
        self.location[q]
    }

    pub fn chains(&self, n_traps: usize) -> Vec<Vec<Qubit>> {
        let max_trap = self.location.iter().map(|&(t, _)| t + 1).max().unwrap_or(0);
        let mut chains: Vec<Vec<(usize, Qubit)>> = vec![Vec::new(); n_traps.max(max_trap)];
        for (q, &(t, pos)) in self.location.iter().enumerate() {
            chains[t].push((pos, q));
        }
        chains
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c.into_iter().map(|(_, q)| q).collect()
            })
            .collect()
    }

    pub fn occupancy(&self, n_traps: usize) -> Vec<usize> {
        self.chains(n_traps).iter().map(Vec::len).collect()
    }

    /// Checks trap bounds, dense chain positions and the reserved free slot.
    pub fn check(&self, topology: &Topology) -> Result<(), CompileError> {
        if self.location.iter().any(|&(t, _)| t >= topology.n_traps()) {
            return Err(CompileError::InvalidPlacement("trap out of range"));
        }
        let mut seen = vec![vec![false; topology.capacity()]; topology.n_traps()];
        for &(t, pos) in &self.location {
            if pos + 1 >= topology.capacity() {
                return Err(CompileError::InvalidPlacement("no free slot left in trap"));
            }
            if core::mem::replace(&mut seen[t][pos], true) {
                return Err(CompileError::InvalidPlacement("two qubits share a slot"));
            }
        }
        for row in &seen {
            let occupied = row.iter().take_while(|&&s| s).count();
            if row[occupied..].iter().any(|&s| s) {
                return Err(CompileError::InvalidPlacement("chain positions are not dense"));
            }
        }
        Ok(())
    }
}

/// Spatio-temporal aware placement.
///
/// Interaction edges are weighted by `sum 1 / (1 + layer)` over their
/// gates, so early interactions dominate. Edges are taken heaviest first
/// (ties: lower qubit pair) and co-located when the trap budget allows.
/// Each trap takes at most `capacity - 1` qubits; traps fill left to right.
pub fn sta_placement(circuit: &Circuit, topology: &Topology) -> Result<Placement, CompileError> {
    let n = circuit.n_qubits();
    if n > topology.usable_slots() {
        return Err(CompileError::InsufficientSlots { qubits: n, slots: topology.usable_slots() });
    }
    let layering = circuit.layering();
    let mut weights: BTreeMap<(Qubit, Qubit), f64> = BTreeMap::new();
    for (g, &layer) in circuit.gates().iter().zip(&layering.layer_of) {
        *weights.entry(g.sorted()).or_insert(0.0) += 1.0 / (1.0 + layer as f64);
    }
    let mut edges: Vec<((Qubit, Qubit), f64)> = weights.into_iter().collect();
    // Stable sort keeps the (lo, hi) order among equal weights.
    edges.sort_by(|a, b| b.1.total_cmp(&a.1));

    let budget = topology.capacity() - 1;
    let mut chains: Vec<Vec<Qubit>> = vec![Vec::new(); topology.n_traps()];
    let mut trap_of: Vec<Option<usize>> = vec![None; n];
    let first_with = |chains: &[Vec<Qubit>], room: usize| {
        chains.iter().position(|c| budget - c.len() >= room)
    };
    let place = |chains: &mut Vec<Vec<Qubit>>, trap_of: &mut Vec<Option<usize>>, q: Qubit, t: usize| {
        chains[t].push(q);
        trap_of[q] = Some(t);
    };

    for ((lo, hi), _) in edges {
        match (trap_of[lo], trap_of[hi]) {
            (None, None) => {
                if let Some(t) = first_with(&chains, 2) {
                    place(&mut chains, &mut trap_of, lo, t);
                    place(&mut chains, &mut trap_of, hi, t);
                } else {
                    for q in [lo, hi] {
                        let t = first_with(&chains, 1).expect("slot count checked");
                        place(&mut chains, &mut trap_of, q, t);
                    }
                }
            }
            (Some(t), None) | (None, Some(t)) => {
                let q = if trap_of[lo].is_none() { lo } else { hi };
                let t = if chains[t].len() < budget {
                    t
                } else {
                    first_with(&chains, 1).expect("slot count checked")
                };
                place(&mut chains, &mut trap_of, q, t);
            }
            (Some(_), Some(_)) => {}
        }
    }
    for q in 0..n {
        if trap_of[q].is_none() {
            let t = first_with(&chains, 1).expect("slot count checked");
            place(&mut chains, &mut trap_of, q, t);
        }
    }
    Placement::from_chains(n, &chains)
}

/// Puts the `i`-th gate of the first ASAP layer into trap `i`, two ions per
/// trap. The first layer must pair up every qubit.
pub fn paired_placement(circuit: &Circuit, topology: &Topology) -> Result<Placement, CompileError> {
    let n = circuit.n_qubits();
    let layering = circuit.layering();
    let first = layering.layers.first().map(Vec::as_slice).unwrap_or(&[]);
    if !n.is_multiple_of(2) || first.len() * 2 != n {
        return Err(CompileError::NotAMatching);
    }
    let pairs = first.len();
    if pairs > topology.n_traps() {
        return Err(CompileError::TooFewTraps { pairs, traps: topology.n_traps() });
    }
    if topology.capacity() < 3 {
        return Err(CompileError::InsufficientSlots { qubits: n, slots: topology.usable_slots() });
    }
    let mut chains: Vec<Vec<Qubit>> = vec![Vec::new(); topology.n_traps()];
    for (t, &gi) in first.iter().enumerate() {
        let (lo, hi) = circuit.gates()[gi].sorted();
        chains[t] = vec![lo, hi];
    }
    Placement::from_chains(n, &chains)
}
