//! Two-qubit gate IR.
//!
//! Only two-qubit interactions are represented: single-qubit gates never
//! move ions and are left out of the cost model. Depth is therefore the
//! depth of the two-qubit layering (QFT on `n` qubits has depth `2n - 3`).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub type Qubit = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Gate {
    pub qubit_a: Qubit,
    pub qubit_b: Qubit,
    pub program_index: usize,
}

impl Gate {
    pub fn touches(&self, q: Qubit) -> bool {
        self.qubit_a == q || self.qubit_b == q
    }

    /// The other operand. Only meaningful when `touches(q)`.
    pub fn partner_of(&self, q: Qubit) -> Qubit {
        if self.qubit_a == q {
            self.qubit_b
        } else {
            self.qubit_a
        }
    }

    /// Operands ordered `(low, high)`.
    pub fn sorted(&self) -> (Qubit, Qubit) {
        if self.qubit_a <= self.qubit_b {
            (self.qubit_a, self.qubit_b)
        } else {
            (self.qubit_b, self.qubit_a)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CircuitViolation {
    SelfGate { position: usize },
    QubitOutOfRange { position: usize, qubit: Qubit },
    ProgramIndex { position: usize, found: usize },
}

impl fmt::Display for CircuitViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::SelfGate { position } => write!(f, "self-gate at position {position}"),
            Self::QubitOutOfRange { position, qubit } => {
                write!(f, "qubit out of range: {qubit} at position {position}")
            }
            Self::ProgramIndex { position, found } => {
                write!(f, "program index {found} at position {position} is not dense")
            }
        }
    }
}

/// Ordered list of two-qubit gates over `n_qubits` virtual qubits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    n_qubits: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    /// Builds a circuit from operand pairs, numbering gates in program order.
    pub fn new<I>(n_qubits: usize, pairs: I) -> Self
    where
        I: IntoIterator<Item = (Qubit, Qubit)>,
    {
        let gates = pairs
            .into_iter()
            .enumerate()
            .map(|(program_index, (qubit_a, qubit_b))| Gate {
                qubit_a,
                qubit_b,
                program_index,
            })
            .collect();
        Self { n_qubits, gates }
    }

    /// Takes gates as given, without renumbering. Use [`Circuit::validate`]
    /// to check the result.
    pub fn from_gates(n_qubits: usize, gates: Vec<Gate>) -> Self {
        Self { n_qubits, gates }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Qubit, Qubit)> + '_ {
        self.gates.iter().map(|g| (g.qubit_a, g.qubit_b))
    }

    /// Returns every invariant violation; an empty list means the circuit
    /// is well formed.
    pub fn validate(&self) -> Vec<CircuitViolation> {
        let mut out = Vec::new();
        for (position, g) in self.gates.iter().enumerate() {
            if g.qubit_a == g.qubit_b {
                out.push(CircuitViolation::SelfGate { position });
            }
            for q in [g.qubit_a, g.qubit_b] {
                if q >= self.n_qubits {
                    out.push(CircuitViolation::QubitOutOfRange { position, qubit: q });
                }
            }
            if g.program_index != position {
                out.push(CircuitViolation::ProgramIndex {
                    position,
                    found: g.program_index,
                });
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// ASAP layering: each gate goes one layer after the latest layer of
    /// either operand.
    pub fn layering(&self) -> Layering {
        let mut last: Vec<Option<usize>> = vec![None; self.n_qubits];
        let mut layer_of = Vec::with_capacity(self.gates.len());
        let mut layers: Vec<Vec<usize>> = Vec::new();
        for (i, g) in self.gates.iter().enumerate() {
            let la = last[g.qubit_a];
            let lb = last[g.qubit_b];
            let layer = match (la, lb) {
                (None, None) => 0,
                (Some(x), None) | (None, Some(x)) => x + 1,
                (Some(x), Some(y)) => x.max(y) + 1,
            };
            last[g.qubit_a] = Some(layer);
            last[g.qubit_b] = Some(layer);
            if layers.len() <= layer {
                layers.resize_with(layer + 1, Vec::new);
            }
            layers[layer].push(i);
            layer_of.push(layer);
        }
        Layering { layers, layer_of }
    }

    /// Per-qubit movement counts: walking a qubit's gates in program
    /// order, every gate whose partner differs from the previous gate's
    /// partner counts one movement. The first gate is free.
    pub fn partner_change_counts(&self) -> Vec<usize> {
        let mut prev: Vec<Option<Qubit>> = vec![None; self.n_qubits];
        let mut counts = vec![0usize; self.n_qubits];
        for g in &self.gates {
            for (q, partner) in [(g.qubit_a, g.qubit_b), (g.qubit_b, g.qubit_a)] {
                if let Some(p) = prev[q] {
                    if p != partner {
                        counts[q] += 1;
                    }
                }
                prev[q] = Some(partner);
            }
        }
        counts
    }

    pub fn stats(&self) -> CircuitStats {
        let layering = self.layering();
        let depth = layering.depth();
        let gate_count = self.gates.len();
        let movements = self.partner_change_counts();
        let total_movements: usize = movements.iter().sum();
        let (avg_gates_per_ts, avg_ion_mov_per_ts) = if depth == 0 {
            (0.0, 0.0)
        } else {
            (
                gate_count as f64 / depth as f64,
                total_movements as f64 / depth as f64,
            )
        };
        let movement_percentage = self.movement_percentage(&layering);
        CircuitStats {
            n_qubits: self.n_qubits,
            depth,
            gate_count,
            avg_gates_per_ts,
            movements,
            total_movements,
            avg_ion_mov_per_ts,
            movement_percentage,
        }
    }

    // Mean over layers of the fraction of active qubits whose partner
    // differs from the partner of their previous gate. A qubit's first
    // gate has nothing to differ from and counts as not moving.
    fn movement_percentage(&self, layering: &Layering) -> f64 {
        if layering.depth() == 0 {
            return 0.0;
        }
        let mut prev: Vec<Option<Qubit>> = vec![None; self.n_qubits];
        let mut sum = 0.0;
        for layer in &layering.layers {
            let mut active = 0usize;
            let mut moved = 0usize;
            for &gi in layer {
                let g = &self.gates[gi];
                for (q, partner) in [(g.qubit_a, g.qubit_b), (g.qubit_b, g.qubit_a)] {
                    active += 1;
                    if matches!(prev[q], Some(p) if p != partner) {
                        moved += 1;
                    }
                    prev[q] = Some(partner);
                }
            }
            sum += moved as f64 / active as f64;
        }
        100.0 * sum / layering.depth() as f64
    }
}

/// ASAP layers of gate positions (indices into [`Circuit::gates`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layering {
    pub layers: Vec<Vec<usize>>,
    /// Layer of each gate, by position.
    pub layer_of: Vec<usize>,
}

impl Layering {
    pub fn depth(&self) -> usize {
        self.layers.len()
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CircuitStats {
    pub n_qubits: usize,
    pub depth: usize,
    pub gate_count: usize,
    pub avg_gates_per_ts: f64,
    /// Partner changes per qubit.
    pub movements: Vec<usize>,
    pub total_movements: usize,
    pub avg_ion_mov_per_ts: f64,
    /// In `[0, 100]`.
    pub movement_percentage: f64,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qft4() -> Circuit {
        Circuit::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    #[test]
    fn validate_reports_each_violation() {
        assert!(Circuit::new(2, [(0, 1)]).validate().is_empty());
        assert_eq!(
            Circuit::new(2, [(0, 0)]).validate(),
            vec![CircuitViolation::SelfGate { position: 0 }]
        );
        assert_eq!(
            Circuit::new(4, [(0, 5)]).validate(),
            vec![CircuitViolation::QubitOutOfRange { position: 0, qubit: 5 }]
        );
        let bad = Circuit::from_gates(
            3,
            vec![
                Gate { qubit_a: 0, qubit_b: 1, program_index: 0 },
                Gate { qubit_a: 1, qubit_b: 2, program_index: 0 },
            ],
        );
        assert_eq!(
            bad.validate(),
            vec![CircuitViolation::ProgramIndex { position: 1, found: 0 }]
        );
    }

    #[test]
    fn layering_small_cases() {
        assert_eq!(Circuit::new(4, [(0, 1), (2, 3)]).layering().depth(), 1);
        assert_eq!(Circuit::new(3, [(0, 1), (1, 2)]).layering().depth(), 2);
        let l = qft4().layering();
        assert_eq!(l.layers, vec![vec![0], vec![1], vec![2, 3], vec![4], vec![5]]);
    }

    #[test]
    fn partner_changes() {
        // qubit 0 with partners [1, 1, 1]
        let c = Circuit::new(4, [(0, 1), (0, 1), (0, 1)]);
        assert_eq!(c.partner_change_counts()[0], 0);
        // qubit 0 with partners [1, 2, 3]
        let c = Circuit::new(4, [(0, 1), (0, 2), (0, 3)]);
        assert_eq!(c.partner_change_counts()[0], 2);
    }

    #[test]
    fn stats_qft4_and_single_gate() {
        let s = qft4().stats();
        assert_eq!((s.depth, s.gate_count, s.total_movements), (5, 6, 8));
        assert!((s.avg_gates_per_ts - 1.2).abs() < 1e-12);
        assert!((s.avg_ion_mov_per_ts - 1.6).abs() < 1e-12);

        let s = Circuit::new(2, [(0, 1)]).stats();
        assert_eq!((s.depth, s.gate_count), (1, 1));
        assert_eq!(s.avg_gates_per_ts, 1.0);
        assert_eq!(s.avg_ion_mov_per_ts, 0.0);
        assert_eq!(s.movement_percentage, 0.0);
    }

    #[test]
    fn empty_circuit_stats() {
        let s = Circuit::new(3, []).stats();
        assert_eq!(s.depth, 0);
        assert_eq!(s.avg_ion_mov_per_ts, 0.0);
        assert_eq!(s.movement_percentage, 0.0);
    }
}
