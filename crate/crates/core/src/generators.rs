//! Benchmark circuit generators.
//!
//! All generators are deterministic; the random benchmark is fully
//! determined by its seed.

use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circuit::{Circuit, Qubit};
use crate::error::GeneratorError;

/// Worst-case random benchmark: `n_qubits` qubits, depth `n_qubits`, every
/// qubit busy in every timestep.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BenchSpec {
    pub n_qubits: usize,
    /// Share of qubits changing partner per timestep, in `[0, 100]`.
    pub movement_pct: f64,
    pub seed: u64,
}

impl BenchSpec {
    pub fn new(n_qubits: usize, movement_pct: f64, seed: u64) -> Self {
        Self { n_qubits, movement_pct, seed }
    }

    pub fn check(&self) -> Result<(), GeneratorError> {
        if self.n_qubits < 2 {
            return Err(GeneratorError::TooFewQubits { got: self.n_qubits, min: 2 });
        }
        if !self.n_qubits.is_multiple_of(2) {
            return Err(GeneratorError::OddQubitCount(self.n_qubits));
        }
        if !(0.0..=100.0).contains(&self.movement_pct) {
            return Err(GeneratorError::MovementOutOfRange(self.movement_pct));
        }
        Ok(())
    }
}

/// Fully parallel random circuit.
///
/// Qubits start paired as `(2i, 2i+1)`; every timestep applies one gate per
/// pair. Between timesteps a window of `k` consecutive pair slots (starting
/// at a seed-derived offset, wrapping) has its second members rotated by
/// one slot, so every qubit in the window changes partner. `k` follows an
/// error-diffusion schedule whose running total tracks
/// `movement_pct / 100 * n / 2` slots per step. A rotation over one slot is
/// the identity, so `k = 1` is never used: the residual is carried instead.
pub fn random_parallel(spec: &BenchSpec) -> Result<Circuit, GeneratorError> {
    spec.check()?;
    let n = spec.n_qubits;
    let slots = n / 2;
    let firsts: Vec<Qubit> = (0..slots).map(|s| 2 * s).collect();
    let mut seconds: Vec<Qubit> = (0..slots).map(|s| 2 * s + 1).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let per_step = spec.movement_pct / 100.0 * slots as f64;

    let mut pairs = Vec::with_capacity(n * slots);
    let mut rotated = 0usize;
    for step in 0..n {
        if step > 0 && slots >= 2 {
            let residual = per_step * step as f64 - rotated as f64;
            let mut k = libm::round(residual).clamp(0.0, slots as f64) as usize;
            if k == 1 {
                k = if residual >= 1.0 { 2 } else { 0 };
            }
            if k >= 2 {
                let offset = rng.gen_range(0..slots);
                let window: Vec<usize> = (0..k).map(|i| (offset + i) % slots).collect();
                let carried = seconds[window[k - 1]];
                for i in (1..k).rev() {
                    seconds[window[i]] = seconds[window[i - 1]];
                }
                seconds[window[0]] = carried;
                rotated += k;
            }
        }
        pairs.extend((0..slots).map(|s| (firsts[s], seconds[s])));
    }
    Ok(Circuit::new(n, pairs))
}

fn at_least(n: usize, min: usize) -> Result<(), GeneratorError> {
    if n < min {
        Err(GeneratorError::TooFewQubits { got: n, min })
    } else {
        Ok(())
    }
}

// Complete graph in QFT program order: target i ascending, then j > i.
fn complete_edges(qubits: &[Qubit]) -> impl Iterator<Item = (Qubit, Qubit)> + '_ {
    (0..qubits.len())
        .flat_map(move |i| (i + 1..qubits.len()).map(move |j| (qubits[i], qubits[j])))
}

/// Two-qubit skeleton of the QFT: one controlled phase per pair, target
/// ascending, controls ascending. Depth `2n - 3`.
pub fn qft(n: usize) -> Result<Circuit, GeneratorError> {
    at_least(n, 2)?;
    let qubits: Vec<Qubit> = (0..n).collect();
    Ok(Circuit::new(n, complete_edges(&qubits)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum QaoaOrder {
    /// Same order as [`qft`]; the two circuits are identical.
    #[default]
    QftOrder,
    /// Circle-method round robin, `n - 1` perfect matchings for even `n`.
    RoundRobin,
}

/// One ZZ interaction per edge of the complete graph (single QAOA layer).
pub fn qaoa_complete(n: usize) -> Result<Circuit, GeneratorError> {
    qaoa_complete_with(n, QaoaOrder::QftOrder)
}

pub fn qaoa_complete_with(n: usize, order: QaoaOrder) -> Result<Circuit, GeneratorError> {
    at_least(n, 2)?;
    match order {
        QaoaOrder::QftOrder => {
            let qubits: Vec<Qubit> = (0..n).collect();
            Ok(Circuit::new(n, complete_edges(&qubits)))
        }
        QaoaOrder::RoundRobin => Ok(Circuit::new(n, round_robin(n))),
    }
}

fn round_robin(n: usize) -> Vec<(Qubit, Qubit)> {
    // Odd n gets a phantom participant `n`; its pairings are dropped.
    let m = if n.is_multiple_of(2) { n } else { n + 1 };
    let ring = m - 1;
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for round in 0..ring {
        let mut push = |a: usize, b: usize| {
            if a < n && b < n {
                out.push((a.min(b), a.max(b)));
            }
        };
        push(round, m - 1);
        for k in 1..m / 2 {
            push((round + k) % ring, (round + ring - k) % ring);
        }
    }
    out
}

/// Draper (QFT-based) adder on `n_total = 2m` qubits: register A is
/// `0..m`, register B is `m..2m`.
///
/// Three blocks: QFT on B (targets ascending), the controlled-phase
/// addition `(A_i, B_j)` for `i >= j` emitted B-target-major with targets
/// and controls descending, then the inverse transform on B emitted in the
/// opposite qubit-significance convention (controls `B_k, k < j`, targets
/// ascending). With this ordering the three blocks stack without ASAP
/// overlap, giving depth `(2m - 3) + (2m - 1) + (2m - 3) = 6m - 7`.
pub fn draper(n_total: usize) -> Result<Circuit, GeneratorError> {
    at_least(n_total, 4)?;
    if !n_total.is_multiple_of(2) {
        return Err(GeneratorError::OddQubitCount(n_total));
    }
    let m = n_total / 2;
    let a = |i: usize| i;
    let b = |i: usize| m + i;
    let mut pairs = Vec::with_capacity(m * (m - 1) + m * (m + 1) / 2);
    for i in 0..m {
        for j in i + 1..m {
            pairs.push((b(i), b(j)));
        }
    }
    for j in (0..m).rev() {
        for i in (j..m).rev() {
            pairs.push((a(i), b(j)));
        }
    }
    for j in 1..m {
        for k in 0..j {
            pairs.push((b(j), b(k)));
        }
    }
    Ok(Circuit::new(n_total, pairs))
}

// Six-CNOT Toffoli, controls (c1, c2), target t.
fn toffoli(c1: Qubit, c2: Qubit, t: Qubit) -> [(Qubit, Qubit); 6] {
    [(c2, t), (c1, t), (c2, t), (c1, t), (c1, c2), (c1, c2)]
}

fn toffoli_mirrored(c1: Qubit, c2: Qubit, t: Qubit) -> [(Qubit, Qubit); 6] {
    let mut g = toffoli(c1, c2, t);
    g.reverse();
    g
}

/// Cuccaro ripple-carry adder on `n_total = 2m + 2` qubits.
///
/// Layout: carry-in `0`, then interleaved `b_i = 1 + 2i`, `a_i = 2 + 2i`,
/// carry-out `n_total - 1`. `MAJ(c, b, a)` is `CX(a,b) CX(a,c) CCX(c,b;a)`
/// and `UMA(c, b, a)` is `CCX(c,b;a) CX(a,c) CX(c,b)`. Each Toffoli is the
/// standard six-CNOT decomposition with controls `(b, c)`; the MAJ copy is
/// emitted mirrored, so each UMA Toffoli is the exact reverse of its MAJ
/// partner. Gate count `16m + 1`.
pub fn cuccaro(n_total: usize) -> Result<Circuit, GeneratorError> {
    at_least(n_total, 4)?;
    if !n_total.is_multiple_of(2) {
        return Err(GeneratorError::OddQubitCount(n_total));
    }
    let m = (n_total - 2) / 2;
    let b = |i: usize| 1 + 2 * i;
    let a = |i: usize| 2 + 2 * i;
    let carry = |i: usize| if i == 0 { 0 } else { a(i - 1) };
    let z = n_total - 1;

    let mut pairs = Vec::with_capacity(16 * m + 1);
    for i in 0..m {
        let (c, bb, aa) = (carry(i), b(i), a(i));
        pairs.push((aa, bb));
        pairs.push((aa, c));
        pairs.extend(toffoli_mirrored(bb, c, aa));
    }
    pairs.push((a(m - 1), z));
    for i in (0..m).rev() {
        let (c, bb, aa) = (carry(i), b(i), a(i));
        pairs.extend(toffoli(bb, c, aa));
        pairs.push((aa, c));
        pairs.push((c, bb));
    }
    Ok(Circuit::new(n_total, pairs))
}

/// The four structured benchmarks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Algorithm {
    Cuccaro,
    Draper,
    Qaoa,
    Qft,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [Self::Cuccaro, Self::Draper, Self::Qaoa, Self::Qft];

    pub fn build(self, n_qubits: usize) -> Result<Circuit, GeneratorError> {
        match self {
            Self::Cuccaro => cuccaro(n_qubits),
            Self::Draper => draper(n_qubits),
            Self::Qaoa => qaoa_complete(n_qubits),
            Self::Qft => qft(n_qubits),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::Cuccaro => "CA",
            Self::Draper => "DA",
            Self::Qaoa => "QAOA",
            Self::Qft => "QFT",
        }
    }

    pub fn from_label(s: &str) -> Option<Self> {
        Self::ALL
            .into_iter()
            .find(|a| a.label().eq_ignore_ascii_case(s))
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}
