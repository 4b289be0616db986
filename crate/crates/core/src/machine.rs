//! Trap topology and device parameters.

use crate::error::MachineError;

/// Time in nanoseconds. Schedules use integer time so that makespans are
/// exact sums of event durations.
pub type Nanos = u64;

/// 1D-linear array of traps with uniform capacity. Segment `s` links
/// traps `s` and `s + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Topology {
    n_traps: usize,
    capacity: usize,
}

impl Topology {
    pub fn linear(n_traps: usize, capacity: usize) -> Result<Self, MachineError> {
        if n_traps == 0 {
            return Err(MachineError::NoTraps);
        }
        if capacity < 2 {
            return Err(MachineError::CapacityTooSmall(capacity));
        }
        Ok(Self { n_traps, capacity })
    }

    /// Single trap holding `n_qubits` ions plus one free slot.
    pub fn single_trap(n_qubits: usize) -> Self {
        Self { n_traps: 1, capacity: (n_qubits + 1).max(2) }
    }

    /// `n_traps` traps sized for `n_qubits` ions plus one free slot each.
    pub fn sized_for(n_qubits: usize, n_traps: usize) -> Result<Self, MachineError> {
        if n_traps == 0 {
            return Err(MachineError::NoTraps);
        }
        Self::linear(n_traps, n_qubits.div_ceil(n_traps) + 1)
    }

    pub fn n_traps(&self) -> usize {
        self.n_traps
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn n_segments(&self) -> usize {
        self.n_traps - 1
    }

    pub fn total_slots(&self) -> usize {
        self.n_traps * self.capacity
    }

    /// Slots available to the initial placement (one stays free per trap).
    pub fn usable_slots(&self) -> usize {
        self.n_traps * (self.capacity - 1)
    }

    /// Segment between two adjacent traps.
    pub fn segment_between(&self, a: usize, b: usize) -> Option<usize> {
        if a.abs_diff(b) == 1 && a.max(b) < self.n_traps {
            Some(a.min(b))
        } else {
            None
        }
    }
}

/// Device error and timing model.
///
/// The two-qubit gate error grows linearly with the chain length past two
/// ions, a surrogate for motional-mode crowding in long chains.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(default, deny_unknown_fields))]
pub struct DeviceParams {
    /// Two-qubit gate error in a two-ion chain.
    pub eps_2q0: f64,
    /// Relative error increase per ion beyond two.
    pub gamma: f64,
    /// SWAP error as a multiple of the gate error in the same chain.
    pub swap_error_ratio: f64,
    pub f_hop: f64,
    pub f_split: f64,
    pub f_merge: f64,
    pub t_2q_us: f64,
    pub t_swap_us: f64,
    pub t_split_us: f64,
    pub t_merge_us: f64,
    pub t_hop_us: f64,
    pub t2_ms: f64,
}

/// Calibrated values; `configs/default.toml` holds the same numbers.
impl Default for DeviceParams {
    fn default() -> Self {
        Self {
            eps_2q0: 1e-3,
            gamma: 0.15,
            swap_error_ratio: 1.0,
            f_hop: 1.0 - 3e-3,
            f_split: 1.0 - 5e-4,
            f_merge: 1.0 - 5e-4,
            t_2q_us: 100.0,
            t_swap_us: 100.0,
            t_split_us: 80.0,
            t_merge_us: 80.0,
            t_hop_us: 20.0,
            t2_ms: 1000.0,
        }
    }
}

impl DeviceParams {
    pub fn check(&self) -> Result<(), MachineError> {
        let bad = |name, reason| Err(MachineError::InvalidParam { name, reason });
        let prob = |x: f64| (0.0..1.0).contains(&x);
        let factor = |x: f64| x > 0.0 && x <= 1.0;
        if !prob(self.eps_2q0) {
            return bad("eps_2q0", "must be in [0, 1)");
        }
        if !(self.gamma >= 0.0) {
            return bad("gamma", "must be non-negative");
        }
        if !(self.swap_error_ratio >= 1.0) {
            return bad("swap_error_ratio", "must be at least 1");
        }
        for (name, f) in [("f_hop", self.f_hop), ("f_split", self.f_split), ("f_merge", self.f_merge)] {
            if !factor(f) {
                return bad(name, "must be in (0, 1]");
            }
        }
        for (name, t) in [
            ("t_2q_us", self.t_2q_us),
            ("t_swap_us", self.t_swap_us),
            ("t_split_us", self.t_split_us),
            ("t_merge_us", self.t_merge_us),
            ("t_hop_us", self.t_hop_us),
        ] {
            // Sub-nanosecond durations would round to zero.
            if !(t >= 1e-3) || !t.is_finite() {
                return bad(name, "must be a positive duration");
            }
        }
        if !(self.t2_ms > 0.0) {
            return bad("t2_ms", "must be positive");
        }
        Ok(())
    }

    /// Two-qubit gate error in a chain of `chain_length` ions.
    pub fn gate_error(&self, chain_length: usize) -> f64 {
        let extra = chain_length.saturating_sub(2) as f64;
        clamp_error(self.eps_2q0 * (1.0 + self.gamma * extra))
    }

    pub fn swap_error(&self, chain_length: usize) -> f64 {
        clamp_error(self.swap_error_ratio * self.gate_error(chain_length))
    }

    pub fn durations(&self) -> Durations {
        let ns = |us: f64| libm::round(us * 1000.0) as Nanos;
        Durations {
            gate: ns(self.t_2q_us),
            swap: ns(self.t_swap_us),
            split: ns(self.t_split_us),
            merge: ns(self.t_merge_us),
            hop: ns(self.t_hop_us),
        }
    }
}

// Error probabilities stay strictly below one so every factor is positive.
fn clamp_error(e: f64) -> f64 {
    e.min(1.0 - 1e-12)
}

/// Primitive durations in nanoseconds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Durations {
    pub gate: Nanos,
    pub swap: Nanos,
    pub split: Nanos,
    pub merge: Nanos,
    pub hop: Nanos,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_topologies() {
        let t = Topology::linear(4, 3).unwrap();
        assert_eq!((t.n_traps(), t.n_segments()), (4, 3));
        let t = Topology::linear(1, 41).unwrap();
        assert_eq!(t.n_segments(), 0);
        let t = Topology::linear(10, 3).unwrap();
        assert_eq!((t.total_slots(), t.usable_slots()), (30, 20));
        assert_eq!(Topology::linear(0, 3), Err(MachineError::NoTraps));
        assert_eq!(Topology::linear(2, 1), Err(MachineError::CapacityTooSmall(1)));
    }

    #[test]
    fn sized_for_adds_a_free_slot() {
        assert_eq!(Topology::sized_for(40, 3).unwrap().capacity(), 15);
        assert_eq!(Topology::sized_for(40, 20).unwrap().capacity(), 3);
        assert_eq!(Topology::single_trap(40).capacity(), 41);
    }

    #[test]
    fn segments() {
        let t = Topology::linear(4, 3).unwrap();
        assert_eq!(t.segment_between(1, 2), Some(1));
        assert_eq!(t.segment_between(2, 1), Some(1));
        assert_eq!(t.segment_between(1, 3), None);
        assert_eq!(t.segment_between(3, 4), None);
    }

    #[test]
    fn gate_error_examples() {
        let p = |gamma| DeviceParams { eps_2q0: 0.001, gamma, ..DeviceParams::default() };
        assert_eq!(p(0.0).gate_error(40), 0.001);
        assert_eq!(p(0.05).gate_error(2), 0.001);
        assert!((p(0.05).gate_error(12) - 0.0015).abs() < 1e-15);
        assert_eq!(p(0.05).gate_error(1), 0.001);
    }

    #[test]
    fn swap_error_clamped() {
        let p = DeviceParams { eps_2q0: 0.5, gamma: 1.0, swap_error_ratio: 3.0, ..DeviceParams::default() };
        assert!(p.swap_error(10) < 1.0);
        assert!(p.gate_error(10) < 1.0);
    }

    #[test]
    fn check_rejects_bad_values() {
        assert!(DeviceParams::default().check().is_ok());
        let bad = [
            DeviceParams { swap_error_ratio: 0.5, ..DeviceParams::default() },
            DeviceParams { t2_ms: 0.0, ..DeviceParams::default() },
            DeviceParams { t_hop_us: 0.0, ..DeviceParams::default() },
            DeviceParams { eps_2q0: 1.0, ..DeviceParams::default() },
            DeviceParams { f_split: 0.0, ..DeviceParams::default() },
            DeviceParams { gamma: -0.1, ..DeviceParams::default() },
        ];
        for p in bad {
            assert!(p.check().is_err(), "{p:?}");
        }
    }

    #[test]
    fn durations_in_nanoseconds() {
        let d = DeviceParams::default().durations();
        assert_eq!((d.gate, d.swap, d.split, d.merge, d.hop), (100_000, 100_000, 80_000, 80_000, 20_000));
    }
}
