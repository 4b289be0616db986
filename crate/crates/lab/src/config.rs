//! TOML device configuration.
//!
//! ```toml
//! [device]
//! eps_2q0 = 0.001          # two-qubit gate error in a two-ion chain
//! gamma = 0.15             # relative error increase per ion beyond two
//! swap_error_ratio = 1.0   # SWAP error / gate error in the same chain
//! f_hop = 0.997            # success factor per segment hop
//! f_split = 0.9995
//! f_merge = 0.9995
//! t_2q_us = 100.0          # durations in microseconds
//! t_swap_us = 100.0
//! t_split_us = 80.0
//! t_merge_us = 80.0
//! t_hop_us = 20.0
//! t2_ms = 1000.0           # coherence time in milliseconds
//!
//! [topology]
//! n_traps = 10             # optional; commands may override
//! capacity = 3             # optional; defaults to ceil(n / n_traps) + 1
//! ```
//!
//! Every key is optional and falls back to [`DeviceParams::default`].
//! Unknown keys are rejected.

use std::path::Path;

use qccd_core::{DeviceParams, Topology};
use serde::{Deserialize, Serialize};

use crate::LabError;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TopologyConfig {
    pub n_traps: Option<usize>,
    pub capacity: Option<usize>,
}

impl TopologyConfig {
    /// Resolves the topology for `n_qubits`, with explicit arguments taking
    /// precedence over the file. Without a trap count the device is a
    /// single trap.
    pub fn resolve(
        &self,
        n_qubits: usize,
        n_traps: Option<usize>,
        capacity: Option<usize>,
    ) -> Result<Topology, LabError> {
        let traps = n_traps.or(self.n_traps).unwrap_or(1);
        Ok(match capacity.or(self.capacity) {
            Some(cap) => Topology::linear(traps, cap)?,
            None => Topology::sized_for(n_qubits, traps)?,
        })
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LabConfig {
    pub device: DeviceParams,
    pub topology: TopologyConfig,
}

impl LabConfig {
    pub fn from_toml(text: &str) -> Result<Self, LabError> {
        let config: Self = toml::from_str(text)?;
        config.device.check()?;
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self, LabError> {
        Self::from_toml(&std::fs::read_to_string(path)?)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config always serializes")
    }
}
