use qccd_core::compiler::compile;
use qccd_core::{
    schedule_fidelity, validate_schedule, Circuit, CoherenceMode, CompileOptions, DeviceParams, FidelityReport,
    Schedule, Topology,
};

use crate::LabError;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RunOptions {
    pub compile: CompileOptions,
    pub coherence: CoherenceMode,
}

/// Places, routes and validates `circuit`. Any replay violation is an error.
pub fn compile_checked(
    circuit: &Circuit,
    topology: &Topology,
    params: &DeviceParams,
    options: &CompileOptions,
) -> Result<Schedule, LabError> {
    let schedule = compile(circuit, topology, params, options)?;
    let violations = validate_schedule(&schedule, circuit, topology);
    if !violations.is_empty() {
        return Err(LabError::Validation(violations));
    }
    Ok(schedule)
}

/// Full pipeline: placement, routing, validation and fidelity.
pub fn run_one(
    circuit: &Circuit,
    topology: &Topology,
    params: &DeviceParams,
    options: &RunOptions,
) -> Result<(Schedule, FidelityReport), LabError> {
    let schedule = compile_checked(circuit, topology, params, &options.compile)?;
    let report = schedule_fidelity(&schedule, circuit, params, options.coherence)?;
    Ok((schedule, report))
}

/// The sequential baseline: every gate in one trap, in order.
pub fn run_sequential(
    circuit: &Circuit,
    params: &DeviceParams,
    coherence: CoherenceMode,
) -> Result<(Schedule, FidelityReport), LabError> {
    let options = RunOptions { compile: CompileOptions::default(), coherence };
    run_one(circuit, &Topology::single_trap(circuit.n_qubits()), params, &options)
}
