use alloc::vec::Vec;

use thiserror::Error;

use crate::circuit::Qubit;
use crate::compiler::ScheduleViolation;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeneratorError {
    #[error("qubit count {0} must be even")]
    OddQubitCount(usize),
    #[error("qubit count {got} is below the minimum of {min}")]
    TooFewQubits { got: usize, min: usize },
    #[error("movement percentage {0} outside [0, 100]")]
    MovementOutOfRange(f64),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MachineError {
    #[error("a topology needs at least one trap")]
    NoTraps,
    #[error("trap capacity {0} is below 2")]
    CapacityTooSmall(usize),
    #[error("invalid device parameter `{name}`: {reason}")]
    InvalidParam { name: &'static str, reason: &'static str },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CompileError {
    #[error("{qubits} qubits do not fit in {slots} usable slots")]
    InsufficientSlots { qubits: usize, slots: usize },
    #[error("first layer is not a perfect matching of the qubits")]
    NotAMatching,
    #[error("too few traps: {pairs} pairs need {pairs} traps, topology has {traps}")]
    TooFewTraps { pairs: usize, traps: usize },
    #[error("invalid placement: {0}")]
    InvalidPlacement(&'static str),
    #[error("trap {0} does not exist")]
    NoSuchTrap(usize),
    #[error("qubit {0} is not resting in a trap")]
    NotInTrap(Qubit),
    #[error("capacity deadlock: trap {trap} is full and no ion can be displaced")]
    CapacityDeadlock { trap: usize },
    #[error("routing made no progress on layer {layer}")]
    RoutingStalled { layer: usize },
    #[error("circuit is invalid")]
    InvalidCircuit,
    #[error(transparent)]
    Machine(#[from] MachineError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NoiseError {
    #[error("coherence time must be positive, got {0}")]
    NonPositiveT2(f64),
    #[error("execution time must be non-negative, got {0}")]
    NegativeTime(f64),
    #[error("sequential fidelity is zero")]
    ZeroBaseline,
    #[error("schedule failed replay validation ({} violations)", .0.len())]
    InvalidSchedule(Vec<ScheduleViolation>),
}
