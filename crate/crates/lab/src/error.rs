use qccd_core::{CompileError, GeneratorError, MachineError, NoiseError, ScheduleViolation};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LabError {
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid circuit: {0}")]
    InvalidCircuit(String),
    #[error("config: {0}")]
    Config(#[from] toml::de::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error(transparent)]
    Machine(#[from] MachineError),
    #[error(transparent)]
    Compile(#[from] CompileError),
    #[error(transparent)]
    Noise(#[from] NoiseError),
    #[error("schedule failed validation: {}", summarize(.0))]
    Validation(Vec<ScheduleViolation>),
    #[error("invalid sweep: {0}")]
    InvalidSweep(String),
}

fn summarize(v: &[ScheduleViolation]) -> String {
    let shown: Vec<String> = v.iter().take(3).map(ToString::to_string).collect();
    let more = v.len().saturating_sub(shown.len());
    if more > 0 {
        format!("{} (+{more} more)", shown.join("; "))
    } else {
        shown.join("; ")
    }
}

impl LabError {
    /// True when the failure is a schedule replay violation.
    pub fn is_validation(&self) -> bool {
        matches!(self, Self::Validation(_) | Self::Noise(NoiseError::InvalidSchedule(_)))
    }
}
