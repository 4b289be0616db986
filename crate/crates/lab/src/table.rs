use serde::Serialize;

use qccd_core::Algorithm;

use crate::LabError;

/// Circuit statistics of one benchmark.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub algorithm: &'static str,
    pub n_qubits: usize,
    pub depth: usize,
    pub gates: usize,
    pub avg_gates_per_ts: f64,
    pub avg_shuttle_per_ts: f64,
}

pub fn bench_table(n_qubits: usize) -> Result<Vec<BenchRow>, LabError> {
    Algorithm::ALL
        .iter()
        .map(|&alg| {
            let s = alg.build(n_qubits)?.stats();
            Ok(BenchRow {
                algorithm: alg.label(),
                n_qubits,
                depth: s.depth,
                gates: s.gate_count,
                avg_gates_per_ts: s.avg_gates_per_ts,
                avg_shuttle_per_ts: s.avg_ion_mov_per_ts,
            })
        })
        .collect()
}

/// Fixed-width text rendering with two decimals.
pub fn render(rows: &[BenchRow]) -> String {
    let mut out = format!("{:<6}{:>7}{:>10}{:>14}{:>16}\n", "bench", "depth", "2q-gates", "av.2q/TS", "av.shuttle/TS");
    for r in rows {
        out.push_str(&format!(
            "{:<6}{:>7}{:>10}{:>14.2}{:>16.2}\n",
            r.algorithm, r.depth, r.gates, r.avg_gates_per_ts, r.avg_shuttle_per_ts
        ));
    }
    out
}
