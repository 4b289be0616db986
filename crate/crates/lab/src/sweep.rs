//! Movement and trap-count sweeps.
//!
//! Points run in parallel; rows always come out in grid order.

use rayon::prelude::*;
use serde::Serialize;

use qccd_core::generators::random_parallel;
use qccd_core::{
    delta_f, schedule_fidelity, Algorithm, BenchSpec, Circuit, CoherenceMode, CompileOptions, DeviceParams,
    FidelityReport, MoveMode, PlacementKind, RouterKind, Schedule, Topology, DEFAULT_LOOKAHEAD,
};

use crate::experiment::{compile_checked, run_one, run_sequential, RunOptions};
use crate::LabError;

pub const PARALLEL: &str = "parallel";
pub const SEQUENTIAL: &str = "sequential";

/// Random parallel circuits against the single-trap baseline.
///
/// The parallel device has `n / 2` traps of capacity 3 with one
/// interacting pair per trap, routed layer by layer. The baseline runs the
/// same circuit in one trap of capacity `n + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct MovementSweep {
    pub qubits: Vec<usize>,
    pub movement_pcts: Vec<f64>,
    pub t2_ms: Vec<f64>,
    pub swap_ratios: Vec<f64>,
    pub seeds: Vec<u64>,
    pub move_mode: MoveMode,
    pub coherence: CoherenceMode,
}

impl Default for MovementSweep {
    fn default() -> Self {
        Self {
            qubits: vec![40],
            movement_pcts: (0..=10).map(|k| 10.0 * f64::from(k)).collect(),
            t2_ms: vec![200.0, 400.0, 600.0, 800.0, 1000.0],
            swap_ratios: vec![1.0],
            seeds: vec![0],
            move_mode: MoveMode::Overlap,
            coherence: CoherenceMode::Global,
        }
    }
}

/// One CSV row of a movement sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MovementRow {
    pub n_qubits: usize,
    pub movement_pct: f64,
    pub t2_ms: f64,
    pub swap_error_ratio: f64,
    pub seed: u64,
    pub execution: &'static str,
    pub n_traps: usize,
    pub capacity: usize,
    pub fidelity: f64,
    pub coherence: f64,
    pub exec_time_us: f64,
    pub swap_count: usize,
    pub hop_count: usize,
    pub split_count: usize,
    pub merge_count: usize,
}

impl MovementSweep {
    pub fn check(&self) -> Result<(), LabError> {
        let fail = |m: &str| Err(LabError::InvalidSweep(m.to_owned()));
        if self.qubits.is_empty()
            || self.movement_pcts.is_empty()
            || self.t2_ms.is_empty()
            || self.swap_ratios.is_empty()
            || self.seeds.is_empty()
        {
            return fail("every grid needs at least one value");
        }
        if self.qubits.iter().any(|&n| n < 2 || n % 2 != 0) {
            return fail("qubit counts must be even and at least 2");
        }
        if self.movement_pcts.iter().any(|p| !(0.0..=100.0).contains(p)) {
            return fail("movement percentages must lie in [0, 100]");
        }
        if self.t2_ms.iter().any(|&t| !(t > 0.0)) {
            return fail("T2 values must be positive");
        }
        if self.swap_ratios.iter().any(|&r| !(r >= 1.0)) {
            return fail("swap error ratios must be at least 1");
        }
        Ok(())
    }

    /// Topology of the parallel configuration for `n` qubits.
    pub fn parallel_topology(n: usize) -> Result<Topology, LabError> {
        Ok(Topology::linear((n / 2).max(1), 3)?)
    }

    pub fn run(&self, params: &DeviceParams) -> Result<Vec<MovementRow>, LabError> {
        self.check()?;
        params.check()?;
        let points: Vec<(usize, f64, u64)> = self
            .qubits
            .iter()
            .flat_map(|&n| {
                self.movement_pcts
                    .iter()
                    .flat_map(move |&p| self.seeds.iter().map(move |&s| (n, p, s)))
            })
            .collect();
        let blocks: Vec<Vec<MovementRow>> = points
            .par_iter()
            .map(|&(n, p, seed)| self.run_point(params, n, p, seed))
            .collect::<Result<_, _>>()?;
        Ok(blocks.into_iter().flatten().collect())
    }

    fn run_point(&self, params: &DeviceParams, n: usize, p: f64, seed: u64) -> Result<Vec<MovementRow>, LabError> {
        let circuit = random_parallel(&BenchSpec::new(n, p, seed))?;
        let parallel_topo = Self::parallel_topology(n)?;
        let options = CompileOptions {
            router: RouterKind::Naive,
            placement: PlacementKind::Paired,
            lookahead: DEFAULT_LOOKAHEAD,
            move_mode: self.move_mode,
        };
        let parallel = compile_checked(&circuit, &parallel_topo, params, &options)?;
        let sequential = compile_checked(
            &circuit,
            &Topology::single_trap(n),
            params,
            &CompileOptions { router: RouterKind::Greedy, ..CompileOptions::default() },
        )?;
        let mut rows = Vec::new();
        for &t2_ms in &self.t2_ms {
            for &r in &self.swap_ratios {
                let point = DeviceParams { t2_ms, swap_error_ratio: r, ..*params };
                for (execution, schedule) in [(PARALLEL, &parallel), (SEQUENTIAL, &sequential)] {
                    let report = schedule_fidelity(schedule, &circuit, &point, self.coherence)?;
                    rows.push(MovementRow {
                        n_qubits: n,
                        movement_pct: p,
                        t2_ms,
                        swap_error_ratio: r,
                        seed,
                        execution,
                        n_traps: report.n_traps,
                        capacity: report.capacity,
                        fidelity: report.fidelity,
                        coherence: report.coherence,
                        exec_time_us: report.exec_time_us,
                        swap_count: report.swaps,
                        hop_count: report.hops,
                        split_count: report.splits,
                        merge_count: report.merges,
                    });
                }
            }
        }
        Ok(rows)
    }
}

/// Seed-averaged fidelities `(p, parallel, sequential)` for one
/// `(n, T2, r)` slice of a movement sweep, in ascending `p`.
pub fn movement_curve(rows: &[MovementRow], n: usize, t2_ms: f64, r: f64) -> Vec<(f64, f64, f64)> {
    let mut pcts: Vec<f64> = rows.iter().map(|row| row.movement_pct).collect();
    pcts.sort_by(f64::total_cmp);
    pcts.dedup();
    let mean = |p: f64, execution: &str| {
        let v: Vec<f64> = rows
            .iter()
            .filter(|row| {
                row.n_qubits == n
                    && row.movement_pct == p
                    && row.t2_ms == t2_ms
                    && row.swap_error_ratio == r
                    && row.execution == execution
            })
            .map(|row| row.fidelity)
            .collect();
        (!v.is_empty()).then(|| v.iter().sum::<f64>() / v.len() as f64)
    };
    pcts.into_iter()
        .filter_map(|p| Some((p, mean(p, PARALLEL)?, mean(p, SEQUENTIAL)?)))
        .collect()
}

/// Largest movement percentage at which the parallel device beats the
/// sequential baseline.
pub fn crossover_pct(curve: &[(f64, f64, f64)]) -> Option<f64> {
    curve.iter().filter(|(_, par, seq)| par > seq).map(|&(p, _, _)| p).reduce(f64::max)
}

/// Structured algorithms over a range of trap counts. Each trap count `k`
/// gets capacity `ceil(n / k) + 1`, so the physical slot count tracks the
/// qubit count.
#[derive(Debug, Clone, PartialEq)]
pub struct TrapSweep {
    pub algorithms: Vec<Algorithm>,
    pub qubits: Vec<usize>,
    /// `None` means `2..=n/2` for each qubit count.
    pub traps: Option<Vec<usize>>,
    pub router: RouterKind,
    pub placement: PlacementKind,
    pub lookahead: usize,
    pub move_mode: MoveMode,
    pub coherence: CoherenceMode,
}

impl Default for TrapSweep {
    fn default() -> Self {
        Self {
            algorithms: Algorithm::ALL.to_vec(),
            qubits: vec![20, 40, 50],
            traps: None,
            router: RouterKind::Greedy,
            placement: PlacementKind::Sta,
            lookahead: DEFAULT_LOOKAHEAD,
            move_mode: MoveMode::Overlap,
            coherence: CoherenceMode::Global,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrapRow {
    pub algorithm: &'static str,
    pub n_qubits: usize,
    pub execution: &'static str,
    pub n_traps: usize,
    pub capacity: usize,
    pub fidelity: f64,
    pub coherence: f64,
    pub raw_fidelity: f64,
    pub exec_time_us: f64,
    pub gates: usize,
    pub swaps: usize,
    pub splits: usize,
    pub hops: usize,
    pub merges: usize,
}

impl TrapRow {
    fn new(algorithm: Algorithm, n: usize, execution: &'static str, r: &FidelityReport) -> Self {
        Self {
            algorithm: algorithm.label(),
            n_qubits: n,
            execution,
            n_traps: r.n_traps,
            capacity: r.capacity,
            fidelity: r.fidelity,
            coherence: r.coherence,
            raw_fidelity: r.raw_fidelity,
            exec_time_us: r.exec_time_us,
            gates: r.gates,
            swaps: r.swaps,
            splits: r.splits,
            hops: r.hops,
            merges: r.merges,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrapSummary {
    pub algorithm: &'static str,
    pub n_qubits: usize,
    /// Trap count with the highest fidelity; ties go to fewer traps.
    pub opt_traps: usize,
    /// Largest trap count that still beats the sequential baseline.
    pub max_traps: Option<usize>,
    pub fidelity_opt: f64,
    pub fidelity_sequential: f64,
    /// Gain at `opt_traps` over the baseline, in percent.
    pub delta_f_pct: f64,
}

impl TrapSweep {
    pub fn trap_grid(&self, n: usize) -> Vec<usize> {
        match &self.traps {
            Some(grid) => grid.clone(),
            None => (2..=n / 2).collect(),
        }
    }

    pub fn check(&self) -> Result<(), LabError> {
        let fail = |m: String| Err(LabError::InvalidSweep(m));
        if self.algorithms.is_empty() || self.qubits.is_empty() {
            return fail("algorithm and qubit lists need at least one value".into());
        }
        for &n in &self.qubits {
            let grid = self.trap_grid(n);
            if grid.is_empty() {
                return fail(format!("empty trap grid for {n} qubits"));
            }
            if let Some(&k) = grid.iter().find(|&&k| k == 0 || k > n) {
                return fail(format!("trap count {k} out of range for {n} qubits"));
            }
        }
        Ok(())
    }

    pub fn run(&self, params: &DeviceParams) -> Result<(Vec<TrapRow>, Vec<TrapSummary>), LabError> {
        self.check()?;
        params.check()?;
        let cases: Vec<(Algorithm, usize)> = self
            .algorithms
            .iter()
            .flat_map(|&a| self.qubits.iter().map(move |&n| (a, n)))
            .collect();
        let circuits: Vec<Circuit> = cases
            .iter()
            .map(|&(a, n)| a.build(n))
            .collect::<Result<_, _>>()?;
        // Point 0 of each case is the sequential baseline.
        let points: Vec<(usize, Option<usize>)> = cases
            .iter()
            .enumerate()
            .flat_map(|(ci, &(_, n))| {
                std::iter::once((ci, None)).chain(self.trap_grid(n).into_iter().map(move |k| (ci, Some(k))))
            })
            .collect();
        let options = RunOptions {
            compile: CompileOptions {
                router: self.router,
                placement: self.placement,
                lookahead: self.lookahead,
                move_mode: self.move_mode,
            },
            coherence: self.coherence,
        };
        let reports: Vec<(usize, Option<usize>, FidelityReport)> = points
            .par_iter()
            .map(|&(ci, k)| {
                let c = &circuits[ci];
                let (_, report): (Schedule, FidelityReport) = match k {
                    None => run_sequential(c, params, self.coherence)?,
                    Some(k) => run_one(c, &Topology::sized_for(c.n_qubits(), k)?, params, &options)?,
                };
                Ok((ci, k, report))
            })
            .collect::<Result<_, LabError>>()?;

        let mut rows = Vec::with_capacity(reports.len());
        let mut summaries = Vec::with_capacity(cases.len());
        for (ci, &(alg, n)) in cases.iter().enumerate() {
            let case: Vec<&(usize, Option<usize>, FidelityReport)> =
                reports.iter().filter(|(c, _, _)| *c == ci).collect();
            let seq = &case[0].2;
            rows.push(TrapRow::new(alg, n, SEQUENTIAL, seq));
            let mut best: Option<(usize, f64)> = None;
            let mut max_traps = None;
            for (_, k, report) in &case[1..] {
                let k = k.expect("parallel point");
                rows.push(TrapRow::new(alg, n, PARALLEL, report));
                if best.is_none_or(|(bk, f)| report.fidelity > f || (report.fidelity == f && k < bk)) {
                    best = Some((k, report.fidelity));
                }
                if report.fidelity > seq.fidelity && max_traps.is_none_or(|m| k > m) {
                    max_traps = Some(k);
                }
            }
            let (opt_traps, fidelity_opt) = best.expect("trap grid is non-empty");
            summaries.push(TrapSummary {
                algorithm: alg.label(),
                n_qubits: n,
                opt_traps,
                max_traps,
                fidelity_opt,
                fidelity_sequential: seq.fidelity,
                delta_f_pct: delta_f(fidelity_opt, seq.fidelity)?,
            });
        }
        Ok((rows, summaries))
    }
}
