//! `qccd`: generate circuits, compile them for a linear QCCD device,
//! evaluate fidelity and run the movement and trap-count sweeps.
//!
//! Exit status is 0 on success, 3 when a compiled schedule fails replay
//! validation, 2 on usage errors and 1 on anything else.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use qccd_core::generators::random_parallel;
use qccd_core::{
    Algorithm, BenchSpec, Circuit, CoherenceMode, CompileOptions, MoveMode, PlacementKind, RouterKind,
    DEFAULT_LOOKAHEAD,
};
use qccd_lab::config::LabConfig;
use qccd_lab::experiment::{compile_checked, run_one, RunOptions};
use qccd_lab::output::{write_rows, Format};
use qccd_lab::sweep::{MovementSweep, TrapSweep};
use qccd_lab::{circuit_text, dump, table, LabError};

const EXIT_VALIDATION: u8 = 3;

#[derive(Parser)]
#[command(name = "qccd", version, about = "Parallelism versus ion movement on linear QCCD devices")]
struct Cli {
    /// Device and topology TOML; defaults apply to missing keys.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Row format. `bench-table` prints a text table when unset.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a benchmark circuit in the text format.
    Gen(GenArgs),
    /// Compile a circuit and print the schedule dump.
    Compile(CompileArgs),
    /// Compile a circuit and report its fidelity.
    Run(RunArgs),
    /// Parallel versus sequential fidelity over movement percentages.
    SweepMovement(MovementArgs),
    /// Fidelity over trap counts per algorithm, with Opt/Max summaries.
    SweepTraps(TrapArgs),
    /// Depth, gate count and per-timestep averages of the four algorithms.
    BenchTable {
        #[arg(default_value_t = 40)]
        qubits: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Random,
    Qft,
    Qaoa,
    Draper,
    Cuccaro,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    qubits: usize,
    /// Only for `random`.
    #[arg(long, default_value_t = 0.0)]
    movement_pct: f64,
    /// Only for `random`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct CircuitSource {
    /// Circuit text file, `-` for stdin. Without it the circuit is
    /// generated from `--kind` and `--qubits`.
    #[arg(long, conflicts_with = "kind")]
    circuit: Option<PathBuf>,
    #[arg(long, value_enum, requires = "qubits")]
    kind: Option<Kind>,
    #[arg(long)]
    qubits: Option<usize>,
    #[arg(long, default_value_t = 0.0)]
    movement_pct: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouterArg {
    Naive,
    Greedy,
}

#[derive(Clone, Copy, ValueEnum)]
enum PlacementArg {
    Sta,
    Paired,
}

#[derive(Clone, Copy, ValueEnum)]
enum MoveModeArg {
    Overlap,
    Serialize,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoherenceArg {
    Global,
    PerQubitIdle,
}

#[derive(Args)]
struct CompileFlags {
    #[arg(long, value_enum, default_value = "greedy")]
    router: RouterArg,
    #[arg(long, value_enum, default_value = "sta")]
    placement: PlacementArg,
    #[arg(long, default_value_t = DEFAULT_LOOKAHEAD)]
    lookahead: usize,
    #[arg(long, value_enum, default_value = "overlap")]
    move_mode: MoveModeArg,
    /// Overrides the config file; one trap when neither sets it.
    #[arg(long)]
    traps: Option<usize>,
    /// Overrides the config file; defaults to ceil(n / traps) + 1.
    #[arg(long)]
    capacity: Option<usize>,
}

#[derive(Args)]
struct CompileArgs {
    #[command(flatten)]
    source: CircuitSource,
    #[command(flatten)]
    flags: CompileFlags,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    source: CircuitSource,
    #[command(flatten)]
    flags: CompileFlags,
    #[arg(long, value_enum, default_value = "global")]
    coherence: CoherenceArg,
}

#[derive(Args)]
struct MovementArgs {
    #[arg(long, value_delimiter = ',', default_value = "40")]
    qubits: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "0,10,20,30,40,50,60,70,80,90,100")]
    movement_pcts: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_value = "200,400,600,800,1000")]
    t2_ms: Vec<f64>,
    /// Defaults to the device's ratio.
    #[arg(long, value_delimiter = ',')]
    swap_ratios: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',', default_value = "0")]
    seeds: Vec<u64>,
    #[arg(long, value_enum, default_value = "overlap")]
    move_mode: MoveModeArg,
    #[arg(long, value_enum, default_value = "global")]
    coherence: CoherenceArg,
}

#[derive(Args)]
struct TrapArgs {
    /// Labels: CA, DA, QAOA, QFT.
    #[arg(long, value_delimiter = ',', default_value = "CA,DA,QAOA,QFT")]
    algorithms: Vec<String>,
    #[arg(long, value_delimiter = ',', default_value = "20,40,50")]
    qubits: Vec<usize>,
    /// Trap counts; defaults to 2..=n/2 per qubit count.
    #[arg(long, value_delimiter = ',')]
    traps: Option<Vec<usize>>,
    #[arg(long, value_enum, default_value = "greedy")]
    router: RouterArg,
    #[arg(long, value_enum, default_value = "sta")]
    placement: PlacementArg,
    #[arg(long, default_value_t = DEFAULT_LOOKAHEAD)]
    lookahead: usize,
    #[arg(long, value_enum, default_value = "overlap")]
    move_mode: MoveModeArg,
    #[arg(long, value_enum, default_value = "global")]
    coherence: CoherenceArg,
    /// Summary file; without it the summary goes to stderr.
    #[arg(long)]
    summary: Option<PathBuf>,
}

impl From<RouterArg> for RouterKind {
    fn from(r: RouterArg) -> Self {
        match r {
            RouterArg::Naive => Self::Naive,
            RouterArg::Greedy => Self::Greedy,
        }
    }
}

impl From<PlacementArg> for PlacementKind {
    fn from(p: PlacementArg) -> Self {
        match p {
            PlacementArg::Sta => Self::Sta,
            PlacementArg::Paired => Self::Paired,
        }
    }
}

impl From<MoveModeArg> for MoveMode {
    fn from(m: MoveModeArg) -> Self {
        match m {
            MoveModeArg::Overlap => Self::Overlap,
            MoveModeArg::Serialize => Self::Serialize,
        }
    }
}

impl From<CoherenceArg> for CoherenceMode {
    fn from(c: CoherenceArg) -> Self {
        match c {
            CoherenceArg::Global => Self::Global,
            CoherenceArg::PerQubitIdle => Self::PerQubitIdle,
        }
    }
}

impl CompileFlags {
    fn options(&self) -> CompileOptions {
        CompileOptions {
            router: self.router.into(),
            placement: self.placement.into(),
            lookahead: self.lookahead,
            move_mode: self.move_mode.into(),
        }
    }
}

fn generate(kind: Kind, qubits: usize, movement_pct: f64, seed: u64) -> Result<Circuit, LabError> {
    Ok(match kind {
        Kind::Random => random_parallel(&BenchSpec::new(qubits, movement_pct, seed))?,
        Kind::Qft => Algorithm::Qft.build(qubits)?,
        Kind::Qaoa => Algorithm::Qaoa.build(qubits)?,
        Kind::Draper => Algorithm::Draper.build(qubits)?,
        Kind::Cuccaro => Algorithm::Cuccaro.build(qubits)?,
    })
}

impl CircuitSource {
    fn load(&self) -> anyhow::Result<Circuit> {
        match (&self.circuit, self.kind, self.qubits) {
            (Some(path), _, _) => {
                let text = if path.as_os_str() == "-" {
                    let mut s = String::new();
                    io::stdin().read_to_string(&mut s)?;
                    s
                } else {
                    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
                };
                Ok(circuit_text::parse(&text)?)
            }
            (None, Some(kind), Some(n)) => Ok(generate(kind, n, self.movement_pct, self.seed)?),
            _ => bail!("give --circuit, or --kind with --qubits"),
        }
    }
}

fn sink(out: Option<&Path>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(io::BufWriter::new(
            fs::File::create(path).with_context(|| format!("creating {}", path.display()))?,
        )),
        None => Box::new(io::stdout().lock()),
    })
}

fn run(cli: Cli) -> anyhow::Result<()> {
    let config = match &cli.config {
        Some(path) => LabConfig::load(path).with_context(|| format!("loading {}", path.display()))?,
        None => LabConfig::default(),
    };
    let params = config.device;
    let format = cli.format.unwrap_or_default();
    let mut out = sink(cli.out.as_deref())?;
    match cli.command {
        Command::Gen(a) => {
            let c = generate(a.kind, a.qubits, a.movement_pct, a.seed)?;
            out.write_all(circuit_text::write(&c).as_bytes())?;
        }
        Command::Compile(a) => {
            let c = a.source.load()?;
            let topology = config.topology.resolve(c.n_qubits(), a.flags.traps, a.flags.capacity)?;
            let schedule = compile_checked(&c, &topology, &params, &a.flags.options())?;
            out.write_all(dump::schedule_dump(&schedule).as_bytes())?;
        }
        Command::Run(a) => {
            let c = a.source.load()?;
            let topology = config.topology.resolve(c.n_qubits(), a.flags.traps, a.flags.capacity)?;
            let options = RunOptions { compile: a.flags.options(), coherence: a.coherence.into() };
            let (_, report) = run_one(&c, &topology, &params, &options)?;
            write_rows(&[report], format, &mut out)?;
        }
        Command::SweepMovement(a) => {
            let sweep = MovementSweep {
                qubits: a.qubits,
                movement_pcts: a.movement_pcts,
                t2_ms: a.t2_ms,
                swap_ratios: a.swap_ratios.unwrap_or_else(|| vec![params.swap_error_ratio]),
                seeds: a.seeds,
                move_mode: a.move_mode.into(),
                coherence: a.coherence.into(),
            };
            write_rows(&sweep.run(&params)?, format, &mut out)?;
        }
        Command::SweepTraps(a) => {
            let algorithms = a
                .algorithms
                .iter()
                .map(|s| Algorithm::from_label(s).with_context(|| format!("unknown algorithm {s:?}")))
                .collect::<anyhow::Result<Vec<_>>>()?;
            let sweep = TrapSweep {
                algorithms,
                qubits: a.qubits,
                traps: a.traps,
                router: a.router.into(),
                placement: a.placement.into(),
                lookahead: a.lookahead,
                move_mode: a.move_mode.into(),
                coherence: a.coherence.into(),
            };
            let (rows, summaries) = sweep.run(&params)?;
            write_rows(&rows, format, &mut out)?;
            match &a.summary {
                Some(path) => write_rows(&summaries, format, sink(Some(path))?)?,
                None => write_rows(&summaries, format, io::stderr().lock())?,
            }
        }
        Command::BenchTable { qubits } => {
            let rows = table::bench_table(qubits)?;
            match cli.format {
                Some(f) => write_rows(&rows, f, &mut out)?,
                None => out.write_all(table::render(&rows).as_bytes())?,
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            let validation = e.downcast_ref::<LabError>().is_some_and(LabError::is_validation);
            ExitCode::from(if validation { EXIT_VALIDATION } else { 1 })
        }
    }
}
