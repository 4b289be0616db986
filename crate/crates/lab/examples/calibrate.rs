//! Prints the movement crossover and trap-sweep summaries for a device
//! config, the quantities the default parameters were tuned against.
//!
//! `cargo run --release -p qccd-lab --example calibrate [-- CONFIG.toml]`

use std::path::PathBuf;

use qccd_lab::config::LabConfig;
use qccd_lab::sweep::{crossover_pct, movement_curve, MovementSweep, TrapSweep};

fn main() -> anyhow::Result<()> {
    let config = match std::env::args().nth(1) {
        Some(path) => LabConfig::load(&PathBuf::from(path))?,
        None => LabConfig::default(),
    };
    let params = config.device;
    println!("{params:?}");

    let sweep = MovementSweep {
        qubits: vec![8, 40],
        t2_ms: vec![params.t2_ms],
        seeds: (0..4).collect(),
        ..MovementSweep::default()
    };
    let rows = sweep.run(&params)?;
    for n in [8, 40] {
        let curve = movement_curve(&rows, n, params.t2_ms, params.swap_error_ratio);
        println!("n={n} crossover={:?}", crossover_pct(&curve));
        for (p, par, seq) in curve {
            println!("  p={p:>5.1} par={par:.5} seq={seq:.5}");
        }
    }

    let (_, summaries) = TrapSweep::default().run(&params)?;
    for s in summaries {
        println!(
            "{:<5} n={:<3} opt={:<3} max={:<5} dF={:>9.3}% F_opt={:.5} F_seq={:.5}",
            s.algorithm,
            s.n_qubits,
            s.opt_traps,
            format!("{:?}", s.max_traps),
            s.delta_f_pct,
            s.fidelity_opt,
            s.fidelity_sequential
        );
    }
    Ok(())
}
