use std::collections::BTreeSet;

use proptest::prelude::*;
use qccd_core::generators::{qaoa_complete, qft, random_parallel};
use qccd_core::{BenchSpec, Circuit, DeviceParams};

fn arb_circuit() -> impl Strategy<Value = Circuit> {
    (2usize..=16).prop_flat_map(|n| {
        let pair = (0..n, 0..n - 1).prop_map(|(a, b)| (a, if b >= a { b + 1 } else { b }));
        prop::collection::vec(pair, 0..80).prop_map(move |pairs| Circuit::new(n, pairs))
    })
}

// Partner lists per qubit, in program order.
fn partners(c: &Circuit) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); c.n_qubits()];
    for (a, b) in c.pairs() {
        out[a].push(b);
        out[b].push(a);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn movement_average_times_depth_is_total(c in arb_circuit()) {
        let s = c.stats();
        let independent: usize = partners(&c)
            .iter()
            .map(|p| p.windows(2).filter(|w| w[0] != w[1]).count())
            .sum();
        prop_assert_eq!(s.total_movements, independent);
        prop_assert_eq!(s.movements.iter().sum::<usize>(), independent);
        let product = s.avg_ion_mov_per_ts * s.depth as f64;
        prop_assert!((product - independent as f64).abs() <= 1e-9 * (independent as f64).max(1.0));
    }

    #[test]
    fn movements_bounded_by_gate_count(c in arb_circuit()) {
        let m = c.partner_change_counts();
        for (q, p) in partners(&c).iter().enumerate() {
            prop_assert!(m[q] <= p.len().saturating_sub(1));
        }
    }

    #[test]
    fn layering_is_disjoint_and_asap(c in arb_circuit()) {
        let l = c.layering();
        let gates = c.gates();
        let mut seen = vec![false; gates.len()];
        for layer in &l.layers {
            let mut used = BTreeSet::new();
            for &gi in layer {
                prop_assert!(!std::mem::replace(&mut seen[gi], true));
                prop_assert!(used.insert(gates[gi].qubit_a));
                prop_assert!(used.insert(gates[gi].qubit_b));
            }
        }
        prop_assert!(seen.iter().all(|&s| s));
        // Earliest layer: one past the latest earlier gate on either qubit.
        for (i, g) in gates.iter().enumerate() {
            let earliest = gates[..i]
                .iter()
                .enumerate()
                .filter(|(_, h)| h.touches(g.qubit_a) || h.touches(g.qubit_b))
                .map(|(j, _)| l.layer_of[j] + 1)
                .max()
                .unwrap_or(0);
            prop_assert_eq!(l.layer_of[i], earliest);
        }
    }

    #[test]
    fn stats_are_deterministic(c in arb_circuit()) {
        prop_assert_eq!(c.stats(), c.clone().stats());
        prop_assert_eq!(c.layering(), c.layering());
    }

    #[test]
    fn random_parallel_layers_are_perfect_matchings(half in 1usize..=20, p in 0.0f64..=100.0, seed: u64) {
        let n = 2 * half;
        let c = random_parallel(&BenchSpec::new(n, p, seed)).unwrap();
        prop_assert_eq!(c.len(), n * n / 2);
        let l = c.layering();
        prop_assert_eq!(l.depth(), n);
        for layer in &l.layers {
            prop_assert_eq!(layer.len(), n / 2);
        }
        prop_assert_eq!(&c, &random_parallel(&BenchSpec::new(n, p, seed)).unwrap());
    }

    #[test]
    fn movement_percentage_monotone_in_p(half in 2usize..=20, seed: u64) {
        let n = 2 * half;
        let measured: Vec<f64> = (0..=10)
            .map(|k| random_parallel(&BenchSpec::new(n, 10.0 * k as f64, seed)).unwrap().stats().movement_percentage)
            .collect();
        prop_assert_eq!(measured[0], 0.0);
        for w in measured.windows(2) {
            prop_assert!(w[0] <= w[1] + 1e-12, "{measured:?}");
        }
    }

    #[test]
    fn gate_error_monotone(l1 in 1usize..60, l2 in 1usize..60, g1 in 0.0f64..1.0, g2 in 0.0f64..1.0, r in 1.0f64..5.0) {
        let p = |gamma| DeviceParams { gamma, swap_error_ratio: r, ..DeviceParams::default() };
        let (lo, hi) = (l1.min(l2), l1.max(l2));
        prop_assert!(p(g1).gate_error(lo) <= p(g1).gate_error(hi));
        prop_assert!(p(g1.min(g2)).gate_error(hi) <= p(g1.max(g2)).gate_error(hi));
        prop_assert!(p(g1).swap_error(l1) >= p(g1).gate_error(l1));
    }
}

#[test]
fn complete_graph_generators() {
    for n in 2..=20 {
        for c in [qft(n).unwrap(), qaoa_complete(n).unwrap()] {
            let edges: BTreeSet<(usize, usize)> = c.gates().iter().map(|g| g.sorted()).collect();
            assert_eq!(edges.len(), c.len());
            assert_eq!(edges.len(), n * (n - 1) / 2);
        }
        assert_eq!(qft(n).unwrap().stats(), qaoa_complete(n).unwrap().stats());
    }
}

#[test]
fn random_parallel_examples() {
    let s = random_parallel(&BenchSpec::new(8, 0.0, 7)).unwrap().stats();
    assert_eq!(s.movement_percentage, 0.0);
    let s = random_parallel(&BenchSpec::new(8, 100.0, 1)).unwrap().stats();
    assert_eq!(s.total_movements, 56);
    assert_eq!(s.avg_ion_mov_per_ts, 7.0);
    let s = random_parallel(&BenchSpec::new(4, 50.0, 0)).unwrap().stats();
    assert!((s.movement_percentage - 50.0).abs() <= 5.0);
}
