// 0-1 breadth-first search over chain configurations in which every ion
// may move. Ions other than the target are indistinguishable. Swaps and
// hops cost one, splits and merges nothing; at most two ions are in
// transit at once, which plan_move never exceeds.

use std::collections::VecDeque;

use rustc_hash::FxHashMap;
use qccd_core::{plan_move, EventKind, MachineState, Placement, Topology};

const TARGET: u8 = 1;
const OTHER: u8 = 0;

const MAX_TRAPS: usize = 4;
const MAX_CAP: usize = 3;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
enum Transit {
    /// Split from `trap`; `dir` is -1, +1, or 0 when both ways are open.
    Departing { ion: u8, trap: u8, dir: i8 },
    Arriving { ion: u8, trap: u8, from_left: bool },
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
struct Config {
    lens: [u8; MAX_TRAPS],
    chains: [[u8; MAX_CAP]; MAX_TRAPS],
    /// Sorted, `None` last.
    transit: [Option<Transit>; 2],
}

impl Config {
    fn new(marks: &[Vec<u8>]) -> Self {
        let mut c = Config { lens: [0; MAX_TRAPS], chains: [[OTHER; MAX_CAP]; MAX_TRAPS], transit: [None; 2] };
        for (t, m) in marks.iter().enumerate() {
            c.lens[t] = m.len() as u8;
            c.chains[t][..m.len()].copy_from_slice(m);
        }
        c
    }

    fn chain(&self, t: usize) -> &[u8] {
        &self.chains[t][..self.lens[t] as usize]
    }

    fn remove(&mut self, t: usize, pos: usize) -> u8 {
        let len = self.lens[t] as usize;
        let ion = self.chains[t][pos];
        self.chains[t].copy_within(pos + 1..len, pos);
        self.lens[t] -= 1;
        ion
    }

    fn insert(&mut self, t: usize, pos: usize, ion: u8) {
        let len = self.lens[t] as usize;
        self.chains[t].copy_within(pos..len, pos + 1);
        self.chains[t][pos] = ion;
        self.lens[t] += 1;
    }

    fn n_transit(&self) -> usize {
        self.transit.iter().flatten().count()
    }

    fn set_transit(&mut self, k: usize, tr: Option<Transit>) {
        self.transit[k] = tr;
        // `None` sorts first for Option; put it last instead.
        self.transit.sort_by_key(|t| (t.is_none(), *t));
    }
}

fn neighbours(c: &Config, n_traps: usize, cap: usize, out: &mut Vec<(Config, u32)>) {
    out.clear();
    for t in 0..n_traps {
        let chain = c.chain(t);
        for i in 0..chain.len().saturating_sub(1) {
            if chain[i] != chain[i + 1] {
                let mut next = *c;
                next.chains[t].swap(i, i + 1);
                out.push((next, 1));
            }
        }
        if c.n_transit() < 2 && !chain.is_empty() {
            let last = chain.len() - 1;
            let ends: &[(usize, i8)] = if last == 0 { &[(0, 0)] } else { &[(0, -1), (last, 1)] };
            for &(pos, dir) in ends {
                let mut next = *c;
                let ion = next.remove(t, pos);
                let free = next.n_transit();
                next.set_transit(free, Some(Transit::Departing { ion, trap: t as u8, dir }));
                out.push((next, 0));
            }
        }
    }
    for (k, tr) in c.transit.iter().enumerate() {
        match *tr {
            Some(Transit::Departing { ion, trap, dir }) => {
                for step in [-1i8, 1] {
                    if dir != 0 && dir != step {
                        continue;
                    }
                    let to = trap as i64 + step as i64;
                    if to < 0 || to >= n_traps as i64 {
                        continue;
                    }
                    let mut next = *c;
                    next.set_transit(k, Some(Transit::Arriving { ion, trap: to as u8, from_left: step == 1 }));
                    out.push((next, 1));
                }
            }
            Some(Transit::Arriving { ion, trap, from_left }) => {
                let t = trap as usize;
                if (c.lens[t] as usize) < cap {
                    let mut next = *c;
                    next.set_transit(k, None);
                    let pos = if from_left { 0 } else { next.lens[t] as usize };
                    next.insert(t, pos, ion);
                    out.push((next, 0));
                }
            }
            None => {}
        }
    }
}

fn bfs_cost(start: Config, n_traps: usize, dest: usize, cap: usize) -> u32 {
    let mut dist: FxHashMap<Config, u32> = FxHashMap::default();
    let mut queue = VecDeque::new();
    let mut buf = Vec::new();
    dist.insert(start, 0);
    queue.push_back((start, 0));
    while let Some((c, d)) = queue.pop_front() {
        if dist[&c] < d {
            continue;
        }
        if c.n_transit() == 0 && c.chain(dest).contains(&TARGET) {
            return d;
        }
        neighbours(&c, n_traps, cap, &mut buf);
        for &(next, w) in &buf {
            let nd = d + w;
            if dist.get(&next).is_none_or(|&old| nd < old) {
                dist.insert(next, nd);
                if w == 0 {
                    queue.push_front((next, nd));
                } else {
                    queue.push_back((next, nd));
                }
            }
        }
    }
    unreachable!("a linear topology with a free slot always admits a relocation")
}

fn occupancies(n_traps: usize, cap: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n_traps {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                (0..=cap).map(move |o| {
                    let mut v = prefix.clone();
                    v.push(o);
                    v
                })
            })
            .collect();
    }
    out
}

/// Relocations checked, or the first configuration where `plan_move`
/// is not optimal.
pub fn check_all_relocations() -> Result<usize, String> {
    let mut checked = 0usize;
    for n_traps in 2..=MAX_TRAPS {
        for cap in 2..=MAX_CAP {
            let topo = Topology::linear(n_traps, cap).unwrap();
            for occ in occupancies(n_traps, cap) {
                for src in 0..n_traps {
                    for pos in 0..occ[src] {
                        for dest in (0..n_traps).filter(|&d| d != src) {
                            // Label ions 0.. left to right; the target is ion `q`.
                            let mut next_id = 0;
                            let mut chains = Vec::new();
                            let mut q = 0;
                            let mut marks = Vec::new();
                            for (t, &o) in occ.iter().enumerate() {
                                let mut chain = Vec::new();
                                let mut mark = Vec::new();
                                for p in 0..o {
                                    if t == src && p == pos {
                                        q = next_id;
                                        mark.push(TARGET);
                                    } else {
                                        mark.push(OTHER);
                                    }
                                    chain.push(next_id);
                                    next_id += 1;
                                }
                                chains.push(chain);
                                marks.push(mark);
                            }
                            let here = format!("traps={n_traps} cap={cap} occ={occ:?} src={src} pos={pos} dest={dest}");
                            let placement = Placement::from_chains(next_id, &chains).unwrap();
                            let mut state = MachineState::new(&placement, &topo);
                            let prims = plan_move(&mut state, q, dest, &[]).map_err(|e| format!("{here}: {e}"))?;
                            if state.trap_of(q) != Some(dest) {
                                return Err(format!("{here}: ion did not arrive"));
                            }
                            let cost = prims
                                .iter()
                                .filter(|p| matches!(p.kind, EventKind::Swap | EventKind::Hop))
                                .count() as u32;
                            let best = bfs_cost(Config::new(&marks), n_traps, dest, cap);
                            if cost != best {
                                return Err(format!("{here}: {cost} swaps+hops, optimum {best}"));
                            }
                            checked += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(checked)
}
