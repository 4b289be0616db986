//! Line-oriented schedule dump for diffing and golden files.
//!
//! ```text
//! traps 2 capacity 3 router naive makespan_ns 200000
//! split 1 - trap:0 0 80000
//! gate 0 1 trap:1 100000 100000
//! ```
//!
//! Events appear in planning order, as
//! `kind ion other|- resource start_ns duration_ns`.

use std::fmt::Write as _;

use qccd_core::Schedule;

pub fn schedule_dump(schedule: &Schedule) -> String {
    let mut out = format!(
        "traps {} capacity {} router {} makespan_ns {}\n",
        schedule.topology.n_traps(),
        schedule.topology.capacity(),
        schedule.router,
        schedule.makespan
    );
    for e in &schedule.events {
        let other = e.other.map_or_else(|| "-".to_owned(), |o| o.to_string());
        writeln!(out, "{} {} {} {} {} {}", e.kind, e.ion, other, e.resource, e.start, e.duration)
            .expect("writing to a String cannot fail");
    }
    out
}
