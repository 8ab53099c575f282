//! Empirical scaling of a sequential solve on one random polygon per size.
//! Prints a markdown table; pass sizes as arguments to override the default
//! sweep.

use cag_core::corpus::{random_simple_polygon, rng};
use cag_core::solver::{solve, SolverConfig};

fn main() {
    let sizes: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|s| s.parse().ok())
        .collect();
    let sizes = if sizes.is_empty() {
        vec![16, 32, 64, 128, 256]
    } else {
        sizes
    };
    println!("| n | k | inside arrangement | guard set | start set | structures | greedy |");
    println!("|---|---|---|---|---|---|---|");
    for n in sizes {
        let p = random_simple_polygon(&mut rng(n as u64), n, 4 * n as i64);
        let out = solve(
            &p,
            &SolverConfig {
                parallelism: 1,
                paranoid: false,
            },
        )
        .expect("solve succeeds");
        let s = out.sizes.unwrap_or_default();
        println!(
            "| {n} | {} | {} | {} | {} | {:.2} s | {:.2} s |",
            out.solution.len(),
            s.arrangement_inside,
            s.guard_set,
            s.start_set,
            out.timings.structures.as_secs_f64(),
            out.timings.greedy.as_secs_f64()
        );
    }
}
