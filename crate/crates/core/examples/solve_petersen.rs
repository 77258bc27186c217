//! Solve the Petersen graph for several separations and print the result.
//!
//! `cargo run --example solve_petersen`

use bbt::backbone::{solve, target_k, SolveMode};
use bbt::graph::{generate, GraphFamily};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = generate(&GraphFamily::Petersen)?;
    for q in 1..=4 {
        let result = solve(&g, q, SolveMode::Exact)?;
        assert_eq!(result.k_achieved, target_k(result.t, q));
        println!(
            "q={q}: chi={} k={} after {} Kempe swap(s)",
            result.t, result.k_achieved, result.iterations
        );
        println!("  colors {:?}", result.coloring.colors());
        println!("  tree   {:?}", result.tree.as_slice());
    }
    let json = solve(&g, 3, SolveMode::Exact)?.to_solution(false).to_json();
    println!("{json}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
