//! Compare the solver with brute force over every spanning tree.
//!
//! `cargo run --example oracle_cross_check`

use bbt::backbone::{solve, SolveMode};
use bbt::graph::{generate, GraphFamily};
use bbt::oracle::{best_tree_exact, enumerate_spanning_trees, DEFAULT_TREE_CAP};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let corpus = [
        ("C5", GraphFamily::Cycle(5)),
        ("K4", GraphFamily::Complete(4)),
        ("W5", GraphFamily::Wheel(5)),
        ("K2,3", GraphFamily::CompleteBipartite(2, 3)),
    ];
    for (name, family) in corpus {
        let g = generate(&family)?;
        let trees = enumerate_spanning_trees(&g, DEFAULT_TREE_CAP)?.len();
        for q in 1..=3 {
            let solved = solve(&g, q, SolveMode::Exact)?;
            let best = best_tree_exact(&g, q, DEFAULT_TREE_CAP)?;
            println!(
                "{name:5} q={q} solver={} oracle={} ({} of {trees} trees searched)",
                solved.k_achieved, best.value, best.trees_examined
            );
            assert_eq!(solved.k_achieved, best.value);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
