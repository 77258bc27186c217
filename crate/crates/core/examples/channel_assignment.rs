//! Channel assignment on a random interference graph: adjacent radios need
//! distinct channels and links of a spanning backbone need channels at least
//! `q` apart. Heuristic mode keeps this fast on larger graphs.
//!
//! `cargo run --example channel_assignment`

use bbt::backbone::{solve, SolveMode};
use bbt::coloring::spread_coloring;
use bbt::graph::{generate, GraphFamily};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = generate(&GraphFamily::Gnp { n: 60, p: 0.15, seed: 11 })?;
    assert!(g.is_connected());
    println!("network: {} radios, {} interfering pairs", g.n(), g.m());

    for q in [2, 3, 5] {
        let result = solve(&g, q, SolveMode::Heuristic)?;
        let naive = spread_coloring(&bbt::coloring::dsatur(&g), q).max_color();
        println!(
            "q={q}: {} channels with a backbone tree (bound {}), spreading every link would need {naive}",
            result.k_achieved, result.k_target
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
