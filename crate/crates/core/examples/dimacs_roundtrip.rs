//! Read a DIMACS graph, solve it and write it back.
//!
//! `cargo run --example dimacs_roundtrip`

use bbt::backbone::{solve, SolveMode};
use bbt::graph::{parse_dimacs, write_dimacs};

const OCTAHEDRON: &str = "c octahedron\np edge 6 12\n\
e 1 2\ne 1 3\ne 1 4\ne 1 5\ne 2 3\ne 2 4\ne 2 6\ne 3 5\ne 3 6\ne 4 5\ne 4 6\ne 5 6\n";

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = parse_dimacs(OCTAHEDRON.as_bytes())?;
    println!("read {} vertices, {} edges", g.n(), g.m());
    let written = write_dimacs(&g);
    assert_eq!(parse_dimacs(written.as_bytes())?, g);
    print!("{written}");

    let result = solve(&g, 2, SolveMode::Exact)?;
    println!("q=2 backbone coloring uses {} colors", result.k_achieved);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
