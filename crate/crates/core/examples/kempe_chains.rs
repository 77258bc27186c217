//! Kempe chains on a small path: find a two-colored component and swap it.
//!
//! `cargo run --example kempe_chains`

use bbt::coloring::{is_proper, kempe_component, kempe_swap, Coloring};
use bbt::graph::{generate, GraphFamily};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = generate(&GraphFamily::Path(6))?;
    let c = Coloring::new(vec![1, 2, 1, 3, 1, 2], 3)?;
    println!("coloring      {:?}", c.colors());

    let chain = kempe_component(&g, &c, 0, 2)?;
    println!("1/2 chain of 0 {:?}", chain.to_vec());

    let swapped = kempe_swap(&g, &c, &chain, 1, 2)?;
    println!("after swap    {:?}", swapped.colors());
    assert!(is_proper(&g, &swapped)?);

    let restored = kempe_swap(&g, &swapped, &chain, 1, 2)?;
    assert_eq!(restored, c);

    // a set that is not a whole chain is rejected
    let partial = bbt::VertexSet::from_vertices(6, [0]);
    println!("partial chain -> {}", kempe_swap(&g, &c, &partial, 1, 2).unwrap_err());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
