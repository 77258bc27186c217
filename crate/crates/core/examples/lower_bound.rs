//! The lower bound holds for any backbone without isolated vertices, not
//! only spanning trees. Here a 5-cycle is checked against an edge cover, a
//! Hamiltonian path and the full edge set.
//!
//! `cargo run --example lower_bound`

use bbt::backbone::target_k;
use bbt::graph::{generate, EdgeSet, GraphFamily};
use bbt::oracle::{bbc_exact, chromatic_number, BackboneInstance};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = generate(&GraphFamily::Cycle(5))?;
    let chi = chromatic_number(&g)?.value;
    let backbones = [
        ("cover", EdgeSet::from_pairs([(0, 1), (2, 3), (3, 4)])),
        ("path", EdgeSet::from_pairs([(0, 1), (1, 2), (2, 3), (3, 4)])),
        ("all", g.edge_set()),
    ];
    for q in 1..=3 {
        for (name, h) in &backbones {
            let inst = BackboneInstance::new(g.clone(), h.clone())?;
            let bbc = bbc_exact(&inst, q)?;
            println!(
                "q={q} {name:5} BBC={} >= {} witness {:?}",
                bbc.value,
                target_k(chi, q),
                bbc.witness.colors()
            );
            assert!(bbc.value >= target_k(chi, q));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
