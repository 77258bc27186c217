//! Spanning-tree backbone colorings.
//!
//! Given a connected graph `G` and a separation `q >= 1`, [`backbone::solve`]
//! finds a proper coloring of `G` and a spanning tree `T` such that every
//! tree edge joins colors at least `q` apart, using colors up to
//! `max{chi(G), ceil(chi(G)/2) + q}`. No spanning tree allows fewer colors.
//!
//! - [`graph`]: simple graphs, DIMACS I/O, generators and enumeration.
//! - [`coloring`]: properness, DSATUR, exact chromatic number, Kempe chains.
//! - [`backbone`]: the backbone solver and its verifier.
//! - [`oracle`]: brute-force backbone chromatic numbers for cross-checking.
//! - [`cli`]: the `bbt` command line.

pub mod backbone;
pub mod cli;
pub mod coloring;
pub mod graph;
pub mod oracle;

pub use backbone::{solve, target_k, SolveError, SolveMode, SolveResult};
pub use coloring::{Color, Coloring};
pub use graph::{Edge, EdgeSet, Graph, Vertex, VertexSet};
