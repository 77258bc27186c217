use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Edge, Graph, GraphError, UnionFind};

/// Largest order accepted by [`enumerate_connected`] (2^21 edge subsets).
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Named graph families.
#[derive(Clone, Debug, PartialEq)]
pub enum GraphFamily {
    Complete(usize),
    /// Cycle on `n >= 3` vertices.
    Cycle(usize),
    /// Path on `n` vertices.
    Path(usize),
    /// Star on `n` vertices: center 0 joined to 1..n.
    Star(usize),
    /// Hub 0 joined to every vertex of a rim cycle 1..=n (n + 1 vertices).
    Wheel(usize),
    /// Parts 0..a and a..a+b.
    CompleteBipartite(usize, usize),
    Petersen,
    /// Erdős–Rényi G(n, p). Pairs are visited in lexicographic order and each
    /// consumes one `u64` from a ChaCha8 stream seeded with `seed`.
    Gnp { n: usize, p: f64, seed: u64 },
}

/// Builds a member of `family`.
pub fn generate(family: &GraphFamily) -> Result<Graph, GraphError> {
    let invalid = |msg: &str| Err(GraphError::InvalidParameter(msg.to_owned()));
    let (n, edges): (usize, Vec<Edge>) = match *family {
        GraphFamily::Complete(n) => {
            if n < 1 {
                return invalid("complete graph needs n >= 1");
            }
            (n, all_pairs(n).collect())
        }
        GraphFamily::Cycle(n) => {
            if n < 3 {
                return invalid("cycle needs n >= 3");
            }
            (n, (0..n).map(|i| (i, (i + 1) % n)).collect())
        }
        GraphFamily::Path(n) => {
            if n < 1 {
                return invalid("path needs n >= 1");
            }
            (n, (1..n).map(|i| (i - 1, i)).collect())
        }
        GraphFamily::Star(n) => {
            if n < 1 {
                return invalid("star needs n >= 1");
            }
            (n, (1..n).map(|i| (0, i)).collect())
        }
        GraphFamily::Wheel(rim) => {
            if rim < 3 {
                return invalid("wheel needs a rim of at least 3 vertices");
            }
            let spokes = (1..=rim).map(|i| (0, i));
            let cycle = (0..rim).map(|i| (i + 1, (i + 1) % rim + 1));
            (rim + 1, spokes.chain(cycle).collect())
        }
        GraphFamily::CompleteBipartite(a, b) => {
            if a < 1 || b < 1 {
                return invalid("complete bipartite graph needs a, b >= 1");
            }
            let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
            (a + b, edges)
        }
        GraphFamily::Petersen => {
            let outer = (0..5).map(|i| (i, (i + 1) % 5));
            let spokes = (0..5).map(|i| (i, i + 5));
            let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
            (10, outer.chain(spokes).chain(inner).collect())
        }
        GraphFamily::Gnp { n, p, seed } => {
            if n < 1 {
                return invalid("gnp needs n >= 1");
            }
            if !(0.0..=1.0).contains(&p) {
                return invalid("gnp needs 0 <= p <= 1");
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let scale = (1u64 << 53) as f64;
            let edges = all_pairs(n)
                .filter(|_| ((rng.next_u64() >> 11) as f64) / scale < p)
                .collect();
            (n, edges)
        }
    };
    Graph::from_edges(n, &edges)
}

fn all_pairs(n: usize) -> impl Iterator<Item = Edge> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

/// Every connected labeled simple graph on `n` vertices, in ascending order
/// of the edge bitmask whose bit `i` is the `i`-th pair in lexicographic order.
pub fn enumerate_connected(n: usize) -> Result<impl Iterator<Item = Graph>, GraphError> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(GraphError::TooLarge(n));
    }
    let pairs: Vec<Edge> = all_pairs(n).collect();
    let masks = 0u64..(1u64 << pairs.len());
    Ok(masks.filter_map(move |mask| {
        let mut forest = UnionFind::new(n);
        let chosen: Vec<Edge> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        for &(u, v) in &chosen {
            forest.union(u, v);
        }
        (forest.sets() == 1).then(|| Graph::from_edges(n, &chosen).expect("pairs are simple"))
    }))
}
