//! Brute-force ground truth for small instances.
//!
//! Nothing in here calls the solver or the chromatic-number search of
//! [`crate::coloring`]; results from this module are meant to be compared
//! against them.

mod trees;

pub use trees::enumerate_spanning_trees;

use std::collections::VecDeque;

use thiserror::Error;

use crate::backbone::target_k;
use crate::coloring::{Color, Coloring};
use crate::graph::{EdgeSet, Graph, Vertex};

/// Largest graph order the backtracking search accepts.
pub const MAX_ORACLE_ORDER: usize = 12;

/// Default cap on enumerated spanning trees.
pub const DEFAULT_TREE_CAP: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph on {0} vertices exceeds the oracle limit of {MAX_ORACLE_ORDER}")]
    TooLarge(usize),
    #[error("graph needs at least {0} vertices")]
    TooSmall(usize),
    #[error("graph is not connected")]
    NotConnected,
    #[error("separation q must be at least 1")]
    InvalidSeparation,
    #[error("backbone edge ({0}, {1}) is not an edge of the graph")]
    EdgeNotInGraph(Vertex, Vertex),
    #[error("backbone leaves vertex {0} isolated")]
    DegreeZero(Vertex),
    #[error("more than {0} spanning trees")]
    CapExceeded(usize),
}

/// A graph together with a spanning subgraph given by its edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BackboneInstance {
    g: Graph,
    h: EdgeSet,
}

impl BackboneInstance {
    pub fn new(g: Graph, h: EdgeSet) -> Result<Self, OracleError> {
        if let Some(&(u, v)) = h.iter().find(|&&(u, v)| !g.has_edge(u, v)) {
            return Err(OracleError::EdgeNotInGraph(u, v));
        }
        Ok(Self { g, h })
    }

    pub fn graph(&self) -> &Graph {
        &self.g
    }

    pub fn backbone(&self) -> &EdgeSet {
        &self.h
    }

    /// Minimum degree of the backbone as a spanning subgraph.
    pub fn backbone_min_degree(&self) -> usize {
        self.backbone_degrees().into_iter().min().unwrap_or(0)
    }

    fn backbone_degrees(&self) -> Vec<usize> {
        let mut degree = vec![0; self.g.n()];
        for &(u, v) in self.h.iter() {
            degree[u] += 1;
            degree[v] += 1;
        }
        degree
    }
}

/// Exact backbone chromatic number with a witness coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BbcResult {
    pub value: Color,
    pub witness: Coloring,
    pub nodes_explored: u64,
}

/// Smallest `k` admitting a proper `k`-coloring with gap at least `q` on
/// every backbone edge.
///
/// Candidate `k` values start at the larger of a greedy clique size and
/// `q + 1` (when the backbone has an edge) and go up to `q(n-1)+1`, which
/// spreading out `n` distinct colors always reaches.
pub fn bbc_exact(inst: &BackboneInstance, q: Color) -> Result<BbcResult, OracleError> {
    let n = inst.g.n();
    if n > MAX_ORACLE_ORDER {
        return Err(OracleError::TooLarge(n));
    }
    if q == 0 {
        return Err(OracleError::InvalidSeparation);
    }
    if n == 0 {
        return Ok(BbcResult {
            value: 0,
            witness: Coloring::new(Vec::new(), 0).expect("empty coloring"),
            nodes_explored: 0,
        });
    }
    let search = BacktrackSearch::new(inst, q);
    let floor = search_floor(inst, q);
    let ceiling = q * (n as Color - 1) + 1;
    let (found, nodes) = search.min_feasible(floor, ceiling);
    let (value, colors) = found.expect("q(n-1)+1 colors always suffice");
    Ok(BbcResult {
        value,
        witness: Coloring::new(colors, value).expect("search stays in palette"),
        nodes_explored: nodes,
    })
}

/// Chromatic number by the same backtracking with an empty backbone.
pub fn chromatic_number(g: &Graph) -> Result<BbcResult, OracleError> {
    bbc_exact(&BackboneInstance::new(g.clone(), EdgeSet::default())?, 1)
}

/// Checks `bbc_exact(inst, q) >= max{chi, ceil(chi/2) + q}` for a backbone
/// without isolated vertices.
pub fn lower_bound_check(inst: &BackboneInstance, q: Color, chi: Color) -> Result<bool, OracleError> {
    if let Some(v) = inst.backbone_degrees().iter().position(|&d| d == 0) {
        return Err(OracleError::DegreeZero(v));
    }
    Ok(bbc_exact(inst, q)?.value >= target_k(chi, q))
}

/// Minimum of the backbone chromatic number over all spanning trees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BestTree {
    pub value: Color,
    /// First tree in enumeration order attaining `value`.
    pub tree: EdgeSet,
    pub coloring: Coloring,
    pub trees_examined: usize,
    pub nodes_explored: u64,
}

/// Enumerates every spanning tree and keeps the one with the smallest
/// backbone chromatic number. Each tree is only searched below the current
/// best value, and the scan stops once the trivial floor is reached.
pub fn best_tree_exact(g: &Graph, q: Color, cap: usize) -> Result<BestTree, OracleError> {
    let n = g.n();
    if n < 2 {
        return Err(OracleError::TooSmall(2));
    }
    if n > MAX_ORACLE_ORDER {
        return Err(OracleError::TooLarge(n));
    }
    if q == 0 {
        return Err(OracleError::InvalidSeparation);
    }
    let trees = enumerate_spanning_trees(g, cap)?;
    let mut best: Option<(Color, EdgeSet, Vec<Color>)> = None;
    let mut nodes = 0;
    let mut examined = 0;
    for tree in trees {
        examined += 1;
        let inst = BackboneInstance::new(g.clone(), tree)?;
        let floor = search_floor(&inst, q);
        let ceiling = match &best {
            Some((value, ..)) => value - 1,
            None => q * (n as Color - 1) + 1,
        };
        if ceiling < floor {
            continue;
        }
        let (found, spent) = BacktrackSearch::new(&inst, q).min_feasible(floor, ceiling);
        nodes += spent;
        if let Some((value, colors)) = found {
            best = Some((value, inst.h, colors));
            if value == floor {
                break;
            }
        }
    }
    let (value, tree, colors) = best.expect("a connected graph has a spanning tree");
    Ok(BestTree {
        value,
        tree,
        coloring: Coloring::new(colors, value).expect("search stays in palette"),
        trees_examined: examined,
        nodes_explored: nodes,
    })
}

/// Lower bound valid for every backbone: a clique needs distinct colors and
/// one backbone edge needs two colors `q` apart.
fn search_floor(inst: &BackboneInstance, q: Color) -> Color {
    let clique = clique_size(&inst.g) as Color;
    let edge_bound = if inst.h.is_empty() { 1 } else { q + 1 };
    clique.max(edge_bound)
}

/// Largest clique found by growing one from each vertex in index order.
fn clique_size(g: &Graph) -> usize {
    (0..g.n())
        .map(|seed| {
            let mut clique = vec![seed];
            for w in seed + 1..g.n() {
                if clique.iter().all(|&u| g.has_edge(u, w)) {
                    clique.push(w);
                }
            }
            clique.len()
        })
        .max()
        .unwrap_or(0)
}

struct BacktrackSearch {
    /// Vertices in BFS order from vertex 0.
    order: Vec<Vertex>,
    /// For each position, the earlier positions it must differ from, with a
    /// flag for backbone edges.
    constraints: Vec<Vec<(usize, bool)>>,
    q: Color,
}

impl BacktrackSearch {
    fn new(inst: &BackboneInstance, q: Color) -> Self {
        let g = &inst.g;
        let n = g.n();
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                order.push(u);
                for &w in g.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        let mut position = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let constraints = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                g.neighbors(v)
                    .iter()
                    .filter(|&&w| position[w] < i)
                    .map(|&w| (position[w], inst.h.contains(v, w)))
                    .collect()
            })
            .collect();
        Self {
            order,
            constraints,
            q,
        }
    }

    /// Smallest feasible `k` in `floor..=ceiling` with its coloring.
    fn min_feasible(&self, floor: Color, ceiling: Color) -> (Option<(Color, Vec<Color>)>, u64) {
        let mut nodes = 0;
        for k in floor..=ceiling {
            let mut by_position = vec![0; self.order.len()];
            if self.extend(0, k, &mut by_position, &mut nodes) {
                let mut colors = vec![0; self.order.len()];
                for (i, &v) in self.order.iter().enumerate() {
                    colors[v] = by_position[i];
                }
                return (Some((k, colors)), nodes);
            }
        }
        (None, nodes)
    }

    fn extend(&self, pos: usize, k: Color, colors: &mut [Color], nodes: &mut u64) -> bool {
        if pos == colors.len() {
            return true;
        }
        *nodes += 1;
        // reversing the palette i -> k+1-i preserves every constraint
        let top = if pos == 0 { k.div_ceil(2) } else { k };
        for color in 1..=top {
            let fits = self.constraints[pos].iter().all(|&(earlier, backbone)| {
                let other = colors[earlier];
                if backbone {
                    color.abs_diff(other) >= self.q
                } else {
                    color != other
                }
            });
            if fits {
                colors[pos] = color;
                if self.extend(pos + 1, k, colors, nodes) {
                    return true;
                }
            }
        }
        colors[pos] = 0;
        false
    }
}
