use serde::{Deserialize, Serialize};

use crate::coloring::Color;
use crate::graph::{is_spanning_tree, Edge, Graph};

/// Outcome of checking a claimed backbone coloring. Failures are reported
/// as fields rather than errors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    /// One color >= 1 per vertex and no monochromatic edge.
    pub proper: bool,
    /// The tree is a spanning tree made of edges of the graph.
    pub spanning_tree: bool,
    /// Every tree edge joins colors at least `q` apart.
    pub backbone_ok: bool,
    /// Largest color used.
    pub k_used: Color,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.proper && self.spanning_tree && self.backbone_ok
    }
}

/// Checks an arbitrary claimed solution.
pub fn verify_backbone_coloring(g: &Graph, tree: &[Edge], colors: &[Color], q: Color) -> VerifyReport {
    let n = g.n();
    let sized = colors.len() == n;
    let proper = sized
        && colors.iter().all(|&c| c >= 1)
        && g.edges().all(|(u, v)| colors[u] != colors[v]);
    let spanning_tree =
        tree.iter().all(|&(u, v)| g.has_edge(u, v)) && is_spanning_tree(n, tree);
    let backbone_ok = tree.iter().all(|&(u, v)| {
        u < colors.len() && v < colors.len() && colors[u].abs_diff(colors[v]) >= q
    });
    VerifyReport {
        proper,
        spanning_tree,
        backbone_ok,
        k_used: colors.iter().copied().max().unwrap_or(0),
    }
}
