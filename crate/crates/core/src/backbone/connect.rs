use serde::{Deserialize, Serialize};

use super::{forbidden_interval, initial_palette_coloring, q_subgraph, Palette, SolveError};
use crate::coloring::{is_proper, kempe_component, kempe_swap, Color, Coloring};
use crate::graph::{Edge, Graph, VertexSet};

/// Which swap rule grew the component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SwapCase {
    /// Some color `j` is far from both endpoints of a cut edge.
    Case1,
    /// Every cut edge's endpoint intervals cover the palette; `j` is the
    /// extreme color (1 or k) far from the inside endpoint.
    Case2,
}

/// One Kempe swap of [`connect_q_subgraph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TraceStep {
    pub case: SwapCase,
    /// Cut edge `(u, v)` with `u` inside the largest component.
    pub edge: Edge,
    /// Color swapped with `c(v)` on the Kempe chain of `v`.
    pub color: Color,
    /// Largest component of the q-subgraph before and after the swap.
    pub component_before: usize,
    pub component_after: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connected {
    pub coloring: Coloring,
    pub palette: Palette,
    pub trace: Vec<TraceStep>,
}

/// Recolors a proper coloring of a connected graph so that its q-subgraph
/// becomes connected, using at most `target_k(t, q)` colors.
///
/// Each iteration takes the largest component `H` of the q-subgraph (ties
/// to the smallest vertex) and scans the cut edges `(u, v)`, `u` in `H`, in
/// lexicographic order:
///
/// 1. If for some edge a color `j` lies outside both forbidden intervals of
///    `c(u)` and `c(v)`, the smallest such `j` of the first such edge is
///    swapped with `c(v)` on the `{j, c(v)}` Kempe chain through `v`.
/// 2. Otherwise every cut edge has intervals covering `1..=k`. For the first
///    edge where `k` (or failing that `1`) is far from `c(u)`, that extreme
///    color is swapped in the same way.
///
/// The chain never meets `H`, so `H` keeps its edges and gains `uv`. Every
/// step checks that the chain is disjoint from `H`, that colors stay in the
/// palette blocks, and that the largest component strictly grows.
pub fn connect_q_subgraph(g: &Graph, c0: &Coloring, q: Color) -> Result<Connected, SolveError> {
    let n = g.n();
    if n < 2 {
        return Err(SolveError::TooSmall(2));
    }
    if !g.is_connected() {
        return Err(SolveError::NotConnectedInput);
    }
    if !is_proper(g, c0)? {
        return Err(SolveError::ImproperColoring);
    }
    let (mut c, palette) = initial_palette_coloring(c0, q)?;
    let k = palette.k;
    let mut trace = Vec::new();
    let mut h = largest_component(g, &c, q)?;

    loop {
        if let Some(v) = (0..n).find(|&v| !palette.allows(c.color(v))) {
            return Err(SolveError::InvariantViolated(format!(
                "vertex {v} has gap color {} (palette {palette:?})",
                c.color(v)
            )));
        }
        if h.len() == n {
            return Ok(Connected {
                coloring: c,
                palette,
                trace,
            });
        }

        let cut = g.cut_edges(&h);
        let mut intervals = Vec::with_capacity(cut.len());
        for &(u, v) in &cut {
            intervals.push((
                forbidden_interval(c.color(u), q, k)?,
                forbidden_interval(c.color(v), q, k)?,
            ));
        }

        let case1 = cut.iter().zip(&intervals).find_map(|(&edge, (fu, fv))| {
            (1..=k)
                .find(|j| !fu.contains(j) && !fv.contains(j))
                .map(|j| (SwapCase::Case1, edge, j))
        });
        let choice = case1.or_else(|| {
            cut.iter().zip(&intervals).find_map(|(&edge, (fu, _))| {
                if !fu.contains(&k) {
                    Some((SwapCase::Case2, edge, k))
                } else if !fu.contains(&1) {
                    Some((SwapCase::Case2, edge, 1))
                } else {
                    None
                }
            })
        });
        let Some((case, (u, v), j)) = choice else {
            return Err(SolveError::AlgorithmStalled {
                iteration: trace.len(),
                detail: format!("no cut edge of a component of size {} admits a swap", h.len()),
            });
        };

        let cv = c.color(v);
        if cv == j {
            return Err(SolveError::InvariantViolated(format!(
                "cut edge ({u}, {v}) already has swap color {j} at v"
            )));
        }
        let chain = kempe_component(g, &c, v, j)?;
        if !chain.is_disjoint(&h) {
            return Err(SolveError::InvariantViolated(format!(
                "Kempe chain of {v} for colors {{{cv}, {j}}} meets the largest component"
            )));
        }
        c = kempe_swap(g, &c, &chain, j, cv)?;

        let grown = largest_component(g, &c, q)?;
        if grown.len() <= h.len() {
            return Err(SolveError::AlgorithmStalled {
                iteration: trace.len(),
                detail: format!(
                    "largest component did not grow ({} -> {})",
                    h.len(),
                    grown.len()
                ),
            });
        }
        trace.push(TraceStep {
            case,
            edge: (u, v),
            color: j,
            component_before: h.len(),
            component_after: grown.len(),
        });
        h = grown;
    }
}

fn largest_component(g: &Graph, c: &Coloring, q: Color) -> Result<VertexSet, SolveError> {
    let components = g.connected_components(Some(&q_subgraph(g, c, q)))?;
    let mut best: Option<VertexSet> = None;
    for component in components {
        if best.as_ref().is_none_or(|b| component.len() > b.len()) {
            best = Some(component);
        }
    }
    Ok(best.expect("graph has at least one vertex"))
}
