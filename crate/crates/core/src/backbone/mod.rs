//! Spanning-tree backbone colorings.
//!
//! For a connected graph with a proper `t`-coloring, [`solve`] produces a
//! proper coloring with largest color `max{t, ceil(t/2) + q}` together with
//! a spanning tree whose every edge joins colors at least `q` apart. When
//! `t` is the chromatic number this value is optimal over all spanning
//! trees.
//!
//! The construction starts from the palette split described by [`Palette`]
//! and repeatedly grows the largest component of the `q`-subgraph (edges
//! whose endpoint colors differ by at least `q`) with a single Kempe swap,
//! see [`connect_q_subgraph`].

mod connect;
mod solution;
mod verify;

pub use connect::{connect_q_subgraph, Connected, SwapCase, TraceStep};
pub use solution::{Solution, TraceEntry};
pub use verify::{verify_backbone_coloring, VerifyReport};

use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{dsatur, exact_chromatic, Color, Coloring, ColoringError, DEFAULT_NODE_BUDGET};
use crate::graph::{EdgeSet, Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("separation q must be at least 1")]
    InvalidSeparation,
    #[error("color {color} outside palette 1..={k}")]
    ColorOutOfRange { color: Color, k: Color },
    #[error("input graph is not connected")]
    NotConnectedInput,
    #[error("graph needs at least {0} vertices")]
    TooSmall(usize),
    #[error("input coloring is not proper")]
    ImproperColoring,
    #[error("no Kempe swap applies at iteration {iteration}: {detail}")]
    AlgorithmStalled { iteration: usize, detail: String },
    #[error("solver invariant violated: {0}")]
    InvariantViolated(String),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The colors within distance `< q` of `i`, clipped to `1..=k`.
pub fn forbidden_interval(i: Color, q: Color, k: Color) -> Result<RangeInclusive<Color>, SolveError> {
    if q == 0 {
        return Err(SolveError::InvalidSeparation);
    }
    if i == 0 || i > k {
        return Err(SolveError::ColorOutOfRange { color: i, k });
    }
    Ok((i + 1).saturating_sub(q).max(1)..=(i.saturating_add(q - 1)).min(k))
}

/// Edges whose endpoint colors differ by at least `q`.
pub fn q_subgraph(g: &Graph, c: &Coloring, q: Color) -> EdgeSet {
    EdgeSet::from_pairs(g.edges().filter(|&(u, v)| c.color(u).abs_diff(c.color(v)) >= q))
}

/// `max{t, ceil(t/2) + q}`.
pub fn target_k(t: Color, q: Color) -> Color {
    t.max(t.div_ceil(2) + q)
}

/// Color geometry used by the solver: `t` colors split into a low block
/// `1..=x` and a high block ending at `k`, separated by `kprime` unused gap
/// colors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Palette {
    pub t: Color,
    pub q: Color,
    pub x: Color,
    pub k: Color,
    pub kprime: Color,
}

impl Palette {
    pub fn new(t: Color, q: Color) -> Self {
        let x = t.div_ceil(2);
        let k = target_k(t, q);
        Self {
            t,
            q,
            x,
            k,
            kprime: k - t,
        }
    }

    pub fn low(&self) -> RangeInclusive<Color> {
        1..=self.x
    }

    pub fn gap(&self) -> RangeInclusive<Color> {
        self.x + 1..=self.x + self.kprime
    }

    pub fn high(&self) -> RangeInclusive<Color> {
        self.x + self.kprime + 1..=self.k
    }

    /// True for colors of the low or high block.
    pub fn allows(&self, color: Color) -> bool {
        self.low().contains(&color) || self.high().contains(&color)
    }
}

/// Moves colors `x+1..=t` of `c` up by `kprime` into the high block,
/// leaving the low block untouched.
pub fn initial_palette_coloring(c: &Coloring, q: Color) -> Result<(Coloring, Palette), SolveError> {
    if q == 0 {
        return Err(SolveError::InvalidSeparation);
    }
    let palette = Palette::new(c.max_color(), q);
    let colors = c
        .colors()
        .iter()
        .map(|&i| if i > palette.x { i + palette.kprime } else { i })
        .collect();
    Ok((Coloring::new(colors, palette.k)?, palette))
}

/// BFS spanning tree of the `q`-subgraph rooted at vertex 0.
pub fn extract_backbone(g: &Graph, c: &Coloring, q: Color) -> Result<EdgeSet, GraphError> {
    g.bfs_spanning_tree(&q_subgraph(g, c, q), 0)
}

/// Source of the initial proper coloring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolveMode {
    /// Start from an optimal coloring; the result is then optimal.
    Exact,
    /// Start from DSATUR; the guarantee degrades to `target_k(t, q)` with
    /// `t` the DSATUR color count.
    Heuristic,
}

impl SolveMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            SolveMode::Exact => "exact",
            SolveMode::Heuristic => "heuristic",
        }
    }
}

/// Certified backbone coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub q: Color,
    pub mode: SolveMode,
    /// Colors in the starting proper coloring.
    pub t: Color,
    pub coloring: Coloring,
    pub tree: EdgeSet,
    /// Largest color used.
    pub k_achieved: Color,
    /// `target_k(t, q)`.
    pub k_target: Color,
    pub iterations: usize,
    pub trace: Vec<TraceStep>,
}

pub fn solve(g: &Graph, q: Color, mode: SolveMode) -> Result<SolveResult, SolveError> {
    solve_with_budget(g, q, mode, DEFAULT_NODE_BUDGET)
}

/// [`solve`] with an explicit node budget for the exact chromatic search.
pub fn solve_with_budget(
    g: &Graph,
    q: Color,
    mode: SolveMode,
    budget: u64,
) -> Result<SolveResult, SolveError> {
    if q == 0 {
        return Err(SolveError::InvalidSeparation);
    }
    if g.n() == 0 {
        return Err(SolveError::TooSmall(1));
    }
    if !g.is_connected() {
        return Err(SolveError::NotConnectedInput);
    }
    if g.n() == 1 {
        // An edgeless tree puts no constraint on the single color.
        return Ok(SolveResult {
            q,
            mode,
            t: 1,
            coloring: Coloring::new(vec![1], 1)?,
            tree: EdgeSet::default(),
            k_achieved: 1,
            k_target: target_k(1, q),
            iterations: 0,
            trace: Vec::new(),
        });
    }

    let start = match mode {
        SolveMode::Exact => exact_chromatic(g, budget)?.witness,
        SolveMode::Heuristic => dsatur(g),
    };
    let t = start.max_color();
    let Connected { coloring, trace, .. } = connect_q_subgraph(g, &start, q)?;
    let tree = extract_backbone(g, &coloring, q)?;

    let report = verify_backbone_coloring(g, tree.as_slice(), coloring.colors(), q);
    if !report.ok() {
        return Err(SolveError::InvariantViolated(format!(
            "self-verification failed: {report:?}"
        )));
    }
    let k_target = target_k(t, q);
    if report.k_used > k_target {
        return Err(SolveError::InvariantViolated(format!(
            "used color {} above target {k_target}",
            report.k_used
        )));
    }
    Ok(SolveResult {
        q,
        mode,
        t,
        k_achieved: report.k_used,
        k_target,
        iterations: trace.len(),
        coloring,
        tree,
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphFamily};

    fn k3() -> Graph {
        generate(&GraphFamily::Complete(3)).unwrap()
    }

    #[test]
    fn forbidden_intervals() {
        assert_eq!(forbidden_interval(3, 2, 5).unwrap(), 2..=4);
        assert_eq!(forbidden_interval(1, 3, 4).unwrap(), 1..=3);
        assert_eq!(forbidden_interval(4, 1, 4).unwrap(), 4..=4);
        assert_eq!(
            forbidden_interval(5, 1, 4),
            Err(SolveError::ColorOutOfRange { color: 5, k: 4 })
        );
        assert_eq!(
            forbidden_interval(0, 1, 4),
            Err(SolveError::ColorOutOfRange { color: 0, k: 4 })
        );
        assert_eq!(forbidden_interval(1, 0, 4), Err(SolveError::InvalidSeparation));
    }

    #[test]
    fn q_subgraphs() {
        let g = k3();
        let spread = Coloring::from_colors(vec![1, 3, 5]).unwrap();
        assert_eq!(q_subgraph(&g, &spread, 2).len(), 3);
        let tight = Coloring::from_colors(vec![1, 2, 3]).unwrap();
        assert_eq!(q_subgraph(&g, &tight, 2).as_slice(), &[(0, 2)]);
        assert_eq!(q_subgraph(&g, &tight, 1), g.edge_set());
    }

    #[test]
    fn targets() {
        assert_eq!(target_k(4, 2), 4);
        assert_eq!(target_k(2, 5), 6);
        assert_eq!(target_k(3, 2), 4);
        assert_eq!(target_k(1, 1), 2);
    }

    #[test]
    fn palettes() {
        let p = Palette::new(3, 2);
        assert_eq!((p.x, p.k, p.kprime), (2, 4, 1));
        assert_eq!(p.gap(), 3..=3);
        assert_eq!(p.high(), 4..=4);
        assert!(!p.allows(3));

        let p = Palette::new(4, 1);
        assert_eq!((p.x, p.k, p.kprime), (2, 4, 0));
        assert!(p.gap().is_empty());

        for t in 1..12 {
            for q in 1..8 {
                let p = Palette::new(t, q);
                let blocks = p.low().count() + p.high().count();
                assert_eq!(blocks as Color, t, "t={t} q={q}");
                assert_eq!(p.gap().is_empty(), p.kprime == 0);
            }
        }
    }

    #[test]
    fn initial_remap() {
        let c = Coloring::from_colors(vec![1, 2, 3]).unwrap();
        let (remapped, p) = initial_palette_coloring(&c, 2).unwrap();
        assert_eq!(remapped.colors(), &[1, 2, 4]);
        assert_eq!(remapped.k(), 4);
        assert_eq!(p.k, 4);

        let c = Coloring::from_colors(vec![1, 2, 3, 4]).unwrap();
        assert_eq!(initial_palette_coloring(&c, 1).unwrap().0, c);

        let c = Coloring::from_colors(vec![1, 2]).unwrap();
        assert_eq!(initial_palette_coloring(&c, 3).unwrap().0.colors(), &[1, 4]);
    }

    #[test]
    fn backbones() {
        let g = k3();
        let c = Coloring::from_colors(vec![1, 3, 5]).unwrap();
        assert_eq!(extract_backbone(&g, &c, 2).unwrap().as_slice(), &[(0, 1), (0, 2)]);

        let edge = generate(&GraphFamily::Path(2)).unwrap();
        let c = Coloring::from_colors(vec![1, 4]).unwrap();
        assert_eq!(extract_backbone(&edge, &c, 3).unwrap().as_slice(), &[(0, 1)]);

        let c = Coloring::from_colors(vec![1, 2, 3]).unwrap();
        assert_eq!(extract_backbone(&g, &c, 2), Err(GraphError::NotConnected));
    }

    #[test]
    fn solve_examples() {
        let k4 = generate(&GraphFamily::Complete(4)).unwrap();
        assert_eq!(solve(&k4, 2, SolveMode::Exact).unwrap().k_achieved, 4);

        let c6 = generate(&GraphFamily::Cycle(6)).unwrap();
        assert_eq!(solve(&c6, 7, SolveMode::Exact).unwrap().k_achieved, 8);

        let petersen = generate(&GraphFamily::Petersen).unwrap();
        let result = solve(&petersen, 3, SolveMode::Exact).unwrap();
        assert_eq!((result.t, result.k_achieved, result.k_target), (3, 5, 5));
        assert_eq!(result.tree.len(), 9);
    }

    #[test]
    fn solve_single_vertex() {
        let result = solve(&Graph::empty(1), 3, SolveMode::Exact).unwrap();
        assert_eq!(result.k_achieved, 1);
        assert!(result.tree.is_empty());
        assert_eq!(result.coloring.colors(), &[1]);
    }

    #[test]
    fn solve_errors() {
        let disconnected = Graph::empty(2);
        assert_eq!(solve(&disconnected, 2, SolveMode::Exact), Err(SolveError::NotConnectedInput));
        assert_eq!(solve(&k3(), 0, SolveMode::Exact), Err(SolveError::InvalidSeparation));
        assert_eq!(solve(&Graph::empty(0), 1, SolveMode::Exact), Err(SolveError::TooSmall(1)));
        let petersen = generate(&GraphFamily::Petersen).unwrap();
        assert_eq!(
            solve_with_budget(&petersen, 2, SolveMode::Exact, 1),
            Err(SolveError::Coloring(ColoringError::BudgetExceeded(1)))
        );
    }

    #[test]
    fn heuristic_mode_reports_its_own_target() {
        let g = generate(&GraphFamily::Gnp { n: 40, p: 0.2, seed: 3 }).unwrap();
        assert!(g.is_connected());
        let result = solve(&g, 2, SolveMode::Heuristic).unwrap();
        assert_eq!(result.mode, SolveMode::Heuristic);
        assert_eq!(result.t, dsatur(&g).k());
        assert!(result.k_achieved <= result.k_target);
    }
}
