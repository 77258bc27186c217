use super::{dsatur, Color, Coloring, ColoringError};
use crate::graph::{Graph, Vertex};

/// Default search-node budget for [`exact_chromatic`].
pub const DEFAULT_NODE_BUDGET: u64 = 20_000_000;

/// Chromatic number with a witness using exactly the colors `1..=chi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromaticResult {
    pub chi: Color,
    pub witness: Coloring,
    /// Branch-and-bound nodes visited.
    pub nodes: u64,
}

/// Greedy clique: each vertex seeds a clique that is grown through its
/// neighbors by descending degree; the first largest one wins.
pub fn greedy_clique(g: &Graph) -> Vec<Vertex> {
    let mut best: Vec<Vertex> = Vec::new();
    for seed in 0..g.n() {
        let mut candidates = g.neighbors(seed).to_vec();
        candidates.sort_by_key(|&w| (std::cmp::Reverse(g.degree(w)), w));
        let mut clique = vec![seed];
        for w in candidates {
            if clique.iter().all(|&u| g.has_edge(u, w)) {
                clique.push(w);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

/// Exact chromatic number by DSATUR-ordered branch and bound.
///
/// The DSATUR coloring is the initial incumbent and a greedy clique the
/// lower bound. Branching always takes the most saturated uncolored vertex
/// (ties: higher degree, then lower index) and tries colors in ascending
/// order, opening at most one new color per node. Branches that would need
/// as many colors as the incumbent are cut.
pub fn exact_chromatic(g: &Graph, budget: u64) -> Result<ChromaticResult, ColoringError> {
    let n = g.n();
    let incumbent = dsatur(g);
    if n == 0 {
        return Ok(ChromaticResult {
            chi: 0,
            witness: incumbent,
            nodes: 0,
        });
    }
    let lower = greedy_clique(g).len() as Color;
    let mut search = Search {
        g,
        budget,
        nodes: 0,
        lower,
        best: incumbent.k(),
        best_colors: incumbent.colors().to_vec(),
        colors: vec![0; n],
        neighbor_count: vec![vec![0; n + 2]; n],
        saturation: vec![0; n],
    };
    if search.best > lower {
        search.branch(0, 0)?;
    }
    let chi = search.best;
    Ok(ChromaticResult {
        chi,
        witness: Coloring::from_parts_unchecked(search.best_colors, chi),
        nodes: search.nodes,
    })
}

struct Search<'a> {
    g: &'a Graph,
    budget: u64,
    nodes: u64,
    lower: Color,
    best: Color,
    best_colors: Vec<Color>,
    /// 0 = unassigned
    colors: Vec<Color>,
    neighbor_count: Vec<Vec<u32>>,
    saturation: Vec<usize>,
}

impl Search<'_> {
    fn branch(&mut self, used: Color, colored: usize) -> Result<(), ColoringError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(ColoringError::BudgetExceeded(self.budget));
        }
        let n = self.g.n();
        if colored == n {
            if used < self.best {
                self.best = used;
                self.best_colors = self.colors.clone();
            }
            return Ok(());
        }
        let v = (0..n)
            .filter(|&v| self.colors[v] == 0)
            .max_by(|&a, &b| {
                (self.saturation[a], self.g.degree(a))
                    .cmp(&(self.saturation[b], self.g.degree(b)))
                    .then(b.cmp(&a))
            })
            .expect("an uncolored vertex remains");

        let limit = (used + 1).min(self.best - 1);
        for color in 1..=limit {
            if self.neighbor_count[v][color as usize] > 0 {
                continue;
            }
            self.assign(v, color);
            let result = self.branch(used.max(color), colored + 1);
            self.unassign(v, color);
            result?;
            if self.best <= self.lower || color + 1 >= self.best {
                break;
            }
        }
        Ok(())
    }

    fn assign(&mut self, v: Vertex, color: Color) {
        self.colors[v] = color;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.neighbor_count[w][color as usize];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: Vertex, color: Color) {
        self.colors[v] = 0;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.neighbor_count[w][color as usize];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_proper;
    use crate::graph::{generate, GraphFamily};

    fn chi(family: GraphFamily) -> Color {
        let g = generate(&family).unwrap();
        let result = exact_chromatic(&g, DEFAULT_NODE_BUDGET).unwrap();
        assert!(is_proper(&g, &result.witness).unwrap());
        assert_eq!(result.witness.max_color(), result.chi);
        result.chi
    }

    #[test]
    fn small_families() {
        assert_eq!(chi(GraphFamily::Cycle(5)), 3);
        assert_eq!(chi(GraphFamily::Cycle(6)), 2);
        assert_eq!(chi(GraphFamily::CompleteBipartite(3, 3)), 2);
        assert_eq!(chi(GraphFamily::Complete(5)), 5);
        assert_eq!(chi(GraphFamily::Wheel(5)), 4);
        assert_eq!(chi(GraphFamily::Wheel(6)), 3);
        assert_eq!(chi(GraphFamily::Path(1)), 1);
    }

    #[test]
    fn petersen_is_three_chromatic() {
        let g = generate(&GraphFamily::Petersen).unwrap();
        // no proper 2-coloring: it has odd cycles
        assert!(!g.is_bipartite());
        let result = exact_chromatic(&g, DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(result.chi, 3);
        assert!(is_proper(&g, &result.witness).unwrap());
    }

    #[test]
    fn loose_clique_bound() {
        let g = generate(&GraphFamily::Cycle(7)).unwrap();
        assert_eq!(greedy_clique(&g).len(), 2);
        assert_eq!(exact_chromatic(&g, DEFAULT_NODE_BUDGET).unwrap().chi, 3);
    }

    #[test]
    fn budget_is_enforced() {
        let g = generate(&GraphFamily::Petersen).unwrap();
        assert_eq!(exact_chromatic(&g, 1), Err(ColoringError::BudgetExceeded(1)));
    }
}
