//! Vertex colorings: properness, DSATUR, exact chromatic number and Kempe
//! chain recoloring.

mod dsatur;
mod exact;
mod kempe;

pub use dsatur::dsatur;
pub use exact::{exact_chromatic, greedy_clique, ChromaticResult, DEFAULT_NODE_BUDGET};
pub use kempe::{kempe_component, kempe_swap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};

/// Color value. Colors are 1-based; 0 never appears in a [`Coloring`].
pub type Color = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("coloring has {colors} entries but the graph has {n} vertices")]
    SizeMismatch { colors: usize, n: usize },
    #[error("color {color} outside palette 1..={k}")]
    InvalidColor { color: Color, k: Color },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(Vertex),
    #[error("Kempe chain needs two distinct colors, got {0} twice")]
    SameColor(Color),
    #[error("vertex set is not a Kempe component for colors {0} and {1}")]
    NotAKempeComponent(Color, Color),
    #[error("exact search exceeded its budget of {0} nodes")]
    BudgetExceeded(u64),
}

/// Total assignment of colors `1..=k` to the vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<Color>,
    k: Color,
}

impl Coloring {
    pub fn new(colors: Vec<Color>, k: Color) -> Result<Self, ColoringError> {
        if let Some(&color) = colors.iter().find(|&&c| c == 0 || c > k) {
            return Err(ColoringError::InvalidColor { color, k });
        }
        Ok(Self { colors, k })
    }

    /// Palette bound set to the largest color present.
    pub fn from_colors(colors: Vec<Color>) -> Result<Self, ColoringError> {
        let k = colors.iter().copied().max().unwrap_or(0);
        Self::new(colors, k)
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn into_colors(self) -> Vec<Color> {
        self.colors
    }

    /// Palette bound `k`.
    pub fn k(&self) -> Color {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Largest color actually used.
    pub fn max_color(&self) -> Color {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// Vertices of color class `i`.
    pub fn class(&self, i: Color) -> impl Iterator<Item = Vertex> + '_ {
        self.colors
            .iter()
            .enumerate()
            .filter_map(move |(v, &c)| (c == i).then_some(v))
    }

    pub(crate) fn from_parts_unchecked(colors: Vec<Color>, k: Color) -> Self {
        debug_assert!(colors.iter().all(|&c| c >= 1 && c <= k));
        Self { colors, k }
    }
}

/// True iff no edge of `g` is monochromatic.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
    if c.len() != g.n() {
        return Err(ColoringError::SizeMismatch {
            colors: c.len(),
            n: g.n(),
        });
    }
    Ok(g.edges().all(|(u, v)| c.color(u) != c.color(v)))
}

/// Recolors `i` as `q(i-1)+1`, so adjacent vertices end up at least `q`
/// apart. At `q = 2` this is the odd-color doubling `2i-1`.
pub fn spread_coloring(c: &Coloring, q: Color) -> Coloring {
    let spread = |i: Color| q * (i - 1) + 1;
    let k = if c.k() == 0 { 0 } else { spread(c.k()) };
    Coloring::from_parts_unchecked(c.colors().iter().map(|&i| spread(i)).collect(), k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn properness() {
        let g = k3();
        assert!(is_proper(&g, &Coloring::from_colors(vec![1, 2, 3]).unwrap()).unwrap());
        assert!(!is_proper(&g, &Coloring::from_colors(vec![1, 1, 2]).unwrap()).unwrap());
        assert!(is_proper(&Graph::empty(3), &Coloring::from_colors(vec![1, 1, 1]).unwrap()).unwrap());
        assert_eq!(
            is_proper(&g, &Coloring::from_colors(vec![1, 2]).unwrap()),
            Err(ColoringError::SizeMismatch { colors: 2, n: 3 })
        );
    }

    #[test]
    fn palette_bounds_are_checked() {
        assert_eq!(
            Coloring::new(vec![1, 0], 2),
            Err(ColoringError::InvalidColor { color: 0, k: 2 })
        );
        assert_eq!(
            Coloring::new(vec![1, 3], 2),
            Err(ColoringError::InvalidColor { color: 3, k: 2 })
        );
    }

    #[test]
    fn spread() {
        let c = Coloring::from_colors(vec![1, 2, 3]).unwrap();
        let s = spread_coloring(&c, 2);
        assert_eq!(s.colors(), &[1, 3, 5]);
        assert_eq!(s.max_color(), 5);
        assert_eq!(spread_coloring(&c, 1), c);
        let edge = Coloring::from_colors(vec![1, 2]).unwrap();
        assert_eq!(spread_coloring(&edge, 4).colors(), &[1, 5]);
    }
}
