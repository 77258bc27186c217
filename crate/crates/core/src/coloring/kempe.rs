use std::collections::VecDeque;

use super::{Color, Coloring, ColoringError};
use crate::graph::{Graph, Vertex, VertexSet};

/// Component containing `v` of the subgraph induced by the color classes
/// `c(v)` and `j`.
pub fn kempe_component(
    g: &Graph,
    c: &Coloring,
    v: Vertex,
    j: Color,
) -> Result<VertexSet, ColoringError> {
    if c.len() != g.n() {
        return Err(ColoringError::SizeMismatch {
            colors: c.len(),
            n: g.n(),
        });
    }
    if v >= g.n() {
        return Err(ColoringError::VertexOutOfRange(v));
    }
    if j == 0 || j > c.k() {
        return Err(ColoringError::InvalidColor { color: j, k: c.k() });
    }
    let own = c.color(v);
    if own == j {
        return Err(ColoringError::SameColor(j));
    }

    let mut chain = VertexSet::new(g.n());
    chain.insert(v);
    let mut queue = VecDeque::from([v]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            let cw = c.color(w);
            if (cw == own || cw == j) && chain.insert(w) {
                queue.push_back(w);
            }
        }
    }
    Ok(chain)
}

/// Exchanges colors `a` and `b` on `component`, which must be exactly a
/// Kempe component for `{a, b}`. Properness is preserved.
pub fn kempe_swap(
    g: &Graph,
    c: &Coloring,
    component: &VertexSet,
    a: Color,
    b: Color,
) -> Result<Coloring, ColoringError> {
    if a == b {
        return Err(ColoringError::SameColor(a));
    }
    let not_kempe = ColoringError::NotAKempeComponent(a, b);
    let Some(anchor) = component.min() else {
        return Err(not_kempe);
    };
    if component.universe() != g.n() {
        return Err(not_kempe);
    }
    let other = match c.color(anchor) {
        x if x == a => b,
        x if x == b => a,
        _ => return Err(not_kempe),
    };
    if kempe_component(g, c, anchor, other)? != *component {
        return Err(not_kempe);
    }

    let colors = c
        .colors()
        .iter()
        .enumerate()
        .map(|(v, &x)| match x {
            _ if !component.contains(v) => x,
            x if x == a => b,
            _ => a,
        })
        .collect();
    Ok(Coloring::from_parts_unchecked(colors, c.k()))
}
