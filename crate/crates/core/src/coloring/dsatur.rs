use super::{Color, Coloring};
use crate::graph::Graph;

/// DSATUR greedy coloring.
///
/// Picks the uncolored vertex with the most distinct neighbor colors, then
/// the highest degree, then the smallest index, and gives it the smallest
/// color not used by its neighbors. Colors used are always `1..=k`.
pub fn dsatur(g: &Graph) -> Coloring {
    let n = g.n();
    let mut colors: Vec<Color> = vec![0; n];
    // seen[v][c] is true when a neighbor of v has color c
    let mut seen = vec![vec![false; n + 2]; n];
    let mut saturation = vec![0usize; n];
    let mut k = 0;

    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == 0)
            .max_by(|&a, &b| {
                (saturation[a], g.degree(a))
                    .cmp(&(saturation[b], g.degree(b)))
                    .then(b.cmp(&a))
            })
            .expect("an uncolored vertex remains");
        let color = (1..).find(|&c| !seen[v][c as usize]).expect("a free color exists");
        colors[v] = color;
        k = k.max(color);
        for &w in g.neighbors(v) {
            if !seen[w][color as usize] {
                seen[w][color as usize] = true;
                saturation[w] += 1;
            }
        }
    }
    Coloring::from_parts_unchecked(colors, k)
}
