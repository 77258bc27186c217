use super::OracleError;
use crate::graph::{Edge, EdgeSet, Graph, UnionFind};

/// Every spanning tree of a connected graph exactly once.
///
/// Deletion-contraction over the edges in lexicographic order: each edge is
/// first contracted (kept) when it joins two different parts, then deleted
/// when the remaining edges can still connect everything. Trees therefore
/// come out in lexicographic order of their sorted edge lists.
pub fn enumerate_spanning_trees(g: &Graph, cap: usize) -> Result<Vec<EdgeSet>, OracleError> {
    let n = g.n();
    if n == 0 {
        return Err(OracleError::TooSmall(1));
    }
    if !g.is_connected() {
        return Err(OracleError::NotConnected);
    }
    let mut walk = Walk {
        edges: g.edges().collect(),
        n,
        cap,
        chosen: Vec::with_capacity(n - 1),
        trees: Vec::new(),
    };
    walk.descend(0, UnionFind::new(n))?;
    Ok(walk.trees)
}

struct Walk {
    edges: Vec<Edge>,
    n: usize,
    cap: usize,
    chosen: Vec<Edge>,
    trees: Vec<EdgeSet>,
}

impl Walk {
    fn descend(&mut self, next: usize, parts: UnionFind) -> Result<(), OracleError> {
        if self.chosen.len() + 1 == self.n {
            if self.trees.len() == self.cap {
                return Err(OracleError::CapExceeded(self.cap));
            }
            self.trees.push(EdgeSet::from_pairs(self.chosen.iter().copied()));
            return Ok(());
        }
        if next == self.edges.len() {
            return Ok(());
        }
        let (u, v) = self.edges[next];

        let mut contracted = parts.clone();
        if contracted.union(u, v) {
            self.chosen.push((u, v));
            self.descend(next + 1, contracted)?;
            self.chosen.pop();
        }

        let mut reachable = parts.clone();
        for &(a, b) in &self.edges[next + 1..] {
            reachable.union(a, b);
        }
        if reachable.sets() == 1 {
            self.descend(next + 1, parts)?;
        }
        Ok(())
    }
}
