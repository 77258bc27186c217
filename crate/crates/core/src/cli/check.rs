use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::backbone::{solve, target_k, verify_backbone_coloring, SolveMode};
use crate::coloring::Color;
use crate::graph::{enumerate_connected, Graph, GraphError};
use crate::oracle::{best_tree_exact, DEFAULT_TREE_CAP};

/// Largest order the exhaustive check accepts.
pub const MAX_CHECK_ORDER: usize = 6;

/// Largest order that is also cross-checked against the spanning-tree oracle.
pub const MAX_ORACLE_CHECK_ORDER: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub n_max: usize,
    pub q: Vec<Color>,
    /// Connected labeled graphs with `2 <= n <= n_max`.
    pub graphs: usize,
    /// Solver runs (graphs times separations).
    pub checks: usize,
    /// Runs also compared with the best-tree oracle.
    pub oracle_checks: usize,
    pub failures: usize,
    pub per_n: Vec<OrderCount>,
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderCount {
    pub n: usize,
    pub graphs: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub q: Color,
    pub reason: String,
}

impl CheckSummary {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Runs the exact solver on every connected labeled graph with
/// `2 <= n <= n_max` for each `q`, verifies each result, compares the
/// achieved value with `target_k(chi, q)` and, up to
/// [`MAX_ORACLE_CHECK_ORDER`], with the best-tree oracle.
pub fn enumerate_check(n_max: usize, qs: &[Color]) -> Result<CheckSummary, GraphError> {
    if n_max > MAX_CHECK_ORDER {
        return Err(GraphError::TooLarge(n_max));
    }
    let mut summary = CheckSummary {
        n_max,
        q: qs.to_vec(),
        graphs: 0,
        checks: 0,
        oracle_checks: 0,
        failures: 0,
        per_n: Vec::new(),
        counterexamples: Vec::new(),
    };
    for n in 2..=n_max {
        let graphs: Vec<Graph> = enumerate_connected(n)?.collect();
        let with_oracle = n <= MAX_ORACLE_CHECK_ORDER;
        let outcomes: Vec<Vec<Option<String>>> = graphs
            .par_iter()
            .map(|g| qs.iter().map(|&q| check_one(g, q, with_oracle)).collect())
            .collect();
        summary.graphs += graphs.len();
        summary.per_n.push(OrderCount {
            n,
            graphs: graphs.len(),
        });
        for (g, per_q) in graphs.iter().zip(outcomes) {
            for (&q, outcome) in qs.iter().zip(per_q) {
                summary.checks += 1;
                if with_oracle {
                    summary.oracle_checks += 1;
                }
                if let Some(reason) = outcome {
                    summary.failures += 1;
                    summary.counterexamples.push(Counterexample {
                        n,
                        edges: g.edges().map(|(u, v)| [u, v]).collect(),
                        q,
                        reason,
                    });
                }
            }
        }
    }
    Ok(summary)
}

/// `None` when every check passes, otherwise the first failure.
fn check_one(g: &Graph, q: Color, with_oracle: bool) -> Option<String> {
    let result = match solve(g, q, SolveMode::Exact) {
        Ok(result) => result,
        Err(e) => return Some(format!("solver error: {e}")),
    };
    let report = verify_backbone_coloring(g, result.tree.as_slice(), result.coloring.colors(), q);
    if !report.ok() {
        return Some(format!("verification failed: {report:?}"));
    }
    let target = target_k(result.t, q);
    if result.k_achieved != target {
        return Some(format!(
            "k_achieved {} differs from target {target} (chi = {})",
            result.k_achieved, result.t
        ));
    }
    if with_oracle {
        match best_tree_exact(g, q, DEFAULT_TREE_CAP) {
            Ok(best) if best.value == result.k_achieved => {}
            Ok(best) => {
                return Some(format!(
                    "oracle best tree gives {} but solver achieved {}",
                    best.value, result.k_achieved
                ))
            }
            Err(e) => return Some(format!("oracle error: {e}")),
        }
    }
    None
}
