//! JSON form of a [`SolveResult`].

use serde::{Deserialize, Serialize};

use super::{SolveMode, SolveResult, SwapCase, TraceStep};
use crate::coloring::Color;

/// Solver output as written by `bbt solve`. Field order is fixed, so the
/// serialized bytes are a deterministic function of the input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solution {
    pub n: usize,
    pub q: Color,
    pub k_achieved: Color,
    pub k_target: Color,
    /// 1-based colors indexed by 0-based vertex.
    pub colors: Vec<Color>,
    /// 0-based `[u, v]` pairs with `u < v`, sorted.
    pub tree: Vec<[usize; 2]>,
    pub iterations: usize,
    pub mode: SolveMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceEntry>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub case: SwapCase,
    pub edge: [usize; 2],
    pub color: Color,
    pub component_before: usize,
    pub component_after: usize,
}

impl From<&TraceStep> for TraceEntry {
    fn from(step: &TraceStep) -> Self {
        Self {
            case: step.case,
            edge: [step.edge.0, step.edge.1],
            color: step.color,
            component_before: step.component_before,
            component_after: step.component_after,
        }
    }
}

impl SolveResult {
    pub fn to_solution(&self, with_trace: bool) -> Solution {
        Solution {
            n: self.coloring.len(),
            q: self.q,
            k_achieved: self.k_achieved,
            k_target: self.k_target,
            colors: self.coloring.colors().to_vec(),
            tree: self.tree.iter().map(|&(u, v)| [u, v]).collect(),
            iterations: self.iterations,
            mode: self.mode,
            trace: with_trace.then(|| self.trace.iter().map(TraceEntry::from).collect()),
        }
    }
}

impl Solution {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("solution serializes")
    }
}

#[cfg(test)]
mod tests {
    use crate::backbone::{solve, SolveMode};
    use crate::graph::{generate, GraphFamily};

    #[test]
    fn schema() {
        let g = generate(&GraphFamily::Complete(3)).unwrap();
        let json = solve(&g, 2, SolveMode::Exact).unwrap().to_solution(false).to_json();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        let keys: Vec<&str> = value.as_object().unwrap().keys().map(String::as_str).collect();
        let mut expected = vec!["n", "q", "k_achieved", "k_target", "colors", "tree", "iterations", "mode"];
        expected.sort_unstable();
        let mut keys = keys;
        keys.sort_unstable();
        assert_eq!(keys, expected);
        assert_eq!(value["mode"], "exact");
        assert_eq!(value["k_achieved"], 4);
        assert!(json.starts_with(r#"{"n":3,"q":2,"k_achieved":4,"k_target":4,"colors":["#));
    }
}
