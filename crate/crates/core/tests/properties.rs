use bbt::backbone::{q_subgraph, target_k, verify_backbone_coloring};
use bbt::coloring::{exact_chromatic, spread_coloring, DEFAULT_NODE_BUDGET};
use bbt::graph::{enumerate_connected, is_spanning_tree, parse_dimacs, write_dimacs};
use bbt::oracle::{bbc_exact, chromatic_number, enumerate_spanning_trees, BackboneInstance};
use bbt::{solve, EdgeSet, Graph, SolveMode, VertexSet};
use proptest::prelude::*;
use proptest::sample::Index;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let edges: Vec<_> = pairs(n)
                .into_iter()
                .zip(bits)
                .filter_map(|(e, keep)| keep.then_some(e))
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn connected_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        (
            prop::collection::vec(any::<Index>(), n - 1),
            prop::collection::vec(any::<bool>(), n * (n - 1) / 2),
        )
            .prop_map(move |(parents, bits)| {
                let mut edges: Vec<_> = pairs(n)
                    .into_iter()
                    .zip(bits)
                    .filter_map(|(e, keep)| keep.then_some(e))
                    .collect();
                for (i, p) in parents.iter().enumerate() {
                    let v = i + 1;
                    let u = p.index(v);
                    if !edges.contains(&(u, v)) {
                        edges.push((u, v));
                    }
                }
                Graph::from_edges(n, &edges).unwrap()
            })
    })
}

fn subset(edges: &EdgeSet, bits: &[bool]) -> EdgeSet {
    edges
        .iter()
        .zip(bits.iter().cycle())
        .filter_map(|(&e, &keep)| keep.then_some(e))
        .collect()
}

proptest! {
    #[test]
    fn components_partition_vertices(g in any_graph(10), bits in prop::collection::vec(any::<bool>(), 1..45)) {
        let restrict = subset(&g.edge_set(), &bits);
        let components = g.connected_components(Some(&restrict)).unwrap();
        let mut seen = VertexSet::new(g.n());
        for component in &components {
            prop_assert!(!component.is_empty());
            for v in component.iter() {
                prop_assert!(seen.insert(v));
            }
        }
        prop_assert_eq!(seen.len(), g.n());
        for &(u, v) in restrict.iter() {
            prop_assert!(components.iter().any(|c| c.contains(u) && c.contains(v)));
        }
    }

    #[test]
    fn cut_edges_split_the_edge_set(g in any_graph(10), side in prop::collection::vec(any::<bool>(), 10)) {
        let h = VertexSet::from_vertices(g.n(), (0..g.n()).filter(|&v| side[v]));
        let cut = g.cut_edges(&h);
        for &(u, v) in &cut {
            prop_assert!(h.contains(u) && !h.contains(v));
            prop_assert!(g.has_edge(u, v));
        }
        let crossing = g.edges().filter(|&(u, v)| h.contains(u) != h.contains(v)).count();
        prop_assert_eq!(cut.len(), crossing);
        let mut sorted = cut.clone();
        sorted.sort_unstable();
        prop_assert_eq!(sorted, cut);
    }

    #[test]
    fn bfs_tree_spans(g in connected_graph(1, 12), root in any::<Index>()) {
        let tree = g.bfs_spanning_tree(&g.edge_set(), root.index(g.n())).unwrap();
        prop_assert!(is_spanning_tree(g.n(), tree.as_slice()));
        prop_assert!(tree.iter().all(|&(u, v)| g.has_edge(u, v)));
    }

    #[test]
    fn dimacs_roundtrip(g in any_graph(12)) {
        let text = write_dimacs(&g);
        let back = parse_dimacs(text.as_bytes()).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_dimacs(&back), text);
    }

    #[test]
    fn target_equals_chi_iff_small_gap(t in 1u32..200, q in 1u32..200) {
        prop_assert_eq!(target_k(t, q) == t, q <= t / 2);
        prop_assert!(target_k(t, q) >= t);
        prop_assert!(target_k(t, q) >= t.div_ceil(2) + q);
    }

    #[test]
    fn spread_coloring_fits_any_tree(g in connected_graph(2, 7), q in 1u32..5, pick in any::<Index>()) {
        let chi = exact_chromatic(&g, DEFAULT_NODE_BUDGET).unwrap();
        let spread = spread_coloring(&chi.witness, q);
        let trees = enumerate_spanning_trees(&g, 20_000).unwrap();
        let tree = &trees[pick.index(trees.len())];
        let report = verify_backbone_coloring(&g, tree.as_slice(), spread.colors(), q);
        prop_assert!(report.ok());
        prop_assert_eq!(report.k_used, q * (chi.chi - 1) + 1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bbc_monotone_in_backbone(
        g in connected_graph(2, 7),
        outer in prop::collection::vec(any::<bool>(), 1..21),
        inner in prop::collection::vec(any::<bool>(), 1..21),
        q in 1u32..4,
    ) {
        let big = subset(&g.edge_set(), &outer);
        let small = subset(&big, &inner);
        let a = bbc_exact(&BackboneInstance::new(g.clone(), small).unwrap(), q).unwrap();
        let b = bbc_exact(&BackboneInstance::new(g.clone(), big).unwrap(), q).unwrap();
        prop_assert!(a.value <= b.value);
    }

    #[test]
    fn full_backbone_within_spread(g in connected_graph(2, 7), q in 1u32..4) {
        let chi = chromatic_number(&g).unwrap().value;
        let full = bbc_exact(&BackboneInstance::new(g.clone(), g.edge_set()).unwrap(), q).unwrap();
        prop_assert!(full.value <= q * (chi - 1) + 1);
        prop_assert!(full.value >= chi);
        if q == 2 {
            prop_assert!(full.value < 2 * chi);
        }
    }

    #[test]
    fn solver_output_verifies(g in connected_graph(2, 9), q in 1u32..6) {
        let out = solve(&g, q, SolveMode::Exact).unwrap();
        let chi = chromatic_number(&g).unwrap().value;
        prop_assert_eq!(out.k_target, target_k(chi, q));
        prop_assert!(out.k_achieved <= out.k_target);
        let report = verify_backbone_coloring(&g, out.tree.as_slice(), out.coloring.colors(), q);
        prop_assert!(report.ok());
        let sub = q_subgraph(&g, &out.coloring, q);
        prop_assert_eq!(g.connected_components(Some(&sub)).unwrap().len(), 1);
        prop_assert!(out.tree.iter().all(|&(u, v)| sub.contains(u, v)));
    }
}

fn connected_by_matrix(n: usize, mask: u64, all: &[(usize, usize)]) -> bool {
    let mut adj = vec![vec![false; n]; n];
    for (i, &(u, v)) in all.iter().enumerate() {
        if mask >> i & 1 == 1 {
            adj[u][v] = true;
            adj[v][u] = true;
        }
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if adj[u][v] && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

#[test]
fn enumeration_matches_brute_force_filter() {
    for n in 1..=5 {
        let all = pairs(n);
        let expected: Vec<Vec<(usize, usize)>> = (0u64..1 << all.len())
            .filter(|&mask| connected_by_matrix(n, mask, &all))
            .map(|mask| {
                let mut edges: Vec<_> = (0..all.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| all[i])
                    .collect();
                edges.sort_unstable();
                edges
            })
            .collect();
        let mut got: Vec<Vec<(usize, usize)>> = enumerate_connected(n)
            .unwrap()
            .map(|g| g.edges().collect())
            .collect();
        let mut expected_sorted = expected.clone();
        expected_sorted.sort();
        got.sort();
        assert_eq!(got, expected_sorted, "n = {n}");
    }
}
