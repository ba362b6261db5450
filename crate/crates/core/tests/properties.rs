use proptest::prelude::*;

use chroma_core::cli::{emit_dimacs, emit_instance, parse_dimacs, parse_instance, InstanceFile};
use chroma_core::colouring::{
    brooks_colour, brute_force_decide, list_colour_bounded_td, ListAssignment,
};
use chroma_core::graph::{EdgeId, Graph, SignedPath};
use chroma_core::pattern::{contains_subgraph, is_subgraph_free, PatternSpec};
use chroma_core::reduce::{preprocess_h, preprocess_s, Preprocessed, StepKind};
use chroma_core::solver::{
    solve_colouring_H, solve_colouring_S, solve_stable_cut, verify_certificate, SolverConfig,
    Verdict,
};
use chroma_core::treedepth::{treedepth_exact, validate_elimination_forest};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::weighted(0.35), n * (n - 1) / 2).prop_map(
            move |bits| {
                let mut e = Vec::new();
                let mut it = bits.into_iter();
                for a in 0..n {
                    for b in a + 1..n {
                        if it.next().unwrap() {
                            e.push((a, b));
                        }
                    }
                }
                Graph::from_edges(n, &e)
            },
        )
    })
}

fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("connected", |g| g.is_connected())
}

fn td(g: &Graph) -> usize {
    treedepth_exact(g, g.vertex_count()).value().unwrap()
}

/// Longest simple path (in edges) by exhaustive DFS.
fn longest_path(g: &Graph) -> usize {
    fn go(g: &Graph, v: usize, seen: &mut Vec<bool>) -> usize {
        let mut best = 0;
        for &w in g.neighbours(v) {
            if !seen[w] {
                seen[w] = true;
                best = best.max(1 + go(g, w, seen));
                seen[w] = false;
            }
        }
        best
    }
    let mut seen = vec![false; g.id_bound()];
    g.vertices()
        .map(|v| {
            seen[v] = true;
            let l = go(g, v, &mut seen);
            seen[v] = false;
            l
        })
        .max()
        .unwrap_or(0)
}

fn cfg(k: usize) -> SolverConfig {
    SolverConfig {
        k,
        ..SolverConfig::default()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graphs_are_simple_and_symmetric(g in graph(12)) {
        let degree_sum: usize = g.vertices().map(|v| g.degree(v)).sum();
        prop_assert_eq!(degree_sum, 2 * g.edge_count());
        for v in g.vertices() {
            let n = g.neighbours(v);
            prop_assert!(n.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(!n.contains(&v));
            prop_assert!(n.iter().all(|&w| g.neighbours(w).contains(&v)));
        }
    }

    #[test]
    fn subdividing_bridges(g in connected(10), pick in any::<prop::sample::Index>()) {
        let edges: Vec<EdgeId> = g.edges().collect();
        prop_assume!(!edges.is_empty());
        let e = edges[pick.index(edges.len())];
        let before = g.bridges().len();
        let is_bridge = g.bridges().iter().any(|b| b.edge == e);
        let h = g.subdivide_edge(e, 1).unwrap();
        prop_assert_eq!(h.bridges().len(), before + usize::from(is_bridge));
    }

    #[test]
    fn blocks_partition_edges(g in graph(11)) {
        let blocks = g.biconnected_components();
        for e in g.edges() {
            let holding = blocks
                .iter()
                .filter(|b| b.contains(&e.u) && b.contains(&e.v))
                .count();
            prop_assert_eq!(holding, 1);
        }
    }

    #[test]
    fn signed_slices(n in 1usize..20, i in 1isize..20, j in 1isize..20, neg in any::<bool>()) {
        let p = SignedPath::from_vertices((100..100 + n).collect());
        prop_assert_eq!(p.slice(1, -1).unwrap(), p.clone());
        prop_assert_eq!(p.length(), n - 1);
        prop_assume!(i as usize <= n && j as usize <= n);
        let a = p.slice(i, j).unwrap();
        prop_assert_eq!(&a, &p.slice(j, i).unwrap());
        prop_assert_eq!(a.len(), i.abs_diff(j) + 1);
        if neg {
            let ni = i - n as isize - 1;
            prop_assert_eq!(&a, &p.slice(ni, j).unwrap());
        }
    }

    #[test]
    fn pattern_sizes(i in 1usize..5, a in 1usize..4, b in 1usize..4, c in 1usize..4, d in 1usize..4) {
        let h = PatternSpec::h_graph(i, [a, b, c, d]).unwrap().instantiate().unwrap();
        prop_assert_eq!(h.graph.edge_count(), i + a + b + c + d);
        prop_assert_eq!(h.graph.vertex_count(), i + a + b + c + d + 1);
        let s = PatternSpec::star(&[a, b, c, d]).unwrap();
        let s = s.instantiate().unwrap();
        prop_assert_eq!(s.graph.edge_count(), a + b + c + d);
    }

    #[test]
    fn freeness_is_monotone(g in graph(10), drop in any::<prop::sample::Index>()) {
        let spec = PatternSpec::s1kkk(1);
        if is_subgraph_free(&g, &spec).unwrap() {
            let vs = g.vertex_list();
            let v = vs[drop.index(vs.len())];
            prop_assert!(is_subgraph_free(&g.delete_vertices(&[v]), &spec).unwrap());
            if let Some(e) = g.edges().next() {
                prop_assert!(is_subgraph_free(&g.delete_edges(&[e]), &spec).unwrap());
            }
        }
    }

    #[test]
    fn paths_and_embeddings(g in graph(9), len in 1usize..8) {
        let spec = PatternSpec::Path(len);
        let found = contains_subgraph(&g, &spec).unwrap();
        prop_assert_eq!(found.is_some(), longest_path(&g) >= len);
        if let Some(emb) = found {
            prop_assert!(emb.validate(&g));
        }
    }

    #[test]
    fn treedepth_properties(g in graph(10), drop in any::<prop::sample::Index>()) {
        let res = treedepth_exact(&g, 10);
        let d = res.value().unwrap();
        prop_assert!(validate_elimination_forest(&g, res.forest().unwrap()));
        prop_assert_eq!(res.forest().unwrap().height(), d);
        let vs = g.vertex_list();
        let v = vs[drop.index(vs.len())];
        let smaller = td(&g.delete_vertices(&[v]));
        prop_assert!(smaller <= d && d <= smaller + 1);
        if let Some(e) = g.edges().next() {
            prop_assert!(td(&g.delete_edges(&[e])) <= d);
        }
    }

    #[test]
    fn colouring_properties(g in graph(10), r in 1u32..4) {
        let c = brute_force_decide(&g, r);
        if let Some(c) = &c {
            prop_assert!(c.is_proper_within(&g, r));
            prop_assert!(brute_force_decide(&g, r + 1).is_some());
        }
        let res = treedepth_exact(&g, 10);
        let dp = list_colour_bounded_td(&g, res.forest().unwrap(), &ListAssignment::full(&g, r))
            .unwrap();
        prop_assert_eq!(dp.is_some(), c.is_some());
        if let Some(dp) = dp {
            prop_assert!(dp.is_proper_within(&g, r));
        }
    }

    #[test]
    fn brooks_bound(g in connected(12)) {
        let delta = g.max_degree().unwrap();
        prop_assume!(delta <= 3);
        let c = brooks_colour(&g).unwrap();
        prop_assert!(c.is_proper(&g));
        let n = g.vertex_count();
        let complete = g.edge_count() == n * (n - 1) / 2;
        let odd_cycle = delta == 2 && g.edge_count() == n && n % 2 == 1;
        let limit = if complete || odd_cycle { delta + 1 } else { delta.max(1) };
        prop_assert!(c.colours_used(&g) <= limit);
    }

    #[test]
    fn traces_replay_and_unwind(g in graph(12), r in 3u32..5, family_h in any::<bool>()) {
        let pre = if family_h { preprocess_h(&g, r, 1, 2) } else { preprocess_s(&g, r, 2) }.unwrap();
        let colourable = brute_force_decide(&g, r).is_some();
        let trace = pre.trace();
        prop_assert_eq!(&trace.replay().unwrap(), &trace.final_graph);
        let mut h = g.clone();
        for s in &trace.steps {
            let next = s.apply(&h).unwrap();
            if s.kind != StepKind::BridgeStrip {
                prop_assert!(next.vertex_count() < h.vertex_count());
            }
            h = next;
        }
        match &pre {
            Preprocessed::NoInstance(_) => prop_assert!(!colourable),
            Preprocessed::Reduced(t) => {
                let residual = brute_force_decide(&t.final_graph, r);
                prop_assert_eq!(residual.is_some(), colourable);
                if let Some(c) = residual {
                    let back = t.unwind(&c, r).unwrap();
                    prop_assert!(back.is_proper_within(&g, r));
                }
            }
        }
    }

    #[test]
    fn solver_is_sound(g in connected(12), r in 1u32..5) {
        let colourable = brute_force_decide(&g, r).is_some();
        for d in [solve_colouring_H(&g, r, &cfg(2)).unwrap(), solve_colouring_S(&g, r, &cfg(2)).unwrap()] {
            prop_assert!(verify_certificate(&g, &d));
            prop_assert!(!matches!(d.verdict, Verdict::CapExceeded(_)));
            prop_assert_eq!(d.is_yes(), colourable);
        }
    }

    #[test]
    fn stable_cut_is_sound(g in connected(11)) {
        if g.vertex_count() < 3 {
            prop_assert!(solve_stable_cut(&g, &SolverConfig::default()).is_err());
            return Ok(());
        }
        let d = solve_stable_cut(&g, &SolverConfig::default()).unwrap();
        prop_assert!(verify_certificate(&g, &d));
        prop_assert_eq!(d.is_yes(), chroma_core::solver::stable_cut_brute_force(&g).is_some());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn dimacs_round_trip(g in graph(15), seed in any::<u32>()) {
        prop_assert_eq!(parse_dimacs(&emit_dimacs(&g)).unwrap(), g.clone());
        let mut f = InstanceFile { graph: g, ..Default::default() };
        f.meta.insert("seed".into(), seed.to_string());
        prop_assert_eq!(parse_instance(&emit_instance(&f)).unwrap(), f);
    }
}
