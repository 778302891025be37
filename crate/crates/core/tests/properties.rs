use proptest::prelude::*;

use diadem_core::oracle::brute_force_profile;
use diadem_core::{
    core, corona, critical_difference, critical_profile, diadem, independence_critical_difference, is_critical,
    kernel, maximum_independent_sets, parse_graph6, to_graph6, Graph, Limits, VertexSet,
};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

fn graph_and_set(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    graph(max_n).prop_flat_map(|g| {
        let full = VertexSet::full(g.n()).bits();
        (Just(g), any::<u64>().prop_map(move |b| VertexSet::from_bits(b & full)))
    })
}

fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.n();
    let mut edges = a.edges();
    edges.extend(b.edges().into_iter().map(|(u, v)| (u + shift, v + shift)));
    Graph::from_edge_list(a.n() + b.n(), &edges).unwrap()
}

proptest! {
    #[test]
    fn graph6_round_trip(g in graph(20)) {
        let s = to_graph6(&g).unwrap();
        let back = parse_graph6(&s).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(to_graph6(&back).unwrap(), s);
    }

    #[test]
    fn neighborhood_is_monotone((g, x) in graph_and_set(14), mask in any::<u64>()) {
        let y = x & VertexSet::from_bits(mask);
        prop_assert!(g.neighborhood(y).is_subset(g.neighborhood(x)));
        prop_assert!(g.difference(x) <= critical_difference(&g));
    }

    #[test]
    fn d_adds_over_disjoint_union(a in graph(8), b in graph(8)) {
        let u = disjoint_union(&a, &b);
        prop_assert_eq!(critical_difference(&u), critical_difference(&a) + critical_difference(&b));
    }

    #[test]
    fn double_cover_doubles_degrees(g in graph(16)) {
        let cover = g.bipartite_double_cover().unwrap();
        let n = g.n();
        for v in 0..n {
            prop_assert_eq!(cover.graph.degree(v), g.degree(v));
            prop_assert_eq!(cover.graph.degree(n + v), g.degree(v));
        }
        prop_assert_eq!(cover.graph.edge_count(), 2 * g.edge_count());
    }

    #[test]
    fn maximum_sets_lie_between_core_and_corona(g in graph(14)) {
        let lim = Limits::default();
        let omega = maximum_independent_sets(&g, &lim).unwrap();
        let (c, k) = (core(&g, &lim).unwrap(), corona(&g, &lim).unwrap());
        for s in &omega.sets {
            prop_assert!(c.is_subset(*s) && s.is_subset(k));
            prop_assert_eq!(s.len(), omega.alpha);
            prop_assert!(g.is_independent(*s));
        }
    }

    #[test]
    fn critical_sets_form_a_lattice((g, x) in graph_and_set(12), mask in any::<u64>()) {
        let full = VertexSet::full(g.n()).bits();
        let y = VertexSet::from_bits(mask & full);
        let d = critical_difference(&g);
        if g.difference(x) == d && g.difference(y) == d {
            prop_assert!(is_critical(&g, x | y));
            prop_assert!(is_critical(&g, x & y));
        }
        prop_assert!(g.difference(x | y) + g.difference(x & y) >= g.difference(x) + g.difference(y));
    }

    #[test]
    fn d_equals_independence_d(g in graph(16)) {
        prop_assert_eq!(critical_difference(&g), independence_critical_difference(&g));
    }

    #[test]
    fn ker_and_diadem_sit_inside_core_and_corona(g in graph(14)) {
        let lim = Limits::default();
        let p = critical_profile(&g, &lim).unwrap();
        prop_assert!(p.ker.is_subset(core(&g, &lim).unwrap()));
        prop_assert!(p.diadem.is_subset(corona(&g, &lim).unwrap()));
        prop_assert!(is_critical(&g, p.ker) && is_critical(&g, p.diadem));
        prop_assert!(p.max_critical_independent.len() <= p.diadem.len());
    }

    #[test]
    fn fast_path_equals_oracle(g in graph(12)) {
        let lim = Limits::default();
        let o = brute_force_profile(&g).unwrap();
        prop_assert_eq!(critical_difference(&g), o.d);
        prop_assert_eq!(kernel(&g, &lim).unwrap(), o.ker);
        prop_assert_eq!(diadem(&g, &lim).unwrap(), o.diadem);
        prop_assert_eq!(core(&g, &lim).unwrap(), o.core);
        prop_assert_eq!(corona(&g, &lim).unwrap(), o.corona);
    }
}
