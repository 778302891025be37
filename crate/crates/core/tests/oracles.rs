//! Fast algorithms against brute-force oracles on small graphs.

use diadem_core::generate::ErdosRenyi;
use diadem_core::harness::StreamSpec;
use diadem_core::oracle::brute_force_profile;
use diadem_core::{
    berge_matchable, brute_force_mu, critical_difference, enumerate_critical_independent_sets, is_koenig_egervary,
    make_graph, matching_number, maximum_independent_sets, Graph, GraphSpec, Limits, VertexSet,
};

fn graphs(max_n: usize) -> impl Iterator<Item = Graph> {
    StreamSpec::exhaustive(0, max_n).iter().unwrap().map(|it| it.unwrap().graph)
}

fn subsets(s: VertexSet) -> impl Iterator<Item = VertexSet> {
    let bits = s.bits();
    let mut sub = Some(0u64);
    std::iter::from_fn(move || {
        let cur = sub?;
        sub = if cur == bits { None } else { Some((cur.wrapping_sub(bits)) & bits) };
        Some(VertexSet::from_bits(cur))
    })
}

#[test]
fn omega_matches_subset_scan() {
    for g in graphs(6) {
        let fast = maximum_independent_sets(&g, &Limits::default()).unwrap();
        let o = brute_force_profile(&g).unwrap();
        assert_eq!(fast.alpha, o.alpha);
        assert_eq!(fast.sets, o.omega);
        assert_eq!(fast.intersection(), o.core);
        assert_eq!(fast.union(), o.corona);
    }
}

#[test]
fn blossom_matches_brute_force() {
    for g in graphs(7) {
        assert_eq!(matching_number(&g), brute_force_mu(&g, 64).unwrap());
    }
    for p in [0.2, 0.5] {
        let mut gen = ErdosRenyi::new(10, p, 7).unwrap();
        for _ in 0..500 {
            let g = gen.sample();
            assert_eq!(matching_number(&g), brute_force_mu(&g, 64).unwrap());
        }
    }
}

#[test]
fn berge_matchable_agrees_with_hall() {
    for g in graphs(5) {
        let all = g.vertices();
        for s in subsets(all).filter(|&s| g.is_independent(s)) {
            for x in subsets(all - s) {
                let hall = subsets(s).all(|a| (g.neighborhood(a) & x).len() >= a.len());
                let m = berge_matchable(&g, s, x).unwrap();
                assert_eq!(m.is_some(), hall);
                if let Some(m) = m {
                    assert!(m.is_valid_in(&g));
                    assert_eq!(m.size(), s.len());
                    assert!(m.saturated().is_subset(s | x));
                }
            }
        }
    }
}

#[test]
fn critical_structure_matches_oracle() {
    for g in graphs(6) {
        let o = brute_force_profile(&g).unwrap();
        assert_eq!(critical_difference(&g), o.d);
        assert_eq!(o.d, o.id);
        let fast = enumerate_critical_independent_sets(&g, &Limits::default()).unwrap();
        assert_eq!(fast, o.critical_independent);
        assert_eq!(is_koenig_egervary(&g), o.ke);
        assert_eq!(matching_number(&g), o.mu);
    }
}

#[test]
fn random_twelve_vertex_graphs_match_oracle() {
    let mut gen = ErdosRenyi::new(12, 0.25, 11).unwrap();
    for _ in 0..100 {
        let g = gen.sample();
        let o = brute_force_profile(&g).unwrap();
        let lim = Limits::default();
        assert_eq!(critical_difference(&g), o.d);
        assert_eq!(diadem_core::kernel(&g, &lim).unwrap(), o.ker);
        assert_eq!(diadem_core::diadem(&g, &lim).unwrap(), o.diadem);
    }
}

#[test]
fn bipartite_graphs_and_double_covers_are_ke() {
    for g in graphs(6) {
        if g.is_bipartite() {
            assert!(is_koenig_egervary(&g));
        }
        let cover = g.bipartite_double_cover().unwrap().graph;
        assert!(cover.is_bipartite());
        assert!(is_koenig_egervary(&cover));
    }
    for (l, r) in [(1, 1), (2, 5), (4, 4)] {
        let g = make_graph(&GraphSpec::CompleteBipartite { left: l, right: r }).unwrap();
        assert!(is_koenig_egervary(&g));
        assert_eq!(matching_number(&g), l.min(r));
    }
}

#[test]
fn alpha_plus_mu_is_at_most_n() {
    for g in graphs(6) {
        let o = brute_force_profile(&g).unwrap();
        assert!(o.alpha + o.mu <= g.n());
        if o.ke {
            assert_eq!(o.d, o.alpha as i64 - o.mu as i64);
        }
    }
}
