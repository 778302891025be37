//! Independent sets: `α(G)`, the family `Ω(G)` of maximum independent sets,
//! `core`/`corona`, and Berge's matchability test.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::{bipartite_pairs, Matching};
use crate::set::VertexSet;
use crate::Limits;

/// `Ω(G)` (or a sub-family `Λ ⊆ Ω(G)`): distinct independent sets of size `alpha`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaFamily {
    pub alpha: usize,
    pub sets: Vec<VertexSet>,
    /// Set when the enumeration ran to completion.
    pub complete: bool,
}

impl OmegaFamily {
    /// Intersection of the members (`core` when this is all of `Ω`).
    pub fn intersection(&self) -> VertexSet {
        intersection_of(&self.sets)
    }

    /// Union of the members (`corona` when this is all of `Ω`).
    pub fn union(&self) -> VertexSet {
        union_of(&self.sets)
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

pub(crate) fn intersection_of(sets: &[VertexSet]) -> VertexSet {
    let mut it = sets.iter();
    match it.next() {
        Some(&first) => it.fold(first, |acc, &s| acc & s),
        None => VertexSet::EMPTY,
    }
}

pub(crate) fn union_of(sets: &[VertexSet]) -> VertexSet {
    sets.iter().fold(VertexSet::EMPTY, |acc, &s| acc | s)
}

pub fn is_independent(g: &Graph, x: VertexSet) -> bool {
    g.is_independent(x)
}

/// Max-degree vertex of `g[cand]` and its degree there; ties go to the smallest id.
#[inline]
fn pivot(g: &Graph, cand: VertexSet) -> (usize, usize) {
    let mut best = (usize::MAX, 0usize);
    for v in cand {
        let d = (g.neighbors(v) & cand).len();
        if best.0 == usize::MAX || d > best.1 {
            best = (v, d);
        }
    }
    best
}

/// `α(G)` by branch and bound: branch on a max-degree vertex (include /
/// exclude), prune when `size + |candidates| <= best`.
pub fn independence_number(g: &Graph) -> usize {
    fn go(g: &Graph, cand: VertexSet, size: usize, best: &mut usize) {
        if size + cand.len() <= *best {
            return;
        }
        let (v, deg) = pivot(g, cand);
        if cand.is_empty() || deg == 0 {
            *best = size + cand.len();
            return;
        }
        go(g, cand - g.closed_neighborhood(VertexSet::singleton(v)), size + 1, best);
        go(g, cand.without(v), size, best);
    }
    let mut best = 0;
    go(g, g.vertices(), 0, &mut best);
    best
}

/// Every maximum independent set, sorted lexicographically. Branches that
/// cannot reach `α` are cut; exceeding `limits.set_cap` is an error.
pub fn maximum_independent_sets(g: &Graph, limits: &Limits) -> Result<OmegaFamily> {
    let alpha = independence_number(g);
    struct Ctx<'a> {
        g: &'a Graph,
        alpha: usize,
        cap: usize,
        out: Vec<VertexSet>,
    }
    fn go(cx: &mut Ctx, cand: VertexSet, cur: VertexSet) -> Result<()> {
        if cur.len() + cand.len() < cx.alpha {
            return Ok(());
        }
        let (v, deg) = pivot(cx.g, cand);
        if cand.is_empty() || deg == 0 {
            // cur ∪ cand is independent, so its size is exactly alpha here
            if cx.out.len() == cx.cap {
                return Err(Error::EnumerationCap {
                    what: "maximum independent sets",
                    cap: cx.cap,
                });
            }
            cx.out.push(cur | cand);
            return Ok(());
        }
        go(cx, cand - cx.g.closed_neighborhood(VertexSet::singleton(v)), cur.with(v))?;
        go(cx, cand.without(v), cur)
    }
    let mut cx = Ctx {
        g,
        alpha,
        cap: limits.set_cap,
        out: Vec::new(),
    };
    go(&mut cx, g.vertices(), VertexSet::EMPTY)?;
    let mut sets = cx.out;
    sets.sort_by(|a, b| a.cmp_lex(*b));
    Ok(OmegaFamily {
        alpha,
        sets,
        complete: true,
    })
}

/// Every independent set (including `∅`), sorted lexicographically.
pub fn independent_sets(g: &Graph, limits: &Limits) -> Result<Vec<VertexSet>> {
    let mut out = Vec::new();
    fn go(g: &Graph, cur: VertexSet, cand: VertexSet, cap: usize, out: &mut Vec<VertexSet>) -> Result<()> {
        if out.len() == cap {
            return Err(Error::EnumerationCap {
                what: "independent sets",
                cap,
            });
        }
        out.push(cur);
        for v in cand {
            let later = VertexSet::from_bits(cand.bits() & u64::MAX.checked_shl(v as u32 + 1).unwrap_or(0));
            go(g, cur.with(v), later - g.neighbors(v), cap, out)?;
        }
        Ok(())
    }
    go(g, VertexSet::EMPTY, g.vertices(), limits.set_cap, &mut out)?;
    out.sort_by(|a, b| a.cmp_lex(*b));
    Ok(out)
}

pub fn core(g: &Graph, limits: &Limits) -> Result<VertexSet> {
    Ok(maximum_independent_sets(g, limits)?.intersection())
}

pub fn corona(g: &Graph, limits: &Limits) -> Result<VertexSet> {
    Ok(maximum_independent_sets(g, limits)?.union())
}

/// Whether the independent set `s` can be matched into the disjoint set `x`
/// using edges of `g`; the saturating matching is returned when it can.
pub fn berge_matchable(g: &Graph, s: VertexSet, x: VertexSet) -> Result<Option<Matching>> {
    let overlap = s & x;
    if !overlap.is_empty() {
        return Err(Error::Precondition(format!(
            "s and x share {}",
            g.render(overlap)
        )));
    }
    if let Some(v) = ((s | x) - g.vertices()).first() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let inner = g.neighborhood(s) & s;
    if !inner.is_empty() {
        return Err(Error::Precondition(format!(
            "s is not independent: {} have neighbors inside s",
            g.render(inner)
        )));
    }
    Ok(matching_into(g, s, x))
}

/// Matching saturating `from` with partners in `into`, if one exists.
/// No independence or disjointness checks.
pub(crate) fn matching_into(g: &Graph, from: VertexSet, into: VertexSet) -> Option<Matching> {
    let pairs = bipartite_pairs(from, |v| g.neighbors(v) & into);
    (pairs.len() == from.len()).then(|| Matching::from_pairs(pairs).expect("bipartite pairs are disjoint"))
}

/// Whether a matching saturating `from` into `into` exists.
pub(crate) fn can_match_into(g: &Graph, from: VertexSet, into: VertexSet) -> bool {
    // Hall's condition fails fast on a vertex with no partner at all
    if from.iter().any(|v| (g.neighbors(v) & into).is_empty()) {
        return false;
    }
    bipartite_pairs(from, |v| g.neighbors(v) & into).len() == from.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture;
    use crate::generate::{make_graph, GraphSpec};

    fn g(spec: GraphSpec) -> Graph {
        make_graph(&spec).unwrap()
    }

    fn brute_alpha(g: &Graph) -> usize {
        (0..1u64 << g.n())
            .map(VertexSet::from_bits)
            .filter(|&s| g.is_independent(s))
            .map(|s| s.len())
            .max()
            .unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn independence_examples() {
        let k3 = g(GraphSpec::Complete { n: 3 });
        assert!(!is_independent(&k3, set(&[0, 1])));
        assert!(is_independent(&k3, VertexSet::EMPTY));
        let f2 = fixture("fig2").unwrap();
        assert!(is_independent(&f2, f2.set_of(&["v1", "v2", "v3", "v6", "v7"])));
    }

    #[test]
    fn alpha_examples() {
        let c5 = g(GraphSpec::Cycle { n: 5 });
        assert_eq!(brute_alpha(&c5), 2);
        assert_eq!(independence_number(&c5), 2);
        assert_eq!(independence_number(&g(GraphSpec::Empty { n: 6 })), 6);
        assert_eq!(independence_number(&Graph::empty(0).unwrap()), 0);
        assert_eq!(independence_number(&fixture("fig1-g1").unwrap()), 5);
    }

    #[test]
    fn omega_examples() {
        let c4 = g(GraphSpec::Cycle { n: 4 });
        let om = maximum_independent_sets(&c4, &Limits::default()).unwrap();
        assert_eq!(om.sets, vec![set(&[0, 2]), set(&[1, 3])]);
        assert!(om.complete);

        let k4 = g(GraphSpec::Complete { n: 4 });
        let om = maximum_independent_sets(&k4, &Limits::default()).unwrap();
        assert_eq!(om.sets, (0..4).map(VertexSet::singleton).collect::<Vec<_>>());
        assert_eq!(om.intersection(), VertexSet::EMPTY);
        assert_eq!(om.union(), k4.vertices());

        let f3 = fixture("fig3").unwrap();
        let om = maximum_independent_sets(&f3, &Limits::default()).unwrap();
        let mut expect = vec![
            f3.set_of(&["x", "y", "u"]),
            f3.set_of(&["x", "y", "w"]),
            f3.set_of(&["x", "y", "v"]),
        ];
        expect.sort_by(|a, b| a.cmp_lex(*b));
        assert_eq!(om.sets, expect);
    }

    #[test]
    fn omega_of_empty_graph_is_the_empty_set() {
        let om = maximum_independent_sets(&Graph::empty(0).unwrap(), &Limits::default()).unwrap();
        assert_eq!(om.sets, vec![VertexSet::EMPTY]);
    }

    #[test]
    fn omega_cap_is_an_error() {
        // perfect matching on 8 vertices: 2^4 = 16 maximum independent sets
        let pm = Graph::from_edge_list(8, &[(0, 1), (2, 3), (4, 5), (6, 7)]).unwrap();
        let err = maximum_independent_sets(&pm, &Limits { set_cap: 15 }).unwrap_err();
        assert!(matches!(err, Error::EnumerationCap { cap: 15, .. }));
        assert_eq!(maximum_independent_sets(&pm, &Limits { set_cap: 16 }).unwrap().len(), 16);
    }

    #[test]
    fn core_corona_examples() {
        let f2 = fixture("fig2").unwrap();
        let lim = Limits::default();
        assert_eq!(core(&f2, &lim).unwrap(), f2.set_of(&["v1", "v2", "v6", "v10"]));
        let k3 = g(GraphSpec::Complete { n: 3 });
        assert_eq!(core(&k3, &lim).unwrap(), VertexSet::EMPTY);
        assert_eq!(corona(&k3, &lim).unwrap(), k3.vertices());
        let g2 = fixture("fig1-g2").unwrap();
        assert_eq!(corona(&g2, &lim).unwrap(), g2.vertices() - g2.set_of(&["v1", "v6"]));
    }

    #[test]
    fn independent_set_listing() {
        let p3 = g(GraphSpec::Path { n: 3 });
        let all = independent_sets(&p3, &Limits::default()).unwrap();
        assert_eq!(all, vec![VertexSet::EMPTY, set(&[0]), set(&[0, 2]), set(&[1]), set(&[2])]);
        assert!(independent_sets(&g(GraphSpec::Empty { n: 5 }), &Limits { set_cap: 31 }).is_err());
    }

    #[test]
    fn berge_examples() {
        let p3 = g(GraphSpec::Path { n: 3 });
        let w = berge_matchable(&p3, set(&[1]), set(&[0, 2])).unwrap().unwrap();
        assert_eq!(w.size(), 1);

        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(berge_matchable(&star, set(&[1, 2]), set(&[0])).unwrap().is_none());

        let c4 = g(GraphSpec::Cycle { n: 4 });
        let w = berge_matchable(&c4, set(&[0, 2]), set(&[1, 3])).unwrap().unwrap();
        assert_eq!(w.size(), 2);
        assert!(w.is_valid_in(&c4));
    }

    #[test]
    fn berge_preconditions() {
        let p3 = g(GraphSpec::Path { n: 3 });
        assert!(matches!(
            berge_matchable(&p3, set(&[0, 1]), set(&[2])),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            berge_matchable(&p3, set(&[0]), set(&[0, 1])),
            Err(Error::Precondition(_))
        ));
    }
}
